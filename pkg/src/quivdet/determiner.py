"""Minimal right determiners and the functorial verification oracle.

The formula side computes the right minimal version, translates each
indecomposable summand of the intrinsic kernel forward with TrD, and adds the
projective cover of every simple in the socle of the cokernel.

The oracle side never trusts that computation.  For a test object Z the
subspace of maps Z -> Y factoring through f is the image of a composition map;
"determined" means that for every registry object V the maximal subspace
agreeing with those images on the candidate list collapses back onto the
factoring subspace; "almost factors" compares the factoring subspace against
the subspace of maps whose every radical precomposite factors.  All three are
intersections of preimages of subspaces under precomposition, computed as one
kernel per object.  On a complete registry (Dynkin quivers) the verdict is a
certificate; otherwise it is a bounded search and reports say so.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decompose import (
    decompose,
    indec_iso_witness,
    rad_hom_basis,
    right_minimal_version,
)
from .errors import SemanticError
from .linalg import Mat, Subspace, column_space, kernel_basis, solve
from .quiver import projective_at
from .reps import (
    HomSpace,
    RepMorphism,
    Representation,
    cokernel,
    dual_morphism,
    dual_representation,
    hom_basis,
    kernel,
    postcompose_matrix,
    precompose_matrix,
)
from .structure import socle_multiplicities
from .translate import IndecRegistry, knit, trd


@dataclass(frozen=True)
class DeterminerMember:
    label: str
    rep: Representation
    provenance: str

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return self.rep.dims


@dataclass(frozen=True)
class OracleVerdict:
    checked_objects: int
    determination_ok: bool
    determination_witness: str | None
    member_almost_factors: tuple[tuple[str, bool], ...]
    removal_breaks: tuple[tuple[str, str | None], ...]
    complete: bool

    @property
    def members_minimal(self) -> bool:
        return (all(ok for _, ok in self.member_almost_factors)
                and all(w is not None for _, w in self.removal_breaks))

    @property
    def certified(self) -> bool:
        return self.complete and self.determination_ok and self.members_minimal

    def passed(self) -> bool:
        """Exit-code relevant verdict: no counterexample found."""
        return self.determination_ok and self.members_minimal

    def to_json_dict(self) -> dict:
        return {
            "checked_objects": self.checked_objects,
            "determination_ok": self.determination_ok,
            "determination_witness": self.determination_witness,
            "member_almost_factors": [[l, ok] for l, ok in self.member_almost_factors],
            "removal_breaks": [[l, w] for l, w in self.removal_breaks],
            "complete": self.complete,
            "certified": self.certified,
        }


@dataclass(frozen=True)
class DeterminerReport:
    morphism_name: str
    field_name: str
    side: str                         # "right" or "left"
    domain_dims: tuple[int, ...]
    minimal_domain_dims: tuple[int, ...]
    split_off_dims: tuple[int, ...]
    split_epimorphism: bool
    intrinsic_kernel_labels: tuple[str, ...]
    soc_coker: tuple[tuple[str, int], ...]
    members: tuple[DeterminerMember, ...]
    registry_complete: bool
    registry_size: int
    oracle: OracleVerdict | None

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(m.label for m in self.members)

    def to_json_dict(self) -> dict:
        out = {
            "morphism": self.morphism_name,
            "field": self.field_name,
            "side": self.side,
            "right_minimal": {
                "domain_dims": list(self.domain_dims),
                "minimal_domain_dims": list(self.minimal_domain_dims),
                "split_off_dims": list(self.split_off_dims),
                "already_minimal": not any(self.split_off_dims),
                "split_epimorphism": self.split_epimorphism,
            },
            "trivial": self.split_epimorphism,
            "intrinsic_kernel": list(self.intrinsic_kernel_labels),
            "soc_coker": [{"vertex": v, "multiplicity": m} for v, m in self.soc_coker],
            "determiner": [
                {"label": m.label, "dim_vector": list(m.dim_vector), "provenance": m.provenance}
                for m in self.members
            ],
            "registry": {
                "complete": self.registry_complete,
                "size": self.registry_size,
            },
            "oracle": self.oracle.to_json_dict() if self.oracle else None,
        }
        if not self.registry_complete:
            out["registry"]["note"] = (
                "registry truncated: determination and almost-factorization "
                "quantify over the registered indecomposables only, so verdicts "
                "are bounded searches, not certificates")
        return out


class DeterminerEngine:
    """Shared computation context: one registry, memoized hom spaces and
    factoring subspaces."""

    def __init__(self, registry: IndecRegistry):
        self.registry = registry
        self.quiver = registry.quiver
        self.field = registry.field
        self._hom: dict = {}
        self._factor: dict = {}
        self._rad_maps: dict = {}
        self._wv_blocks: dict = {}

    # -- caches ------------------------------------------------------------

    def hom(self, M: Representation, N: Representation) -> HomSpace:
        key = (M, N)
        hs = self._hom.get(key)
        if hs is None:
            hs = hom_basis(M, N)
            self._hom[key] = hs
        return hs

    def factor_subspace(self, f: RepMorphism, Z: Representation) -> Subspace:
        """Image of Hom(Z, X) -> Hom(Z, Y), the maps factoring through f."""
        key = (f, Z)
        sub = self._factor.get(key)
        if sub is None:
            hzx = self.hom(Z, f.domain)
            hzy = self.hom(Z, f.codomain)
            sub = column_space(postcompose_matrix(hzx, hzy, f))
            self._factor[key] = sub
        return sub

    def _radical_maps(self, U: Representation, Z: Representation):
        """Basis morphisms of rad(U, Z)."""
        key = (U, Z)
        maps = self._rad_maps.get(key)
        if maps is None:
            huz = self.hom(U, Z)
            sub = rad_hom_basis(U, Z)
            maps = tuple(huz.from_coordinates(v) for v in sub.basis)
            self._rad_maps[key] = maps
        return maps

    # -- factorization tests -------------------------------------------------

    def factors_through(self, g: RepMorphism, f: RepMorphism) -> RepMorphism | None:
        """h with f . h = g, or None."""
        if g.codomain != f.codomain:
            raise SemanticError("morphisms do not share a codomain")
        htx = self.hom(g.domain, f.domain)
        hty = self.hom(g.domain, f.codomain)
        C = postcompose_matrix(htx, hty, f)
        x = solve(C, hty.coordinates(g))
        if x is None:
            return None
        h = htx.from_coordinates(x)
        assert (f @ h) == g
        return h

    def almost_factor_subspace(self, f: RepMorphism, Z: Representation) -> Subspace:
        """Maps Z -> Y all of whose radical precomposites factor through f.

        Contains the factoring subspace; Z almost factors through f exactly
        when the containment is strict."""
        Y = f.codomain
        hzy = self.hom(Z, Y)
        rows: list = []
        for entry in self.registry.entries:
            U = entry.rep
            fu = self.factor_subspace(f, U)
            comp_proj = fu.complement_projection()
            if comp_proj.rows == 0:
                continue
            huy = self.hom(U, Y)
            for h in self._radical_maps(U, Z):
                block = comp_proj @ precompose_matrix(hzy, huy, h)
                rows.extend(block.entries)
        if not rows:
            return Subspace.full(self.field, hzy.dim)
        R = kernel_basis(Mat(self.field, len(rows), hzy.dim, tuple(rows)))
        assert R.contains(self.factor_subspace(f, Z))
        return R

    def almost_factors(self, f: RepMorphism, Z: Representation) -> bool:
        return self.almost_factor_subspace(f, Z).dim > self.factor_subspace(f, Z).dim

    # -- the determination oracle -------------------------------------------

    def _member_blocks(self, f: RepMorphism, V: Representation, Z: Representation) -> Mat:
        """Constraint rows on Hom(V, Y) forcing every composite with a map
        from Z to land in the factoring subspace of Z."""
        key = (f, V, Z)
        block = self._wv_blocks.get(key)
        if block is None:
            Y = f.codomain
            hvy = self.hom(V, Y)
            hzy = self.hom(Z, Y)
            fz = self.factor_subspace(f, Z)
            comp_proj = fz.complement_projection()
            rows: list = []
            if comp_proj.rows:
                hzv = self.hom(Z, V)
                for h in hzv.basis:
                    rows.extend((comp_proj @ precompose_matrix(hvy, hzy, h)).entries)
            block = Mat(self.field, len(rows), hvy.dim, tuple(rows))
            self._wv_blocks[key] = block
        return block

    def determined_subspace(self, f: RepMorphism, members, V: Representation) -> Subspace:
        """Largest subspace of Hom(V, Y) whose composites with every map out
        of a member object factor through f."""
        hvy = self.hom(V, f.codomain)
        rows: list = []
        for Z in members:
            rows.extend(self._member_blocks(f, V, Z).entries)
        if not rows:
            return Subspace.full(self.field, hvy.dim)
        return kernel_basis(Mat(self.field, len(rows), hvy.dim, tuple(rows)))

    def verify(self, f: RepMorphism, members) -> OracleVerdict:
        """Run the full oracle for the candidate member list.

        (a) determination: for every registry object V the determined
        subspace must collapse onto the factoring subspace of V;
        (b) minimality, first half: every member almost factors through f;
        (c) minimality, second half: dropping any single member re-opens the
        determined subspace at some witness object."""
        member_reps = [m.rep if isinstance(m, DeterminerMember) else m for m in members]
        labels = [m.label if isinstance(m, DeterminerMember) else self.registry.label_of(m)
                  for m in members]

        determination_ok = True
        witness = None
        for entry in self.registry.entries:
            fv = self.factor_subspace(f, entry.rep)
            wv = self.determined_subspace(f, member_reps, entry.rep)
            assert wv.contains(fv)
            if wv.dim != fv.dim:
                determination_ok = False
                witness = entry.label
                break

        member_aft = tuple((lbl, self.almost_factors(f, Z))
                           for lbl, Z in zip(labels, member_reps))

        removal = []
        for drop in range(len(member_reps)):
            rest = [Z for i, Z in enumerate(member_reps) if i != drop]
            broke = None
            for entry in self.registry.entries:
                fv = self.factor_subspace(f, entry.rep)
                wv = self.determined_subspace(f, rest, entry.rep)
                if wv.dim != fv.dim:
                    broke = entry.label
                    break
            removal.append((labels[drop], broke))

        return OracleVerdict(
            checked_objects=len(self.registry.entries),
            determination_ok=determination_ok,
            determination_witness=witness,
            member_almost_factors=member_aft,
            removal_breaks=tuple(removal),
            complete=self.registry.complete,
        )

    # -- the formula ----------------------------------------------------------

    def formula_members(self, f: RepMorphism):
        """Right minimal version, intrinsic kernel summands, socle of the
        cokernel, and the assembled determiner member list."""
        rm = right_minimal_version(f)
        f1 = rm.minimal
        K, _ = kernel(f1)
        kernel_classes = [leaf for leaf, _ in decompose(K).summands] if K.total_dim else []
        # the intrinsic kernel of a right minimal map cannot contain an
        # injective summand; TrD would reject it loudly if this ever failed
        members: list[DeterminerMember] = []
        kernel_labels = []
        for leaf in kernel_classes:
            leaf_label = self.registry.label_of(leaf)
            kernel_labels.append(leaf_label)
            t = trd(leaf)
            members.append(DeterminerMember(
                label=self.registry.label_of(t),
                rep=t,
                provenance=f"from-tau-minus({leaf_label})",
            ))
        C, _ = cokernel(f1)
        soc = socle_multiplicities(C)
        soc_pairs = tuple((x, m) for x, m in zip(self.quiver.vertices, soc) if m)
        for x, _m in soc_pairs:
            P = projective_at(self.quiver, x, self.field)
            members.append(DeterminerMember(
                label=self.registry.label_of(P),
                rep=P,
                provenance=f"from-projective-cover(S_{x})",
            ))
        # deduplicate by iso-class, then sort by (dim vector, registry index)
        unique: list[DeterminerMember] = []
        for m in members:
            if all(indec_iso_witness(m.rep, u.rep) is None for u in unique):
                unique.append(m)

        def sort_key(m: DeterminerMember):
            idx = self.registry.find_iso(m.rep)
            return (m.rep.dims, idx if idx is not None else len(self.registry.entries))

        unique.sort(key=sort_key)
        return rm, tuple(kernel_labels), soc_pairs, tuple(unique)

    def report(self, f: RepMorphism, morphism_name: str = "f",
               verify: bool = False, override=None, side: str = "right") -> DeterminerReport:
        rm, kernel_labels, soc_pairs, members = self.formula_members(f)
        if override is not None:
            members = tuple(override)
        verdict = self.verify(rm.minimal, members) if verify else None
        return DeterminerReport(
            morphism_name=morphism_name,
            field_name=self.field.name,
            side=side,
            domain_dims=f.domain.dims,
            minimal_domain_dims=rm.minimal.domain.dims,
            split_off_dims=rm.split_off.dims,
            split_epimorphism=rm.minimal.is_iso(),
            intrinsic_kernel_labels=kernel_labels,
            soc_coker=soc_pairs,
            members=members,
            registry_complete=self.registry.complete,
            registry_size=len(self.registry.entries),
            oracle=verdict,
        )


def minimal_right_determiner(f: RepMorphism, registry: IndecRegistry | None = None,
                             verify: bool = False, cap: int = 5000,
                             morphism_name: str = "f") -> DeterminerReport:
    """Compute (and optionally verify) the minimal right determiner of f."""
    if registry is None:
        registry = knit(f.domain.quiver, f.domain.field, cap)
    engine = DeterminerEngine(registry)
    return engine.report(f, morphism_name=morphism_name, verify=verify)


def minimal_left_determiner(f: RepMorphism, registry: IndecRegistry | None = None,
                            verify: bool = False, cap: int = 5000,
                            morphism_name: str = "f") -> DeterminerReport:
    """Minimal left determiner via duality: transport f to the opposite
    quiver, compute the right determiner there, and transport members back."""
    q = f.domain.quiver
    field = f.domain.field
    fop = dual_morphism(f)
    registry_op = knit(fop.domain.quiver, field, cap)
    engine_op = DeterminerEngine(registry_op)
    rep_op = engine_op.report(fop, morphism_name=morphism_name, verify=verify, side="left")
    if registry is None:
        registry = knit(q, field, cap)
    members = []
    for m in rep_op.members:
        back = dual_representation(m.rep)
        # the double opposite quiver is structurally equal to the original
        back = Representation(q, field, back.dims, back.action)
        members.append(DeterminerMember(
            label=registry.label_of(back),
            rep=back,
            provenance=f"dual:{m.provenance}",
        ))
    relabel = {op.label: new.label for op, new in zip(rep_op.members, members)}
    oracle = rep_op.oracle
    if oracle is not None:
        oracle = OracleVerdict(
            checked_objects=oracle.checked_objects,
            determination_ok=oracle.determination_ok,
            determination_witness=oracle.determination_witness,
            member_almost_factors=tuple((relabel.get(l, l), ok)
                                        for l, ok in oracle.member_almost_factors),
            removal_breaks=tuple((relabel.get(l, l), w) for l, w in oracle.removal_breaks),
            complete=oracle.complete,
        )
    return DeterminerReport(
        morphism_name=morphism_name,
        field_name=field.name,
        side="left",
        domain_dims=rep_op.domain_dims,
        minimal_domain_dims=rep_op.minimal_domain_dims,
        split_off_dims=rep_op.split_off_dims,
        split_epimorphism=rep_op.split_epimorphism,
        intrinsic_kernel_labels=rep_op.intrinsic_kernel_labels,
        soc_coker=rep_op.soc_coker,
        members=tuple(members),
        registry_complete=rep_op.registry_complete and registry.complete,
        registry_size=rep_op.registry_size,
        oracle=oracle,
    )

"""Representations of a quiver, their morphisms, and Hom-space computation.

A representation assigns a finite-dimensional space to each vertex and a
matrix to each arrow; a morphism is a family of vertex matrices making every
arrow square commute, checked exactly at construction time.  Hom(M, N) is the
solution space of the commuting-square linear system and is returned with a
canonical (RREF) ordered basis, so all downstream subspace computations have
stable coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SemanticError
from .linalg import (
    Field,
    Mat,
    Subspace,
    block_diag,
    from_columns,
    column_space,
    kernel_basis,
)
from .quiver import Path, Quiver


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    field: Field
    dims: tuple[int, ...]
    action: tuple[Mat, ...]

    def __post_init__(self):
        q = self.quiver
        if len(self.dims) != q.n_vertices or len(self.action) != len(q.arrows):
            raise SemanticError("dimension or action list does not match the quiver")
        for ai, a in enumerate(q.arrows):
            si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
            m = self.action[ai]
            if (m.rows, m.cols) != (self.dims[ti], self.dims[si]):
                raise SemanticError(
                    f"matrix for arrow {a.name!r} has shape {m.rows}x{m.cols}, "
                    f"expected {self.dims[ti]}x{self.dims[si]}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def dim_at(self, vertex: str) -> int:
        return self.dims[self.quiver.vertex_index[vertex]]

    def path_matrix(self, p: Path) -> Mat:
        """Composite action along a path (identity for the trivial path)."""
        m = Mat.identity(self.field, self.dims[p.source])
        for ai in p.arrows:
            m = self.action[ai] @ m
        return m

    def __repr__(self):
        return f"Rep{list(self.dims)}"


def zero_representation(q: Quiver, field: Field) -> Representation:
    dims = tuple(0 for _ in q.vertices)
    action = tuple(Mat.zero(field, 0, 0) for _ in q.arrows)
    return Representation(q, field, dims, action)


@dataclass(frozen=True)
class RepMorphism:
    domain: Representation
    codomain: Representation
    comps: tuple[Mat, ...]

    def __post_init__(self):
        M, N = self.domain, self.codomain
        if M.quiver is not N.quiver and M.quiver != N.quiver:
            raise SemanticError("morphism endpoints live over different quivers")
        if len(self.comps) != M.quiver.n_vertices:
            raise SemanticError("component list does not match the vertex count")
        for i, c in enumerate(self.comps):
            if (c.rows, c.cols) != (N.dims[i], M.dims[i]):
                raise SemanticError(
                    f"component at vertex {M.quiver.vertices[i]!r} has shape "
                    f"{c.rows}x{c.cols}, expected {N.dims[i]}x{M.dims[i]}")
        for ai, a in enumerate(M.quiver.arrows):
            si, ti = M.quiver.vertex_index[a.source], M.quiver.vertex_index[a.target]
            if N.action[ai] @ self.comps[si] != self.comps[ti] @ M.action[ai]:
                raise SemanticError(f"square at arrow {a.name!r} does not commute")

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """Composition self after other."""
        if other.codomain != self.domain:
            raise SemanticError("morphisms do not compose")
        return RepMorphism(other.domain, self.codomain,
                           tuple(a @ b for a, b in zip(self.comps, other.comps)))

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        if (other.domain, other.codomain) != (self.domain, self.codomain):
            raise SemanticError("morphism sum with mismatched endpoints")
        return RepMorphism(self.domain, self.codomain,
                           tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: "RepMorphism") -> "RepMorphism":
        return self + other.scale(-self.domain.field.one)

    def scale(self, c) -> "RepMorphism":
        return RepMorphism(self.domain, self.codomain, tuple(m.scale(c) for m in self.comps))

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.comps)

    def is_mono(self) -> bool:
        return all(kernel_basis(m).dim == 0 for m in self.comps)

    def is_epi(self) -> bool:
        return all(m.rank() == m.rows for m in self.comps)

    def is_iso(self) -> bool:
        return self.domain.dims == self.codomain.dims and self.is_epi()

    def inverse(self) -> "RepMorphism":
        if not self.is_iso():
            raise SemanticError("morphism is not invertible")
        return RepMorphism(self.codomain, self.domain, tuple(m.inverse() for m in self.comps))

    def total_matrix(self) -> Mat:
        """Block-diagonal matrix of all components (operator on the total space)."""
        return block_diag(self.domain.field, self.comps)

    def __repr__(self):
        return f"RepMorphism({self.domain!r} -> {self.codomain!r})"


def identity_morphism(M: Representation) -> RepMorphism:
    return RepMorphism(M, M, tuple(Mat.identity(M.field, d) for d in M.dims))


def zero_morphism(M: Representation, N: Representation) -> RepMorphism:
    return RepMorphism(M, N, tuple(Mat.zero(M.field, dn, dm) for dm, dn in zip(M.dims, N.dims)))


class HomSpace:
    """Ordered canonical basis of Hom(M, N).

    Morphisms are flattened to coordinate vectors by concatenating the
    components row-major in vertex order; the basis rows are in RREF with
    respect to that flattening, so coordinates of a member are read off at the
    pivot positions.
    """

    def __init__(self, domain: Representation, codomain: Representation,
                 basis_vectors: Subspace):
        self.domain = domain
        self.codomain = codomain
        self._space = basis_vectors
        self._offsets = []
        off = 0
        for dm, dn in zip(domain.dims, codomain.dims):
            self._offsets.append(off)
            off += dm * dn
        self._flat_dim = off
        self.basis = tuple(self._unflatten(v) for v in basis_vectors.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> Field:
        return self.domain.field

    def flatten(self, f: RepMorphism) -> tuple:
        out = []
        for m in f.comps:
            for row in m.entries:
                out.extend(row)
        return tuple(out)

    def _unflatten(self, vec: tuple) -> RepMorphism:
        comps = []
        for i, (dm, dn) in enumerate(zip(self.domain.dims, self.codomain.dims)):
            off = self._offsets[i]
            rows = tuple(tuple(vec[off + r * dm + c] for c in range(dm)) for r in range(dn))
            comps.append(Mat(self.field, dn, dm, rows))
        return RepMorphism(self.domain, self.codomain, tuple(comps))

    def coordinates(self, f: RepMorphism) -> tuple:
        if (f.domain, f.codomain) != (self.domain, self.codomain):
            raise SemanticError("morphism does not live in this hom space")
        return self._space.coordinates(self.flatten(f))

    def from_coordinates(self, coords) -> RepMorphism:
        coords = tuple(self.field.of(c) for c in coords)
        if len(coords) != self.dim:
            raise SemanticError("coordinate length mismatch")
        z = self.field.zero
        vec = [z] * self._flat_dim
        for c, row in zip(coords, self._space.basis):
            if c:
                vec = [a + c * b for a, b in zip(vec, row)]
        return self._unflatten(tuple(vec))

    def subspace_of(self, morphisms) -> Subspace:
        """Span of the given member morphisms, in hom coordinates."""
        return Subspace.from_vectors(self.field, self.dim,
                                     [self.coordinates(f) for f in morphisms])

    def full_subspace(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def __repr__(self):
        return f"HomSpace(dim {self.dim}: {self.domain!r} -> {self.codomain!r})"


def hom_basis(M: Representation, N: Representation) -> HomSpace:
    """Canonical basis of Hom(M, N) as solutions of the commuting squares."""
    if M.quiver != N.quiver:
        raise SemanticError("representations live over different quivers")
    if M.field != N.field:
        raise SemanticError("representations live over different fields")
    field = M.field
    q = M.quiver
    offsets = []
    off = 0
    for dm, dn in zip(M.dims, N.dims):
        offsets.append(off)
        off += dm * dn
    nunk = off

    def slot(v: int, r: int, c: int) -> int:
        return offsets[v] + r * M.dims[v] + c

    rows = []
    z = field.zero
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        na, ma = N.action[ai], M.action[ai]
        # N(a) f(s) - f(t) M(a) = 0, one equation per (row of N(t), col of M(s))
        for r in range(N.dims[ti]):
            for c in range(M.dims[si]):
                eq = [z] * nunk
                for k in range(N.dims[si]):
                    if na.entries[r][k]:
                        eq[slot(si, k, c)] = eq[slot(si, k, c)] + na.entries[r][k]
                for k in range(M.dims[ti]):
                    if ma.entries[k][c]:
                        eq[slot(ti, r, k)] = eq[slot(ti, r, k)] - ma.entries[k][c]
                if any(eq):
                    rows.append(tuple(eq))
    if rows:
        sol = kernel_basis(Mat(field, len(rows), nunk, tuple(rows)))
    else:
        sol = Subspace.full(field, nunk)
    return HomSpace(M, N, sol)


def postcompose_matrix(hs_src: HomSpace, hs_dst: HomSpace, f: RepMorphism) -> Mat:
    """Matrix of Hom(Z, X) -> Hom(Z, Y), g |-> f . g, in canonical bases."""
    cols = [hs_dst.coordinates(f @ g) for g in hs_src.basis]
    return from_columns(hs_src.field, cols, hs_dst.dim)


def precompose_matrix(hs_src: HomSpace, hs_dst: HomSpace, h: RepMorphism) -> Mat:
    """Matrix of Hom(V, Y) -> Hom(Z, Y), psi |-> psi . h, in canonical bases."""
    cols = [hs_dst.coordinates(g @ h) for g in hs_src.basis]
    return from_columns(hs_src.field, cols, hs_dst.dim)


def kernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    """Vertexwise kernel with induced arrow actions and its inclusion."""
    M = f.domain
    q, field = M.quiver, M.field
    subs = [kernel_basis(c) for c in f.comps]
    dims = tuple(s.dim for s in subs)
    action = []
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        cols = []
        for v in subs[si].basis:
            w = M.action[ai].apply(v)
            cols.append(subs[ti].coordinates(w))
        action.append(from_columns(field, cols, dims[ti]))
    K = Representation(q, field, dims, tuple(action))
    incl = RepMorphism(K, M, tuple(s.basis_matrix_columns() for s in subs))
    return K, incl


def image(f: RepMorphism) -> tuple[Representation, RepMorphism, RepMorphism]:
    """Image subrepresentation with inclusion into the codomain and the
    corestricted epimorphism from the domain."""
    N = f.codomain
    q, field = N.quiver, N.field
    subs = [column_space(c) for c in f.comps]
    dims = tuple(s.dim for s in subs)
    action = []
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        cols = [subs[ti].coordinates(N.action[ai].apply(v)) for v in subs[si].basis]
        action.append(from_columns(field, cols, dims[ti]))
    I = Representation(q, field, dims, tuple(action))
    incl = RepMorphism(I, N, tuple(s.basis_matrix_columns() for s in subs))
    epi_comps = []
    for i, s in enumerate(subs):
        cols = [s.coordinates(f.comps[i].col(j)) for j in range(f.domain.dims[i])]
        epi_comps.append(from_columns(field, cols, dims[i]))
    epi = RepMorphism(f.domain, I, tuple(epi_comps))
    return I, incl, epi


def cokernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    """Vertexwise cokernel in the canonical complement basis, with the
    projection from the codomain."""
    N = f.codomain
    q, field = N.quiver, N.field
    ims = [column_space(c) for c in f.comps]
    projs = [s.complement_projection() for s in ims]
    sections = [s.complement_section() for s in ims]
    dims = tuple(p.rows for p in projs)
    action = []
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        action.append(projs[ti] @ N.action[ai] @ sections[si])
    C = Representation(q, field, dims, tuple(action))
    proj = RepMorphism(N, C, tuple(projs))
    return C, proj


def direct_sum(reps, q: Quiver | None = None, field: Field | None = None):
    """Block-diagonal direct sum; returns (rep, injections, projections)."""
    reps = list(reps)
    if not reps:
        if q is None or field is None:
            raise SemanticError("empty direct sum needs an explicit quiver and field")
        return zero_representation(q, field), [], []
    q = reps[0].quiver
    field = reps[0].field
    for r in reps[1:]:
        if r.quiver != q or r.field != field:
            raise SemanticError("direct sum over mismatched quivers or fields")
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(q.n_vertices))
    action = []
    for ai in range(len(q.arrows)):
        action.append(block_diag(field, [r.action[ai] for r in reps]))
    total = Representation(q, field, dims, tuple(action))
    injections, projections = [], []
    for k, r in enumerate(reps):
        inj_comps, proj_comps = [], []
        for i in range(q.n_vertices):
            before = sum(reps[j].dims[i] for j in range(k))
            inj = Mat.zero(field, dims[i], r.dims[i]).entries
            inj = [list(row) for row in inj]
            for t in range(r.dims[i]):
                inj[before + t][t] = field.one
            inj_comps.append(Mat(field, dims[i], r.dims[i], tuple(tuple(x) for x in inj)))
            pr = [list(row) for row in Mat.zero(field, r.dims[i], dims[i]).entries]
            for t in range(r.dims[i]):
                pr[t][before + t] = field.one
            proj_comps.append(Mat(field, r.dims[i], dims[i], tuple(tuple(x) for x in pr)))
        injections.append(RepMorphism(r, total, tuple(inj_comps)))
        projections.append(RepMorphism(total, r, tuple(proj_comps)))
    return total, injections, projections


def dual_representation(M: Representation) -> Representation:
    """Vector-space dual over the opposite quiver (matrices transposed)."""
    qop = M.quiver.opposite
    return Representation(qop, M.field, M.dims, tuple(m.transpose() for m in M.action))


def dual_morphism(f: RepMorphism) -> RepMorphism:
    """Dual of f: X -> Y, i.e. D(Y) -> D(X) over the opposite quiver."""
    return RepMorphism(dual_representation(f.codomain), dual_representation(f.domain),
                       tuple(m.transpose() for m in f.comps))

"""Socle, radical, top, projective covers, injective hulls, and the minimal
(co)resolutions they induce.

On a finite acyclic quiver a copy of the simple S_x inside M is a vector of
M(x) killed by every arrow leaving x, so the socle is a vertexwise kernel
intersection; dually the radical is the vertexwise sum of incoming images.
Covers are lifted deterministically: top basis vectors are sectioned back into
M at the canonical complement coordinates, which pins every matrix of the
resolution for golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Mat, Subspace, from_columns, kernel_basis, column_space
from .quiver import paths_between, projective_at, injective_at
from .reps import (
    RepMorphism,
    Representation,
    direct_sum,
    kernel,
    cokernel,
)


def _subrep_from_subspaces(M: Representation, subs) -> tuple[Representation, RepMorphism]:
    """Subrepresentation spanned vertexwise by the given subspaces, which must
    be closed under the arrow actions."""
    q, field = M.quiver, M.field
    dims = tuple(s.dim for s in subs)
    action = []
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        cols = [subs[ti].coordinates(M.action[ai].apply(v)) for v in subs[si].basis]
        action.append(from_columns(field, cols, dims[ti]))
    S = Representation(q, field, dims, tuple(action))
    incl = RepMorphism(S, M, tuple(s.basis_matrix_columns() for s in subs))
    return S, incl


def socle(M: Representation) -> tuple[Representation, RepMorphism]:
    """Largest semisimple subrepresentation: soc(M)(x) is the intersection of
    the kernels of all arrow maps leaving x."""
    q, field = M.quiver, M.field
    subs = []
    for i in range(q.n_vertices):
        s = Subspace.full(field, M.dims[i])
        for ai in q.arrows_from[i]:
            s = s.intersect(kernel_basis(M.action[ai]))
        subs.append(s)
    return _subrep_from_subspaces(M, subs)


def socle_multiplicities(M: Representation) -> tuple[int, ...]:
    """Multiplicity of each simple S_x inside soc(M), indexed by vertex."""
    S, _ = socle(M)
    return S.dims


def radical(M: Representation) -> tuple[Representation, RepMorphism]:
    """rad(M)(x) = sum of images of all arrows into x."""
    q, field = M.quiver, M.field
    subs = []
    for i in range(q.n_vertices):
        s = Subspace.zero(field, M.dims[i])
        for ai in q.arrows_into[i]:
            s = s.sum(column_space(M.action[ai]))
        subs.append(s)
    return _subrep_from_subspaces(M, subs)


def top(M: Representation) -> tuple[Representation, RepMorphism]:
    """M / rad(M) in the canonical complement coordinates, with projection."""
    q, field = M.quiver, M.field
    _, incl = radical(M)
    rad_subs = [column_space(c) for c in incl.comps]
    projs = [s.complement_projection() for s in rad_subs]
    dims = tuple(p.rows for p in projs)
    # arrows land inside the radical, so the induced action is zero
    action = []
    for ai, a in enumerate(q.arrows):
        si, ti = q.vertex_index[a.source], q.vertex_index[a.target]
        action.append(Mat.zero(field, dims[ti], dims[si]))
    T = Representation(q, field, dims, tuple(action))
    proj = RepMorphism(M, T, tuple(projs))
    return T, proj


def top_multiplicities(M: Representation) -> tuple[int, ...]:
    T, _ = top(M)
    return T.dims


@dataclass(frozen=True)
class BlockSum:
    """A direct sum of canonical indecomposables with explicit block data."""

    rep: Representation
    block_vertices: tuple[str, ...]          # one vertex per block, in order
    injections: tuple[RepMorphism, ...]
    projections: tuple[RepMorphism, ...]


def projective_block_sum(q, field, vertices) -> BlockSum:
    blocks = [projective_at(q, x, field) for x in vertices]
    total, injs, projs = direct_sum(blocks, q=q, field=field)
    return BlockSum(total, tuple(vertices), tuple(injs), tuple(projs))


def injective_block_sum(q, field, vertices) -> BlockSum:
    blocks = [injective_at(q, x, field) for x in vertices]
    total, injs, projs = direct_sum(blocks, q=q, field=field)
    return BlockSum(total, tuple(vertices), tuple(injs), tuple(projs))


def projective_cover(M: Representation) -> tuple[BlockSum, RepMorphism]:
    """P = direct sum of P_x with the multiplicities of top(M), together with
    the cover epimorphism lifting the identification of tops."""
    q, field = M.quiver, M.field
    T, proj = top(M)
    rad_subs = [column_space(c) for c in radical(M)[1].comps]
    vertices = []
    generators = []  # chosen preimages in M of the top basis vectors
    for i, x in enumerate(q.vertices):
        section = rad_subs[i].complement_section()
        for j in range(T.dims[i]):
            vertices.append(x)
            generators.append((i, section.col(j)))
    ps = projective_block_sum(q, field, vertices)
    # the cover sends the trivial-path generator of each block to its chosen
    # preimage; a path basis vector goes to the path action applied to it
    comps = [[] for _ in range(q.n_vertices)]  # columns per vertex
    for (gi, gv), x in zip(generators, ps.block_vertices):
        for yi, y in enumerate(q.vertices):
            for p in paths_between(q, x, y):
                comps[yi].append(M.path_matrix(p).apply(gv))
    cover_comps = tuple(from_columns(field, comps[i], M.dims[i]) for i in range(q.n_vertices))
    cover = RepMorphism(ps.rep, M, cover_comps)
    assert cover.is_epi(), "projective cover failed to be surjective"
    return ps, cover


def injective_hull(M: Representation) -> tuple[BlockSum, RepMorphism]:
    """I = direct sum of I_x with the multiplicities of soc(M), together with
    the hull monomorphism."""
    q, field = M.quiver, M.field
    S, incl = socle(M)
    soc_subs = [column_space(c) for c in incl.comps]
    vertices = []
    functionals = []  # (vertex index, coordinate functional index)
    for i, x in enumerate(q.vertices):
        for j in range(S.dims[i]):
            vertices.append(x)
            # dual basis against the RREF socle basis: pick its pivot slot
            functionals.append((i, soc_subs[i].pivots[j]))
    bs = injective_block_sum(q, field, vertices)
    # component at vertex y: for each block (socle vector at x) and each path
    # p: y -> x, the row reads off the pivot coordinate of M(p) applied to v
    comps = []
    for yi, y in enumerate(q.vertices):
        rows = []
        for (xi, pivot), x in zip(functionals, bs.block_vertices):
            for p in paths_between(q, y, x):
                rows.append(tuple(M.path_matrix(p).entries[pivot]))
        comps.append(Mat(field, len(rows), M.dims[yi], tuple(rows)))
    hull = RepMorphism(M, bs.rep, tuple(comps))
    assert hull.is_mono(), "injective hull failed to be injective"
    return bs, hull


@dataclass(frozen=True)
class ProjResolution:
    """0 -> P1 -> P0 -> M -> 0 with explicit canonical blocks."""

    module: Representation
    p0: BlockSum
    p1: BlockSum
    differential: RepMorphism   # P1 -> P0
    cover: RepMorphism          # P0 -> M


@dataclass(frozen=True)
class InjCopresentation:
    """0 -> M -> I0 -> I1 -> 0 with explicit canonical blocks."""

    module: Representation
    i0: BlockSum
    i1: BlockSum
    differential: RepMorphism   # I0 -> I1
    hull: RepMorphism           # M -> I0


def min_projective_resolution(M: Representation) -> ProjResolution:
    """Minimal projective resolution; the syzygy is projective because the
    path algebra of an acyclic quiver is hereditary, so its own cover is an
    isomorphism and provides the explicit block structure."""
    p0, cover = projective_cover(M)
    K, incl = kernel(cover)
    p1, cover1 = projective_cover(K)
    assert p1.rep.dims == K.dims, "syzygy of a cover must be projective here"
    diff = incl @ cover1
    assert diff.is_mono()
    return ProjResolution(M, p0, p1, diff, cover)


def min_injective_copresentation(M: Representation) -> InjCopresentation:
    i0, hull = injective_hull(M)
    C, proj = cokernel(hull)
    i1, hull1 = injective_hull(C)
    assert i1.rep.dims == C.dims, "cokernel of a hull must be injective here"
    diff = hull1 @ proj
    assert diff.is_epi()
    return InjCopresentation(M, i0, i1, diff, hull)

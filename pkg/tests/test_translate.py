"""Nakayama transport, the translates, knitting, and graph classification."""

import pytest

import quivdet as qd
from quivdet.errors import (
    HasInjectiveSummandError,
    HasProjectiveSummandError,
    SemanticError,
)
from quivdet.linalg import RATIONALS
from quivdet.structure import projective_block_sum
from quivdet.translate import has_injective_summand, has_projective_summand

from conftest import d4_subspace_quiver

F = RATIONALS


def test_nakayama_identity_and_zero(a3):
    ps = projective_block_sum(a3, F, ("2",))
    ident = qd.identity_morphism(ps.rep)
    nu, idom, icod = qd.nakayama_on_projmap(ident, ps, ps)
    assert nu == qd.identity_morphism(idom.rep)
    zero = qd.zero_morphism(ps.rep, ps.rep)
    nuz, _, _ = qd.nakayama_on_projmap(zero, ps, ps)
    assert nuz.is_zero()


def test_nakayama_sends_px_to_ix(a3):
    for x in a3.vertices:
        ps = projective_block_sum(a3, F, (x,))
        _, idom, _ = qd.nakayama_on_projmap(qd.identity_morphism(ps.rep), ps, ps)
        assert qd.is_isomorphic(idom.rep, qd.injective_at(a3, x))


def test_nakayama_on_inclusion(a3):
    # the inclusion P_1 -> P_2 transports to the map I_1 -> I_2 that kills
    # the vertex-1 component
    dom = projective_block_sum(a3, F, ("1",))
    cod = projective_block_sum(a3, F, ("2",))
    incl = qd.hom_basis(dom.rep, cod.rep).basis[0]
    nu, idom, icod = qd.nakayama_on_projmap(incl, dom, cod)
    assert idom.rep.dims == (1, 1, 1) and icod.rep.dims == (0, 1, 1)
    assert nu.comps[a3.vertex_index["1"]].is_zero()
    assert not nu.is_zero()
    K, _ = qd.kernel(nu)
    assert K.dims == (1, 0, 0)


def test_nakayama_rejects_malformed_blocks(a3):
    from quivdet.errors import InputNotInPathBasisError
    from quivdet.structure import BlockSum
    from quivdet.translate import _path_coefficients_proj
    ps = projective_block_sum(a3, F, ("3",))
    ident = qd.identity_morphism(ps.rep)
    # claim the block is P_1: the path structure cannot carry the map, which
    # the faithfulness round trip inside the transport detects
    lying = BlockSum(ps.rep, ("1",), ps.injections, ps.projections)
    with pytest.raises(InputNotInPathBasisError):
        qd.nakayama_on_projmap(ident, lying, lying)
    # a structural mismatch already fails at coefficient extraction
    taller = projective_block_sum(a3, F, ("3", "3"))
    mism = BlockSum(taller.rep, ("3", "1"), taller.injections, taller.projections)
    with pytest.raises((InputNotInPathBasisError, ValueError)):
        _path_coefficients_proj(qd.identity_morphism(taller.rep), mism, mism)


def test_inverse_nakayama_round_trip(a3):
    dom = projective_block_sum(a3, F, ("1",))
    cod = projective_block_sum(a3, F, ("2", "3"))
    hs = qd.hom_basis(dom.rep, cod.rep)
    for g in hs.basis:
        nu, idom, icod = qd.nakayama_on_projmap(g, dom, cod)
        back, pdom, pcod = qd.inverse_nakayama_on_injmap(nu, idom, icod)
        assert back == g


def test_dtr_examples(a3):
    assert qd.dtr(qd.simple_at(a3, "2")).dims == (1, 0, 0)
    assert qd.dtr(qd.simple_at(a3, "3")).dims == (0, 1, 0)
    with pytest.raises(HasProjectiveSummandError):
        qd.dtr(qd.projective_at(a3, "2"))


def test_trd_examples(a3):
    assert qd.trd(qd.projective_at(a3, "1")).dims == (0, 1, 0)
    with pytest.raises(HasInjectiveSummandError):
        qd.trd(qd.injective_at(a3, "2"))


def test_translate_round_trips_on_corpus(corpus_engines):
    for name, engine in corpus_engines:
        reg = engine.registry
        for e in reg.entries:
            if not e.is_projective:
                t = qd.dtr(e.rep)
                assert qd.is_isomorphic(qd.trd(t), e.rep), (name, e.label)
            if not e.is_injective:
                t = qd.trd(e.rep)
                assert qd.is_isomorphic(qd.dtr(t), e.rep), (name, e.label)


def test_translates_preserve_indecomposability(a3_registry):
    for e in a3_registry.entries:
        if not e.is_injective:
            assert qd.is_indecomposable(qd.trd(e.rep))
        if not e.is_projective:
            assert qd.is_indecomposable(qd.dtr(e.rep))


def test_summand_detection(a3):
    M, _, _ = qd.direct_sum([qd.simple_at(a3, "2"), qd.projective_at(a3, "1")])
    assert has_projective_summand(M)
    assert not has_injective_summand(M)


def test_knit_a3(a3_registry):
    assert len(a3_registry.entries) == 6
    assert a3_registry.complete
    labels = [e.label for e in a3_registry.entries]
    assert labels == ["P_1", "P_2", "P_3", "S_2", "I_2", "I_3"]
    tau = {e.label: (a3_registry.entries[e.tau_minus].label if e.tau_minus is not None else None)
           for e in a3_registry.entries}
    assert tau == {"P_1": "S_2", "P_2": "I_2", "P_3": None, "S_2": "I_3",
                   "I_2": None, "I_3": None}


def test_knit_single_vertex():
    q = qd.parse_quiver("vertex x")
    reg = qd.knit(q)
    assert len(reg.entries) == 1 and reg.complete
    e = reg.entries[0]
    assert e.is_projective and e.is_injective


def test_knit_counts_on_corpus(corpus_engines):
    expected = {2: 3, 3: 6, 4: 10}
    for name, engine in corpus_engines:
        reg = engine.registry
        if name.startswith("A"):
            n = int(name[1])
            assert len(reg.entries) == expected[n], name
        else:
            assert len(reg.entries) == 12, name
        assert reg.complete, name


def test_knit_kronecker_incomplete():
    q = qd.parse_quiver("vertex 1\nvertex 2\narrow a 1 2\narrow b 1 2")
    reg = qd.knit(q, cap=10)
    assert not reg.complete
    assert len(reg.entries) >= 10
    # preprojective dimension vectors for the double-arrow quiver
    dims = [e.rep.dims for e in reg.entries[:4]]
    assert dims == [(1, 2), (0, 1), (3, 4), (2, 3)]


def test_knit_cap_validation(a3):
    with pytest.raises(SemanticError):
        qd.knit(a3, cap=2)


def test_knit_cap_boundaries(a3):
    assert qd.knit(a3, cap=6).complete          # exactly enough
    partial = qd.knit(a3, cap=5)
    assert not partial.complete
    assert len(partial.entries) == 5


def test_classification():
    assert qd.classify_underlying_graph(qd.parse_quiver("vertex 1")) == ("dynkin", ("A1",))
    a3 = qd.parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow a 2 1\narrow b 3 2")
    assert qd.classify_underlying_graph(a3) == ("dynkin", ("A3",))
    assert qd.classify_underlying_graph(d4_subspace_quiver()) == ("dynkin", ("D4",))
    kron = qd.parse_quiver("vertex 1\nvertex 2\narrow a 1 2\narrow b 1 2")
    assert qd.classify_underlying_graph(kron) == ("non-dynkin", None)
    e6 = qd.parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
        "arrow a 1 2\narrow b 2 3\narrow c 4 3\narrow d 5 4\narrow e 6 3")
    assert qd.classify_underlying_graph(e6) == ("dynkin", ("E6",))
    # two components
    two = qd.parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow a 1 2")
    assert qd.classify_underlying_graph(two) == ("dynkin", ("A2", "A1"))
    # a cycle-free tree that is not ADE: star with four branches
    star4 = qd.parse_quiver(
        "vertex c\nvertex 1\nvertex 2\nvertex 3\nvertex 4\n"
        "arrow a 1 c\narrow b 2 c\narrow d 3 c\narrow e 4 c")
    assert qd.classify_underlying_graph(star4) == ("non-dynkin", None)


def _branched_path(arms):
    # one branch vertex with three arms of the given edge lengths
    lines = ["vertex c"]
    arrows = []
    for ai, length in enumerate(arms):
        prev = "c"
        for k in range(length):
            v = f"v{ai}_{k}"
            lines.append(f"vertex {v}")
            arrows.append(f"arrow a{ai}_{k} {prev} {v}")
            prev = v
    return qd.parse_quiver("\n".join(lines + arrows))


@pytest.mark.parametrize("arms,expected", [
    ((1, 1, 1), "D4"),
    ((1, 1, 3), "D6"),
    ((1, 2, 2), "E6"),
    ((1, 2, 3), "E7"),
    ((1, 2, 4), "E8"),
    ((1, 2, 5), None),
    ((2, 2, 2), None),
])
def test_classification_branched_shapes(arms, expected):
    kind, types = qd.classify_underlying_graph(_branched_path(arms))
    if expected is None:
        assert kind == "non-dynkin"
    else:
        assert (kind, types) == ("dynkin", (expected,))


def test_knit_counts_match_positive_roots_beyond_corpus():
    a5 = qd.parse_quiver("\n".join(
        [f"vertex {i}" for i in range(1, 6)]
        + [f"arrow e{i} {i + 1} {i}" for i in range(1, 5)]))
    assert len(qd.knit(a5).entries) == 15
    d5 = qd.parse_quiver(
        "vertex 1\nvertex 2\nvertex c\nvertex 3\nvertex 4\n"
        "arrow a 1 c\narrow b 2 c\narrow e c 3\narrow f 3 4")
    assert len(qd.knit(d5).entries) == 20
    e6 = qd.parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
        "arrow a 1 2\narrow b 2 3\narrow c 4 3\narrow d 5 4\narrow e 6 3")
    reg = qd.knit(e6)
    assert len(reg.entries) == 36 and reg.complete
    # the highest root appears as an indecomposable
    assert any(e.rep.dims == (1, 2, 3, 2, 1, 2) for e in reg.entries)


def test_verified_determiner_on_e6_highest_root():
    from quivdet.determiner import DeterminerEngine
    e6 = qd.parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
        "arrow a 1 2\narrow b 2 3\narrow c 4 3\narrow d 5 4\narrow e 6 3")
    reg = qd.knit(e6)
    eng = DeterminerEngine(reg)
    big = max(reg.entries, key=lambda e: e.rep.total_dim).rep
    target = qd.injective_at(e6, "3")
    hs = eng.hom(big, target)
    assert hs.dim >= 1
    rep = eng.report(hs.basis[0], verify=True)
    assert rep.oracle.certified


def test_registry_label_lookup(a3_registry):
    e = a3_registry.by_label("S_2")
    assert e.rep.dims == (0, 1, 0)
    with pytest.raises(SemanticError):
        a3_registry.by_label("nope")


def test_end_dimension_one_on_dynkin_registries(corpus_engines):
    from quivdet.decompose import end_algebra
    for name, engine in corpus_engines:
        for e in engine.registry.entries:
            alg = end_algebra(e.rep)
            assert alg.quotient_dim == 1, (name, e.label)

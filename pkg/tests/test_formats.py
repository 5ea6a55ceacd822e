"""The representation/morphism data file format and name resolution."""

from fractions import Fraction

import pytest

import quivdet as qd
from quivdet.errors import DataSyntaxError, SemanticError
from quivdet.formats import load_session, parse_data_file
from quivdet.linalg import PrimeField, RATIONALS


DATA = """\
# representations of the running example
rep X
dim 1 1
dim 2 1
map a 1x1 1

rep Y
dim 2 1
dim 3 1
map b 1x1 1

morphism g X Y
comp 2 1x1 1

morphism h P_2 I_2
comp 2 1x1 -1/2
"""


def test_parse_reps_and_morphisms(a3):
    reps, morphisms = parse_data_file(DATA, a3)
    assert reps["X"].dims == (1, 1, 0)
    assert reps["Y"].dims == (0, 1, 1)
    g = morphisms["g"]
    assert g.domain == reps["X"] and g.codomain == reps["Y"]
    h = morphisms["h"]
    assert h.comps[1].entries[0][0] == Fraction(-1, 2)
    assert qd.is_isomorphic(reps["X"], qd.projective_at(a3, "2"))


def test_unspecified_blocks_are_zero(a3):
    reps, _ = parse_data_file("rep Z\ndim 1 2\ndim 3 1\n", a3)
    assert reps["Z"].dims == (2, 0, 1)
    assert all(m.is_zero() for m in reps["Z"].action)


def test_prime_field_entries(a3):
    f7 = PrimeField(7)
    reps, _ = parse_data_file("rep W\ndim 1 1\ndim 2 1\nmap a 1x1 -1/2\n", a3, f7)
    assert reps["W"].action[0].entries[0][0] == f7.of(Fraction(-1, 2))


def test_error_unknown_vertex(a3):
    with pytest.raises(DataSyntaxError) as e:
        parse_data_file("rep X\ndim 9 1\n", a3)
    assert e.value.line == 2


def test_error_bad_shape(a3):
    with pytest.raises(DataSyntaxError) as e:
        parse_data_file("rep X\ndim 1 1\ndim 2 1\nmap a 2x2 1 0 0 1\n", a3)
    assert e.value.line == 4


def test_error_wrong_entry_count(a3):
    with pytest.raises(DataSyntaxError) as e:
        parse_data_file("rep X\ndim 1 2\ndim 2 1\nmap a 2x1 1\n", a3)
    assert e.value.line == 4


def test_error_directive_outside_block(a3):
    with pytest.raises(DataSyntaxError) as e:
        parse_data_file("dim 1 1\n", a3)
    assert e.value.line == 1


def test_error_non_commuting_morphism(a3):
    bad = """\
rep A
dim 2 1
rep B
dim 1 1
morphism k A B
comp 2 1x1 1
"""
    # A lives at vertex 2, B at vertex 1; the square at arrow a forces zero
    with pytest.raises(DataSyntaxError):
        parse_data_file(bad, a3)


def test_error_unknown_morphism_endpoint(a3):
    with pytest.raises(DataSyntaxError) as e:
        parse_data_file("morphism k NOPE P_1\n", a3)
    assert e.value.line == 1


def test_session_canonical_names(a3):
    session = load_session(a3, RATIONALS, None)
    assert session.representation("P_2").dims == (1, 1, 0)
    assert session.representation("I_1").dims == (1, 1, 1)
    assert session.representation("S_3").dims == (0, 0, 1)
    with pytest.raises(SemanticError):
        session.representation("P_9")
    with pytest.raises(SemanticError):
        session.morphism("nope")


def test_session_data_shadows_canonical(a3):
    session = load_session(a3, RATIONALS, "rep P_1\ndim 3 1\n")
    assert session.representation("P_1").dims == (0, 0, 1)

import pytest
from hypothesis import given, settings, strategies as st

from lvknot.diagram import (
    UNKNOT,
    ClosedGaussDiagram,
    DiagramError,
    Endpoint,
    GaussCodeError,
    LinkGaussDiagram,
    LongGaussDiagram,
    Role,
    closure,
    concatenate,
    inverse,
    link_to_code,
    parse_gauss_code,
    parse_link_code,
    random_diagram,
    renumber,
    serialize,
    validate,
)
from lvknot.invariants import w_polynomial

seeds = st.integers(0, 2**32 - 1)
sizes = st.integers(0, 8)


def test_parse_basic():
    d = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)")
    assert d.word == (Endpoint("1", Role.OVER), Endpoint("2", Role.OVER),
                      Endpoint("1", Role.UNDER), Endpoint("2", Role.UNDER))
    assert dict(d.signs) == {"1": 1, "2": 1}
    assert d.n_arrows == 2


def test_parse_empty_is_unknot():
    assert parse_gauss_code("") == UNKNOT
    assert parse_gauss_code("   ") == UNKNOT
    assert serialize(UNKNOT) == ""


def test_parse_whitespace_and_unicode_minus():
    assert parse_gauss_code(" O1(+) U1(−) ".replace("+", "−")) == parse_gauss_code("O1(-)U1(-)")


@pytest.mark.parametrize("bad", [
    "O1(+)U1(−)",      # contradictory signs
    "O1(+)",           # unmatched
    "O1(+)O1(+)",      # duplicate role
    "O1(+)X1(+)",      # bad role
    "O1(+)U1(+)junk",
    "O1+U1+",
    "O1(+)|U1(+)",     # link code given to the long parser
])
def test_parse_errors(bad):
    with pytest.raises(GaussCodeError):
        parse_gauss_code(bad)


def test_gauss_code_error_is_value_error():
    assert issubclass(GaussCodeError, DiagramError)
    assert issubclass(DiagramError, ValueError)


def test_constructor_validates():
    with pytest.raises(DiagramError):
        LongGaussDiagram([Endpoint("1", Role.OVER)], {"1": 1})
    with pytest.raises(DiagramError):
        LongGaussDiagram([Endpoint("1", Role.OVER), Endpoint("1", Role.UNDER)], {"1": 2})
    with pytest.raises(DiagramError):
        LongGaussDiagram([Endpoint("1", Role.OVER), Endpoint("1", Role.UNDER)], {"1": 1, "2": 1})


def test_serialize_relabels():
    assert serialize(parse_gauss_code("O7(+)U7(+)")) == "O1(+)U1(+)"
    assert serialize(parse_gauss_code("Ux(-)Oy(+)Ox(-)Uy(+)")) == "U1(-)O2(+)O1(-)U2(+)"


@settings(max_examples=200)
@given(sizes, seeds)
def test_parse_serialize_roundtrip(n, seed):
    d = random_diagram(n, seed)
    assert parse_gauss_code(serialize(d)) == renumber(d)
    assert parse_gauss_code(str(d)) == d


def test_random_diagram_contract():
    assert random_diagram(0, 5) == UNKNOT
    for s in range(20):
        d = random_diagram(6, s)
        validate(d)
        assert d.n_arrows == 6
        assert d == random_diagram(6, s)
    assert len({serialize(random_diagram(6, s)) for s in range(20)}) > 1
    with pytest.raises(ValueError):
        random_diagram(-1, 0)


def test_closure_basic():
    c = closure(parse_gauss_code("O1(+)O2(+)U1(+)U2(+)"))
    assert c == ClosedGaussDiagram(parse_gauss_code("U1(+)U2(+)O1(+)O2(+)").word, {"1": 1, "2": 1})
    assert closure(UNKNOT).n_arrows == 0


@settings(max_examples=100)
@given(st.integers(1, 7), seeds, st.integers(0, 100))
def test_closure_forgets_base_point(n, seed, shift):
    d = random_diagram(n, seed)
    k = shift % len(d.word)
    shifted = LongGaussDiagram(d.word[k:] + d.word[:k], d.signs)
    assert closure(d) == closure(shifted)
    assert hash(closure(d)) == hash(closure(shifted))
    assert closure(d).canonical() == closure(shifted).canonical()


def test_closure_distinguishes_sign_change():
    d = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)")
    e = parse_gauss_code("O1(+)O2(-)U1(+)U2(-)")
    assert closure(d) != closure(e)


def test_concatenate_unit_and_length():
    d = random_diagram(5, 1)
    assert concatenate(d, UNKNOT) == d
    assert concatenate(UNKNOT, d) == d
    e = random_diagram(3, 2)
    assert len(concatenate(d, e).word) == len(d.word) + len(e.word)


def test_concatenate_relabels_collisions():
    a = parse_gauss_code("O1(+)U1(+)")
    b = parse_gauss_code("O1(-)U1(-)")
    assert str(concatenate(a, b)) == "O1(+)U1(+)O2(-)U2(-)"


@settings(max_examples=100)
@given(sizes, sizes, seeds)
def test_w_additive(n1, n2, seed):
    a, b = random_diagram(n1, seed), random_diagram(n2, seed + 1)
    assert w_polynomial(concatenate(a, b)) == w_polynomial(a) + w_polynomial(b)


@settings(max_examples=100)
@given(sizes, seeds)
def test_inverse_properties(n, seed):
    k = random_diagram(n, seed)
    assert inverse(inverse(k)) == k
    assert not w_polynomial(concatenate(k, inverse(k)))
    assert inverse(UNKNOT) == UNKNOT


def test_link_code_roundtrip():
    l = parse_link_code("O1(+)U2(-)|O2(-)U1(+)||")
    assert l.n_components == 4
    assert l.circles[1] == () and l.circles[2] == ()
    assert parse_link_code(link_to_code(l)) == l
    assert LinkGaussDiagram.from_long(UNKNOT).n_components == 1


def test_link_circles_compare_up_to_rotation():
    a = parse_link_code("|O1(+)U1(+)O2(-)U2(-)")
    b = parse_link_code("|O2(-)U2(-)O1(+)U1(+)")
    assert a == b
    c = parse_link_code("O1(+)U1(+)|")
    with pytest.raises(DiagramError):
        c.as_long()

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from lvknot.catalog import CLASSICAL, FLY, W_EXAMPLE, braid_closure, random_classical_knot
from lvknot.diagram import UNKNOT, concatenate, inverse, parse_gauss_code, random_diagram
from lvknot.invariants import (
    V21_PATTERN,
    V22_PATTERN,
    ArrowPattern,
    InvariantReport,
    LaurentPoly,
    beta,
    crossing_indices,
    degree_two_weights,
    pairing,
    report,
    subdiagrams,
    v21,
    v22,
    w_polynomial,
)
from lvknot.oracles import naive_pairing, naive_v21, naive_v22
from lvknot.skein import conway_c2, is_classical

seeds = st.integers(0, 2**32 - 1)


def test_subdiagram_counts():
    d = random_diagram(6, 3)
    for k in range(7):
        assert sum(1 for _ in subdiagrams(d, k)) == comb(6, k)
    assert list(subdiagrams(d, 0)) == [UNKNOT]
    assert list(subdiagrams(d, 6)) == [d]
    with pytest.raises(ValueError):
        list(subdiagrams(d, 7))


def test_pairing_small_cases():
    single = ArrowPattern.unsigned("O1U1")
    assert pairing(single, UNKNOT) == 0
    assert pairing(single, parse_gauss_code("O1(+)U1(+)")) == 1
    assert pairing(single, parse_gauss_code("O1(-)U1(-)")) == -1
    signed = ArrowPattern.signed("O1(-)U1(-)")
    assert pairing(signed, parse_gauss_code("O1(-)U1(-)O2(+)U2(+)")) == 1


@pytest.mark.parametrize("pattern", ["O1U2U1O2", "U1O2O1U2", "O1O2U1U2", "O1U1", "O1U2O3U1U3O2"])
@pytest.mark.parametrize("seed", range(15))
def test_pairing_matches_naive(pattern, seed):
    d = random_diagram(seed % 8 + 1, seed)
    assert pairing(ArrowPattern.unsigned(pattern), d) == naive_pairing(pattern, d)


@settings(max_examples=300)
@given(st.integers(0, 8), seeds)
def test_fast_degree_two_matches_naive(n, seed):
    d = random_diagram(n, seed)
    assert v21(d) == naive_v21(d) == pairing(V21_PATTERN, d)
    assert v22(d) == naive_v22(d) == pairing(V22_PATTERN, d)


def test_small_diagrams_vanish():
    for code in ["", "O1(+)U1(+)", "U1(-)O1(-)"]:
        d = parse_gauss_code(code)
        assert v21(d) == v22(d) == beta(d) == 0


def test_right_trefoil():
    d = CLASSICAL["trefoil_right"]
    assert v21(d) == v22(d) == 1 == conway_c2(d)


def test_w_example_degree_two_values():
    # the interleaved pair here points in the same direction for both arrows,
    # which neither degree-two pattern matches
    d = W_EXAMPLE
    assert degree_two_weights(d) == {"RR": 1, "RL": 0, "LR": 0, "LL": 0}
    assert (v21(d), v22(d)) == (0, 0)


def test_same_direction_pattern_is_not_invariant():
    # a parallel R2 pair is one interleaved same-direction pair
    d = parse_gauss_code("O1(+)O2(-)U1(+)U2(-)")
    assert degree_two_weights(d)["RR"] == -1
    assert report(d).as_record() == report(UNKNOT).as_record()


@pytest.mark.parametrize("name", sorted(CLASSICAL))
def test_classical_calibration(name):
    d = CLASSICAL[name]
    assert is_classical(d)
    c2 = conway_c2(d)
    assert v21(d) == v22(d) == c2
    assert beta(d) == 0


def test_figure_eight_and_five_two():
    assert conway_c2(CLASSICAL["figure_eight"]) == -1
    assert conway_c2(CLASSICAL["five_two"]) == 2
    assert conway_c2(CLASSICAL["cinquefoil"]) == 3


@pytest.mark.parametrize("seed", range(60))
def test_random_braid_closures(seed):
    d = random_classical_knot(seed, n_strands=3 + seed % 2, length=5 + seed % 5)
    assert is_classical(d)
    c2 = conway_c2(d)
    assert v21(d) == v22(d) == c2
    assert beta(d) == 0
    assert not w_polynomial(d)


def test_fly_beta():
    assert (v21(FLY), v22(FLY), beta(FLY)) == (0, -1, 1)
    assert not is_classical(FLY)


def test_w_vector():
    assert w_polynomial(W_EXAMPLE) == LaurentPoly({1: 2})
    assert w_polynomial(UNKNOT) == LaurentPoly()
    assert w_polynomial(W_EXAMPLE).to_pairs() == [[1, 2]]
    # the arc from O1 to U1 holds only O2, which counts -1; symmetrically for arrow 2
    assert crossing_indices(W_EXAMPLE) == {"1": -1, "2": 1}


def test_w_powers():
    k, power = W_EXAMPLE, UNKNOT
    for m in range(1, 6):
        power = concatenate(power, k)
        assert w_polynomial(power) == LaurentPoly({1: 2 * m})


@settings(max_examples=100)
@given(st.integers(0, 8), seeds)
def test_indices_sum_to_zero_weighted(n, seed):
    # each interleaved pair contributes to both indices with opposite weight
    d = random_diagram(n, seed)
    idx = crossing_indices(d)
    assert sum(d.signs[a] * i for a, i in idx.items()) == 0


@settings(max_examples=100)
@given(st.integers(0, 7), seeds)
def test_inverse_pair_has_beta_zero(n, seed):
    k = random_diagram(n, seed)
    kk = concatenate(k, inverse(k))
    assert beta(kk) == 0


def test_laurent_poly_ops():
    p = LaurentPoly({1: 2, -1: 1, 0: 0})
    q = LaurentPoly({1: -2})
    assert (p + q) == LaurentPoly({-1: 1})
    assert p - p == LaurentPoly()
    assert p * 3 == LaurentPoly({1: 6, -1: 3})
    assert not LaurentPoly()
    assert str(LaurentPoly({1: 2})) == "2t"
    assert p.to_pairs() == [[-1, 1], [1, 2]]


def test_report_record_and_validation():
    r = report(FLY)
    assert list(r.as_record()) == ["v21", "v22", "beta", "w"]
    with pytest.raises(ValueError):
        InvariantReport(1, 0, 0, LaurentPoly())


def test_braid_closure_rejects_links():
    assert braid_closure([1, 1], 2) is None
    assert braid_closure([1, 2, 1], 3) is None

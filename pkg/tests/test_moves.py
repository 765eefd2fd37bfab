import math
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from lvknot.catalog import BAND_PASS_PAIR, FLY, FLY_SADDLE, random_classical_knot
from lvknot.diagram import (
    UNKNOT,
    Endpoint,
    LinkGaussDiagram,
    LongGaussDiagram,
    Role,
    parse_gauss_code,
    parse_link_code,
    random_diagram,
    validate,
)
from lvknot.invariants import report, v21, v22
from lvknot.moves import (
    R_MOVES,
    BandPassSite,
    MoveError,
    MoveEvent,
    MoveKind,
    apply,
    apply_band_pass,
    band_pass_sites,
    birth,
    death,
    enumerate_moves,
    saddle,
)

O, U = Role.OVER, Role.UNDER
seeds = st.integers(0, 2**32 - 1)


# -- R3 against plane geometry ---------------------------------------------------


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _meet(p, d, q, e):
    w = (q[0] - p[0], q[1] - p[1])
    return _cross(w, e) / _cross(d, e)


def _random_triangle(rng):
    """Three straight strands at heights top > middle > bottom, as Gauss data.

    Returns the endpoint order along each strand and the three signs,
    with a = top/middle, b = top/bottom, c = middle/bottom.
    """
    lines = []
    for _ in range(3):
        th = rng.uniform(0, 2 * math.pi)
        lines.append(((rng.uniform(-1, 1), rng.uniform(-1, 1)), (math.cos(th), math.sin(th))))
    top, mid, bot = lines
    strands = {
        "top": sorted([(_meet(*top, *mid), Endpoint("a", O)), (_meet(*top, *bot), Endpoint("b", O))]),
        "mid": sorted([(_meet(*mid, *top), Endpoint("a", U)), (_meet(*mid, *bot), Endpoint("c", O))]),
        "bot": sorted([(_meet(*bot, *top), Endpoint("b", U)), (_meet(*bot, *mid), Endpoint("c", U))]),
    }
    signs = {
        "a": 1 if _cross(top[1], mid[1]) > 0 else -1,
        "b": 1 if _cross(top[1], bot[1]) > 0 else -1,
        "c": 1 if _cross(mid[1], bot[1]) > 0 else -1,
    }
    return {k: [ep for _, ep in v] for k, v in strands.items()}, signs


def _key(strands, signs):
    bits = (
        int(strands["top"][0].arrow != "a"),
        int(strands["mid"][0].arrow != "a"),
        int(strands["bot"][0].arrow != "b"),
    )
    return bits + (signs["a"], signs["b"], signs["c"])


def _geometric_patterns():
    rng = random.Random(7)
    return {_key(*_random_triangle(rng)) for _ in range(20000)}


GEOMETRIC = _geometric_patterns()


def _embed(strands, signs, rng, extra=3):
    """Put the three strands in random order along a long word with filler arrows."""
    order = rng.sample(["top", "mid", "bot"], 3)
    blocks = [list(strands[s]) for s in order]
    regions = [[] for _ in range(4)]
    signs = dict(signs)
    for i in range(extra):
        label = f"x{i}"
        signs[label] = rng.choice((1, -1))
        for role in (O, U):
            r = regions[rng.randrange(4)]
            r.insert(rng.randint(0, len(r)), Endpoint(label, role))
    word = regions[0]
    for b, r in zip(blocks, regions[1:]):
        word = word + b + r
    return LongGaussDiagram(word, signs)


def test_geometry_has_sixteen_patterns():
    assert len(GEOMETRIC) == 16


@pytest.mark.parametrize("seed", range(60))
def test_r3_accepts_geometric_triangles(seed):
    rng = random.Random(seed)
    strands, signs = _random_triangle(rng)
    d = _embed(strands, signs, rng)
    event = MoveEvent(MoveKind.R3, ("a", "b", "c"))
    assert event in enumerate_moves(d, {MoveKind.R3})
    after = apply(d, event)
    # every strand now meets its two crossings in the opposite order
    pos = {ep: i for i, ep in enumerate(after.word)}
    for s in strands.values():
        assert pos[s[0]] > pos[s[1]]
    assert dict(after.signs) == dict(d.signs)
    assert report(after).as_record() == report(d).as_record()
    assert apply(after, event) == d


@pytest.mark.parametrize("bits,sgn", list(product(product((0, 1), repeat=3), product((1, -1), repeat=3))))
def test_r3_legality_matches_geometry(bits, sgn):
    tT, tM, tB = bits
    strands = {
        "top": [Endpoint("a", O), Endpoint("b", O)][:: -1 if tT else 1],
        "mid": [Endpoint("a", U), Endpoint("c", O)][:: -1 if tM else 1],
        "bot": [Endpoint("b", U), Endpoint("c", U)][:: -1 if tB else 1],
    }
    signs = dict(zip("abc", sgn))
    d = _embed(strands, signs, random.Random(hash(bits + sgn) & 0xFFFF), extra=0)
    event = MoveEvent(MoveKind.R3, ("a", "b", "c"))
    legal = event in enumerate_moves(d, {MoveKind.R3})
    assert legal == ((tT, tM, tB) + sgn in GEOMETRIC)
    if not legal:
        with pytest.raises(MoveError):
            apply(d, event)


# -- R1 / R2 ----------------------------------------------------------------------


def test_r1_examples():
    assert enumerate_moves(UNKNOT, {MoveKind.R1_REMOVE}) == []
    d = parse_gauss_code("O1(+)U1(+)")
    moves = enumerate_moves(d, {MoveKind.R1_REMOVE})
    assert moves == [MoveEvent(MoveKind.R1_REMOVE, ("1",))]
    assert apply(d, moves[0]) == UNKNOT
    with pytest.raises(MoveError):
        apply(parse_gauss_code("O1(+)O2(+)U1(+)U2(+)"), MoveEvent(MoveKind.R1_REMOVE, ("1",)))


def test_r2_examples():
    d = parse_gauss_code("O1(+)O2(-)U2(-)U1(+)")
    assert apply(d, MoveEvent(MoveKind.R2_REMOVE, ("1", "2"))) == UNKNOT
    parallel = parse_gauss_code("O1(+)O2(-)U1(+)U2(-)")
    assert apply(parallel, MoveEvent(MoveKind.R2_REMOVE, ("2", "1"))) == UNKNOT
    same_sign = parse_gauss_code("O1(+)O2(+)U2(+)U1(+)")
    with pytest.raises(MoveError):
        apply(same_sign, MoveEvent(MoveKind.R2_REMOVE, ("1", "2")))


@settings(max_examples=100)
@given(st.integers(2, 8), seeds)
def test_r2_remove_sites_are_valid(n, seed):
    d = random_diagram(n, seed)
    for m in enumerate_moves(d, {MoveKind.R2_REMOVE}):
        e = apply(d, m)
        validate(e)
        assert e.n_arrows == d.n_arrows - 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), seeds)
def test_add_moves_are_undone_by_removal(n, seed):
    d = random_diagram(n, seed)
    rng = random.Random(seed)
    r1 = rng.choice(enumerate_moves(d, {MoveKind.R1_ADD}))
    assert apply(apply(d, r1), MoveEvent(MoveKind.R1_REMOVE, (r1.site[-1],))) == d
    r2 = rng.choice(enumerate_moves(d, {MoveKind.R2_ADD}))
    assert apply(apply(d, r2), MoveEvent(MoveKind.R2_REMOVE, r2.site[-2:])) == d


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_reidemeister_walk_preserves_invariants(seed):
    rng = random.Random(seed)
    d = random_classical_knot(seed % 1000, 3, 7)
    start = report(d).as_record()
    for _ in range(5):
        moves = enumerate_moves(d, R_MOVES)
        kind = rng.choice(sorted({m.kind for m in moves}))
        d = apply(d, rng.choice([m for m in moves if m.kind is kind]))
        assert report(d).as_record() == start


def test_bad_gap_is_rejected():
    d = parse_gauss_code("O1(+)U1(+)")
    with pytest.raises(MoveError):
        apply(d, MoveEvent(MoveKind.R1_ADD, (0, 5, 1, "OU", "2")))
    with pytest.raises(MoveError):
        apply(d, MoveEvent(MoveKind.R1_ADD, (0, 0, 1, "OU", "1")))


# -- band-pass ----------------------------------------------------------------------


def test_band_pass_pair_changes_parities():
    d1, d2 = BAND_PASS_PAIR
    sites = band_pass_sites(d1)
    assert len(sites) == 1
    assert apply_band_pass(d1, sites[0]) == d2
    assert v22(d1) % 2 != v22(d2) % 2
    assert v21(d1) % 2 != v21(d2) % 2
    assert report(d1).beta == report(d2).beta


@settings(max_examples=100)
@given(st.integers(4, 9), seeds)
def test_band_pass_is_involution(n, seed):
    d = random_diagram(n, seed)
    for site in band_pass_sites(d):
        e = apply_band_pass(d, site)
        assert apply_band_pass(e, site) == d
        assert report(e).beta == report(d).beta


def test_band_pass_rejects_non_sites():
    d = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)O3(+)O4(+)U3(+)U4(+)")
    with pytest.raises(MoveError):
        apply_band_pass(d, BandPassSite(("1", "2", "3", "4")))
    with pytest.raises(MoveError):
        BandPassSite(("1", "1", "2", "3"))


# -- cobordism moves ----------------------------------------------------------------


def test_birth_death():
    l = LinkGaussDiagram.from_long(parse_gauss_code("O1(+)U1(+)"))
    b = birth(l)
    assert b.n_components == l.n_components + 1
    assert death(b, 1) == l
    with pytest.raises(MoveError):
        death(parse_link_code("|O1(+)U1(+)"), 1)
    with pytest.raises(MoveError):
        death(l, 0)


def test_saddle_merge_and_split():
    l = parse_link_code("O1(+)U1(+)|")
    merged = saddle(l, (0, 1), (1, 0))
    assert merged.n_components == 1
    split = saddle(LinkGaussDiagram.from_long(parse_gauss_code("O1(+)U1(+)O2(-)U2(-)")), (0, 1), (0, 3))
    assert split.n_components == 2
    assert split.circles == ((Endpoint("1", U), Endpoint("2", O)),)
    with pytest.raises(MoveError):
        saddle(l, (0, 1), (0, 1))
    with pytest.raises(MoveError):
        saddle(l, (0, 0), (0, 2), reconnection="unoriented")


def test_fly_saddle_then_unknot():
    l = saddle(LinkGaussDiagram.from_long(FLY), *FLY_SADDLE)
    assert l.n_components == 2
    l = apply(l, MoveEvent(MoveKind.R2_REMOVE, ("1", "2")))
    assert death(l, 1) == LinkGaussDiagram.from_long(UNKNOT)


def test_long_diagram_cannot_gain_circles():
    with pytest.raises(MoveError):
        apply(parse_gauss_code("O1(+)U1(+)O2(-)U2(-)"), MoveEvent(MoveKind.SADDLE, (0, 1, 0, 3)))


# -- events -------------------------------------------------------------------------------


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 5), seeds)
def test_event_text_roundtrip(n, seed):
    link = LinkGaussDiagram.from_long(random_diagram(n, seed))
    kinds = set(MoveKind) - {MoveKind.R2_ADD}
    for m in enumerate_moves(birth(link), kinds):
        assert MoveEvent.from_text(m.to_text()) == m


@pytest.mark.parametrize("text", ["R9 1", "R1_remove", "R1_add 0 0 2 OU 1", "Saddle 0 x 0 1", "R2_add 0 0 0 1 1 Q a b"])
def test_bad_event_text(text):
    with pytest.raises(MoveError):
        MoveEvent.from_text(text)

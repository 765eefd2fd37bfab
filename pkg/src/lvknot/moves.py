"""Reidemeister, band-pass and cobordism moves on Gauss diagrams.

Every move works on a :class:`LinkGaussDiagram`.  The long-diagram entry
points convert on the way in and out.  Components are addressed by index
(0 is the long component, ``i >= 1`` is ``circles[i - 1]``).  A *gap* ``g``
of a component is the arc just before its ``g``-th endpoint; the long
component of length ``L`` has gaps ``0..L``, a circle has gaps ``0..L-1``
(an empty circle has the single gap 0).

Sites name arrows rather than positions wherever that is unambiguous, so a
move written down once replays exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Sequence, Union

from .diagram import (
    DiagramError,
    Endpoint,
    LinkGaussDiagram,
    LongGaussDiagram,
    Role,
)

__all__ = [
    "MoveKind",
    "MoveEvent",
    "MoveError",
    "BandPassSite",
    "R_MOVES",
    "enumerate_moves",
    "apply",
    "apply_band_pass",
    "band_pass_sites",
    "saddle",
    "birth",
    "death",
]

Diagram = Union[LongGaussDiagram, LinkGaussDiagram]


class MoveError(ValueError):
    """The move is not legal at the given site."""


class MoveKind(str, Enum):
    R1_ADD = "R1_add"
    R1_REMOVE = "R1_remove"
    R2_ADD = "R2_add"
    R2_REMOVE = "R2_remove"
    R3 = "R3"
    BAND_PASS = "BandPass"
    SADDLE = "Saddle"
    BIRTH = "Birth"
    DEATH = "Death"


R_MOVES = frozenset(
    {MoveKind.R1_ADD, MoveKind.R1_REMOVE, MoveKind.R2_ADD, MoveKind.R2_REMOVE, MoveKind.R3}
)

# field types of each site, in order
_SCHEMA: dict[MoveKind, tuple[str, ...]] = {
    MoveKind.R1_ADD: ("int", "int", "sign", "order", "arrow"),
    MoveKind.R1_REMOVE: ("arrow",),
    MoveKind.R2_ADD: ("int", "int", "int", "int", "sign", "parallel", "arrow", "arrow"),
    MoveKind.R2_REMOVE: ("arrow", "arrow"),
    MoveKind.R3: ("arrow", "arrow", "arrow"),
    MoveKind.BAND_PASS: ("arrow", "arrow", "arrow", "arrow"),
    MoveKind.SADDLE: ("int", "int", "int", "int"),
    MoveKind.BIRTH: (),
    MoveKind.DEATH: ("int",),
}


def _check_field(kind: str, value) -> bool:
    if kind == "int":
        return isinstance(value, int) and not isinstance(value, bool) and value >= 0
    if kind == "sign":
        return value in (1, -1)
    if kind == "order":
        return value in ("OU", "UO")
    if kind == "parallel":
        return value in ("P", "A")
    return isinstance(value, str) and value != "" and all(ch.isalnum() or ch in "_'" for ch in value)


@dataclass(frozen=True)
class MoveEvent:
    """One move and where it applies.

    Site layouts:

    * ``R1_add``: component, gap, sign, ``"OU"``/``"UO"``, new label
    * ``R1_remove``: arrow
    * ``R2_add``: component and gap for the adjacent over endpoints
      ``O_a O_b``, then component and gap for the under endpoints (gap
      counted after the over pair is inserted), sign of ``a`` (``b`` gets
      the opposite), ``"P"`` for ``U_a U_b`` or ``"A"`` for ``U_b U_a``,
      labels ``a``, ``b``
    * ``R2_remove``: two arrows
    * ``R3``: arrows ``a`` (top over middle), ``b`` (top over bottom),
      ``c`` (middle over bottom)
    * ``BandPass``: the four arrows where the bands cross
    * ``Saddle``: component, gap, component, gap
    * ``Birth``: nothing; ``Death``: component index of an empty circle
    """

    kind: MoveKind
    site: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", MoveKind(self.kind))
        object.__setattr__(self, "site", tuple(self.site))
        schema = _SCHEMA[self.kind]
        if len(self.site) != len(schema) or not all(
            _check_field(k, v) for k, v in zip(schema, self.site)
        ):
            raise MoveError(f"site {self.site!r} does not fit {self.kind.value} {schema}")

    def to_text(self) -> str:
        parts = [self.kind.value]
        for k, v in zip(_SCHEMA[self.kind], self.site):
            parts.append(("+1" if v > 0 else "-1") if k == "sign" else str(v))
        return " ".join(parts)

    @classmethod
    def from_text(cls, line: str) -> "MoveEvent":
        head, *fields = line.split()
        try:
            kind = MoveKind(head)
        except ValueError:
            raise MoveError(f"unknown move kind {head!r}") from None
        schema = _SCHEMA[kind]
        if len(fields) != len(schema):
            raise MoveError(f"{kind.value} takes {len(schema)} fields, got {len(fields)}")
        site = []
        for k, f in zip(schema, fields):
            if k in ("int", "sign"):
                try:
                    site.append(int(f))
                except ValueError:
                    raise MoveError(f"expected an integer, got {f!r}") from None
            else:
                site.append(f)
        return cls(kind, tuple(site))

    def __str__(self) -> str:
        return self.to_text()


def _event(kind: MoveKind, site: tuple) -> MoveEvent:
    # enumerate_moves builds sites that fit the schema by construction
    ev = object.__new__(MoveEvent)
    object.__setattr__(ev, "kind", kind)
    object.__setattr__(ev, "site", site)
    return ev


@dataclass(frozen=True)
class BandPassSite:
    """Four arrows where two bands cross.

    ``variant`` and ``configuration`` record how a generated site was built
    and are None for sites found by search; legality depends only on the
    local pattern of the four arrows.
    """

    arrows: tuple[str, str, str, str]
    variant: int | None = None
    configuration: object = None

    def __post_init__(self):
        if len(self.arrows) != 4 or len(set(self.arrows)) != 4:
            raise MoveError("a band-pass site needs four distinct arrows")

    def as_event(self) -> MoveEvent:
        return MoveEvent(MoveKind.BAND_PASS, tuple(self.arrows))


# -- helpers on component lists ---------------------------------------------

Comps = list[list[Endpoint]]


def _comps(link: LinkGaussDiagram) -> Comps:
    return [list(c) for c in link.components]


def _build(comps: Comps, signs: dict[str, int]) -> LinkGaussDiagram:
    try:
        return LinkGaussDiagram(comps[0], comps[1:], signs)
    except DiagramError as e:
        raise MoveError(str(e)) from None


def _locate(comps: Comps) -> dict[Endpoint, tuple[int, int]]:
    return {ep: (c, i) for c, comp in enumerate(comps) for i, ep in enumerate(comp)}


def _orders(comps: Comps, loc, e1: Endpoint, e2: Endpoint) -> set[int]:
    """Ways ``e1, e2`` sit next to each other: 0 for e1 then e2, 1 for e2 then e1."""
    (c1, i1), (c2, i2) = loc[e1], loc[e2]
    if c1 != c2:
        return set()
    n = len(comps[c1])
    out = set()
    if c1 == 0:
        if i2 == i1 + 1:
            out.add(0)
        if i1 == i2 + 1:
            out.add(1)
    else:
        if (i2 - i1) % n == 1:
            out.add(0)
        if (i1 - i2) % n == 1:
            out.add(1)
    return out


def _n_gaps(comps: Comps, c: int) -> int:
    n = len(comps[c])
    return n + 1 if c == 0 else max(n, 1)


def _check_gap(comps: Comps, c: int, g: int) -> None:
    if not 0 <= c < len(comps):
        raise MoveError(f"no component {c}")
    if not 0 <= g < _n_gaps(comps, c):
        raise MoveError(f"no gap {g} on component {c}")


def _fresh(signs, k: int = 1) -> list[str]:
    out, i = [], 1
    while len(out) < k:
        if str(i) not in signs:
            out.append(str(i))
        i += 1
    return out


O, U = Role.OVER, Role.UNDER


def _ep(a: str, r: Role) -> Endpoint:
    return Endpoint(a, r)


# -- Reidemeister moves ----------------------------------------------------


def _r1_remove(comps, signs, a):
    if a not in signs:
        raise MoveError(f"no arrow {a!r}")
    loc = _locate(comps)
    if not _orders(comps, loc, _ep(a, O), _ep(a, U)):
        raise MoveError(f"endpoints of {a!r} are not adjacent")
    comps = [[ep for ep in c if ep.arrow != a] for c in comps]
    signs = {k: v for k, v in signs.items() if k != a}
    return comps, signs


def _r1_add(comps, signs, c, g, s, order, a):
    if a in signs:
        raise MoveError(f"label {a!r} already in use")
    _check_gap(comps, c, g)
    pair = [_ep(a, O), _ep(a, U)] if order == "OU" else [_ep(a, U), _ep(a, O)]
    comps = [list(x) for x in comps]
    comps[c][g:g] = pair
    return comps, {**signs, a: s}


def _r2_remove(comps, signs, a, b):
    if a == b or a not in signs or b not in signs:
        raise MoveError("R2 needs two existing arrows")
    if signs[a] != -signs[b]:
        raise MoveError(f"{a!r} and {b!r} have equal signs")
    loc = _locate(comps)
    if not _orders(comps, loc, _ep(a, O), _ep(b, O)) or not _orders(comps, loc, _ep(a, U), _ep(b, U)):
        raise MoveError(f"{a!r} and {b!r} do not bound a bigon")
    comps = [[ep for ep in x if ep.arrow not in (a, b)] for x in comps]
    return comps, {k: v for k, v in signs.items() if k not in (a, b)}


def _r2_add(comps, signs, c1, g1, c2, g2, s, parallel, a, b):
    if a == b or a in signs or b in signs:
        raise MoveError("R2 needs two new distinct labels")
    _check_gap(comps, c1, g1)
    comps = [list(x) for x in comps]
    comps[c1][g1:g1] = [_ep(a, O), _ep(b, O)]
    _check_gap(comps, c2, g2)
    if c2 == c1 and g2 == g1 + 1:
        raise MoveError("under pair would split the over pair")
    comps[c2][g2:g2] = [_ep(a, U), _ep(b, U)] if parallel == "P" else [_ep(b, U), _ep(a, U)]
    return comps, {**signs, a: s, b: -s}


def _r3_orders(comps, signs, a, b, c):
    """Order bits (top, middle, bottom) making ``a, b, c`` a legal triangle, or None.

    A bit is 0 when the strand meets the first-named arrow of its pair
    first (top: a then b, middle: a then c, bottom: b then c).  The
    triangle is realizable iff for each two arrows sharing a strand the
    product of their signs is -1 to the sum of the other two strands' bits.
    """
    if len({a, b, c}) != 3 or not all(x in signs for x in (a, b, c)):
        return None
    loc = _locate(comps)
    top = _orders(comps, loc, _ep(a, O), _ep(b, O))
    mid = _orders(comps, loc, _ep(a, U), _ep(c, O))
    bot = _orders(comps, loc, _ep(b, U), _ep(c, U))
    for t, m, bb in product(sorted(top), sorted(mid), sorted(bot)):
        if signs[a] * signs[b] == (-1) ** (m + bb) and signs[a] * signs[c] == (-1) ** (t + bb):
            return t, m, bb
    return None


def _swap(comps, loc, e1, e2):
    (c1, i1), (c2, i2) = loc[e1], loc[e2]
    comps[c1][i1], comps[c2][i2] = e2, e1


def _r3(comps, signs, a, b, c):
    if _r3_orders(comps, signs, a, b, c) is None:
        raise MoveError(f"{a!r}, {b!r}, {c!r} do not form an R3 triangle")
    loc = _locate(comps)
    comps = [list(x) for x in comps]
    _swap(comps, loc, _ep(a, O), _ep(b, O))
    _swap(comps, loc, _ep(a, U), _ep(c, O))
    _swap(comps, loc, _ep(b, U), _ep(c, U))
    return comps, signs


# -- band-pass --------------------------------------------------------------


def _strand_pairs(comps, loc, arrows: Sequence[str], role: Role):
    """Split the ``role`` endpoints of four arrows into two adjacent pairs.

    Yields ``((x, y), (z, w))`` with each pair listed in traversal order.
    """
    first = arrows[0]
    for partner in arrows[1:]:
        rest = [x for x in arrows[1:] if x != partner]
        o1 = _orders(comps, loc, _ep(first, role), _ep(partner, role))
        o2 = _orders(comps, loc, _ep(rest[0], role), _ep(rest[1], role))
        for t1, t2 in product(sorted(o1), sorted(o2)):
            p1 = (first, partner) if t1 == 0 else (partner, first)
            p2 = (rest[0], rest[1]) if t2 == 0 else (rest[1], rest[0])
            yield p1, p2


def _is_band_crossing(comps, signs, arrows: Sequence[str]) -> bool:
    """Two bands of antiparallel strands crossing in a 2x2 grid.

    The over endpoints form two adjacent pairs (the strands of the upper
    band) and the under endpoints two adjacent pairs (the lower band); each
    strand of one band meets both strands of the other, the two strands of
    a band meet the other band in opposite orders, and the two crossings on
    any one strand have opposite signs.
    """
    if len(set(arrows)) != 4 or not all(x in signs for x in arrows):
        return False
    loc = _locate(comps)
    for (a1, a2) in _strand_pairs(comps, loc, arrows, O):
        for (b1, b2) in _strand_pairs(comps, loc, arrows, U):
            upper = [set(a1), set(a2)]
            lower = [set(b1), set(b2)]
            if any(len(x & y) != 1 for x in upper for y in lower):
                continue
            if any(signs[p] == signs[q] for p, q in (a1, a2, b1, b2)):
                continue

            def strand_of(arrow, strands):
                return 0 if arrow in strands[0] else 1

            # antiparallel: second strand meets the other band in reverse order
            if strand_of(a1[0], lower) == strand_of(a2[0], lower):
                continue
            if strand_of(b1[0], upper) == strand_of(b2[0], upper):
                continue
            return True
    return False


def _band_pass(comps, signs, arrows):
    if not _is_band_crossing(comps, signs, arrows):
        raise MoveError(f"{arrows!r} is not a band-pass site")
    toggled = set(arrows)
    comps = [[_ep(ep.arrow, ep.role.other) if ep.arrow in toggled else ep for ep in x] for x in comps]
    signs = {k: (-v if k in toggled else v) for k, v in signs.items()}
    return comps, signs


# -- cobordism moves ----------------------------------------------------------


def _saddle(comps, signs, c1, g1, c2, g2, reconnection="oriented"):
    _check_gap(comps, c1, g1)
    _check_gap(comps, c2, g2)
    if reconnection != "oriented":
        if c1 == c2 == 0:
            raise MoveError("that splice would close up the long component")
        raise MoveError("incompatible reconnection: orientations would disagree")
    comps = [list(x) for x in comps]
    if c1 == c2:
        if g1 == g2:
            raise MoveError("a saddle needs two different arcs")
        g1, g2 = sorted((g1, g2))
        w = comps[c1]
        inner = w[g1:g2]
        comps[c1] = w[:g1] + w[g2:] if c1 == 0 else w[g2:] + w[:g1]
        comps.append(inner)
        return comps, signs
    if c1 > c2:
        c1, g1, c2, g2 = c2, g2, c1, g1
    w1, w2 = comps[c1], comps[c2]
    loop = w2[g2:] + w2[:g2]
    comps[c1] = w1[:g1] + loop + w1[g1:] if c1 == 0 else w1[g1:] + w1[:g1] + loop
    del comps[c2]
    return comps, signs


def _birth(comps, signs):
    return [list(x) for x in comps] + [[]], signs


def _death(comps, signs, c):
    if c == 0:
        raise MoveError("the long component cannot die")
    if not 0 < c < len(comps):
        raise MoveError(f"no component {c}")
    if comps[c]:
        raise MoveError(f"component {c} carries arrow endpoints")
    return [list(x) for i, x in enumerate(comps) if i != c], signs


_APPLY = {
    MoveKind.R1_ADD: _r1_add,
    MoveKind.R1_REMOVE: _r1_remove,
    MoveKind.R2_ADD: _r2_add,
    MoveKind.R2_REMOVE: _r2_remove,
    MoveKind.R3: _r3,
    MoveKind.SADDLE: _saddle,
    MoveKind.BIRTH: _birth,
    MoveKind.DEATH: _death,
}


def _as_link(d: Diagram) -> LinkGaussDiagram:
    return LinkGaussDiagram.from_long(d) if isinstance(d, LongGaussDiagram) else d


def apply(d: Diagram, m: MoveEvent) -> Diagram:
    """Apply ``m`` to ``d`` and return a diagram of the same type.

    Raises:
        MoveError: the site is illegal in ``d``, or a long diagram would
            acquire circle components.
    """
    link = _as_link(d)
    comps, signs = _comps(link), dict(link.signs)
    if m.kind is MoveKind.BAND_PASS:
        comps, signs = _band_pass(comps, signs, m.site)
    else:
        comps, signs = _APPLY[m.kind](comps, signs, *m.site)
    out = _build(comps, signs)
    if isinstance(d, LongGaussDiagram):
        if out.circles:
            raise MoveError(f"{m.kind.value} would leave circle components on a long knot")
        return out.as_long()
    return out


def apply_band_pass(d: Diagram, site: BandPassSite) -> Diagram:
    """Pass one band through the other: toggle direction and sign of the four arrows."""
    return apply(d, site.as_event())


def saddle(l: LinkGaussDiagram, arc1: tuple[int, int], arc2: tuple[int, int],
           reconnection: str = "oriented") -> LinkGaussDiagram:
    """Oriented saddle between two arcs ``(component, gap)``.

    Two arcs on one component split it (the piece between them becomes a
    new last circle); arcs on different components merge them.
    """
    comps, signs = _saddle(_comps(l), dict(l.signs), *arc1, *arc2, reconnection=reconnection)
    return _build(comps, signs)


def birth(l: LinkGaussDiagram) -> LinkGaussDiagram:
    """Add an empty circle at the end."""
    return _build(*_birth(_comps(l), dict(l.signs)))


def death(l: LinkGaussDiagram, component: int) -> LinkGaussDiagram:
    """Remove the empty circle at ``component`` (an index >= 1)."""
    return _build(*_death(_comps(l), dict(l.signs), component))


# -- enumeration -------------------------------------------------------------


def _adjacent_pairs(comps) -> Iterable[tuple[Endpoint, Endpoint]]:
    for c, comp in enumerate(comps):
        n = len(comp)
        last = n - 1 if c == 0 else (n if n > 2 else n - 1)
        for i in range(max(last, 0)):
            yield comp[i], comp[(i + 1) % n]


def band_pass_sites(d: Diagram) -> list[BandPassSite]:
    """Every set of four arrows forming a band crossing, each listed once."""
    link = _as_link(d)
    comps, signs = _comps(link), dict(link.signs)
    strands = []
    for e1, e2 in _adjacent_pairs(comps):
        if e1.role is O and e2.role is O and signs[e1.arrow] != signs[e2.arrow]:
            strands.append(frozenset((e1.arrow, e2.arrow)))
    found = []
    seen = set()
    for i, s1 in enumerate(strands):
        for s2 in strands[i + 1:]:
            quad = s1 | s2
            if len(quad) != 4 or quad in seen:
                continue
            arrows = tuple(a for a in link.arrows if a in quad)
            if _is_band_crossing(comps, signs, arrows):
                seen.add(quad)
                found.append(BandPassSite(arrows))
    return found


def enumerate_moves(d: Diagram, kinds: Iterable[MoveKind | str]) -> list[MoveEvent]:
    """All legal moves of the requested kinds, in a deterministic order.

    Add-forms are enumerated at every gap with both signs and both
    orientation choices, using the smallest unused numeric labels.
    Saddles are listed between every two distinct arcs.
    """
    kinds = {MoveKind(k) for k in kinds}
    link = _as_link(d)
    comps, signs = _comps(link), dict(link.signs)
    arrows = link.arrows
    order = {a: i for i, a in enumerate(arrows)}
    out: list[MoveEvent] = []
    is_long = isinstance(d, LongGaussDiagram)

    if MoveKind.R1_REMOVE in kinds:
        loc = _locate(comps)
        for a in arrows:
            if _orders(comps, loc, _ep(a, O), _ep(a, U)):
                out.append(_event(MoveKind.R1_REMOVE, (a,)))

    if MoveKind.R2_REMOVE in kinds:
        seen = set()
        for e1, e2 in _adjacent_pairs(comps):
            if e1.role is O and e2.role is O:
                a, b = sorted((e1.arrow, e2.arrow), key=order.get)
                if (a, b) not in seen and a != b:
                    seen.add((a, b))
                    try:
                        _r2_remove(comps, signs, a, b)
                    except MoveError:
                        continue
                    out.append(_event(MoveKind.R2_REMOVE, (a, b)))

    if MoveKind.R3 in kinds:
        loc = _locate(comps)
        seen = set()
        for e1, e2 in _adjacent_pairs(comps):
            if not (e1.role is O and e2.role is O) or e1.arrow == e2.arrow:
                continue
            for a, b in ((e1.arrow, e2.arrow), (e2.arrow, e1.arrow)):
                ca, ia = loc[_ep(a, U)]
                n = len(comps[ca])
                nbrs = {ia - 1, ia + 1} if ca == 0 else {(ia - 1) % n, (ia + 1) % n}
                for j in sorted(nbrs):
                    if not 0 <= j < n:
                        continue
                    e = comps[ca][j]
                    if e.role is O and e.arrow not in (a, b):
                        key = (a, b, e.arrow)
                        if key not in seen and _r3_orders(comps, signs, *key) is not None:
                            seen.add(key)
                            out.append(_event(MoveKind.R3, key))

    if MoveKind.BAND_PASS in kinds:
        out.extend(s.as_event() for s in band_pass_sites(link))

    if MoveKind.R1_ADD in kinds:
        (a,) = _fresh(signs)
        for c in range(len(comps)):
            for g in range(_n_gaps(comps, c)):
                for s in (1, -1):
                    for o in ("OU", "UO"):
                        out.append(_event(MoveKind.R1_ADD, (c, g, s, o, a)))

    if MoveKind.R2_ADD in kinds:
        a, b = _fresh(signs, 2)
        for c1 in range(len(comps)):
            for g1 in range(_n_gaps(comps, c1)):
                grown = [list(x) for x in comps]
                grown[c1][g1:g1] = [_ep(a, O), _ep(b, O)]
                for c2 in range(len(grown)):
                    for g2 in range(_n_gaps(grown, c2)):
                        if c2 == c1 and g2 == g1 + 1:
                            continue
                        for s in (1, -1):
                            for par in ("P", "A"):
                                out.append(_event(MoveKind.R2_ADD, (c1, g1, c2, g2, s, par, a, b)))

    if MoveKind.SADDLE in kinds and not is_long:
        arcs = [(c, g) for c in range(len(comps)) for g in range(_n_gaps(comps, c))]
        for i, (c1, g1) in enumerate(arcs):
            for c2, g2 in arcs[i + 1:]:
                out.append(_event(MoveKind.SADDLE, (c1, g1, c2, g2)))

    if MoveKind.BIRTH in kinds and not is_long:
        out.append(_event(MoveKind.BIRTH, ()))

    if MoveKind.DEATH in kinds:
        for c in range(1, len(comps)):
            if not comps[c]:
                out.append(_event(MoveKind.DEATH, (c,)))

    return out

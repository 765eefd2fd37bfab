"""Cobordism certificates, band-pass test pairs and bounded move search."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagram import (
    DiagramError,
    Endpoint,
    LinkGaussDiagram,
    LongGaussDiagram,
    Role,
    concatenate,
    inverse,
    link_to_code,
    parse_link_code,
    serialize,
)
from .moves import (
    BandPassSite,
    MoveError,
    MoveEvent,
    MoveKind,
    R_MOVES,
    apply,
    apply_band_pass,
    enumerate_moves,
)

__all__ = [
    "CobordismCertificate",
    "CertificateError",
    "Verdict",
    "ConfigCase",
    "CONFIGURATIONS",
    "verify_certificate",
    "trivialize_inverse_pair",
    "ribbon_certificate",
    "generate_band_pass_pair",
    "all_config_cases",
    "bounded_equivalence",
    "dumps_certificate",
    "loads_certificate",
]


class CertificateError(ValueError):
    """A certificate file that cannot be parsed."""


def _count(events: Iterable[MoveEvent]) -> tuple[int, int, int]:
    kinds = [e.kind for e in events]
    return kinds.count(MoveKind.BIRTH), kinds.count(MoveKind.SADDLE), kinds.count(MoveKind.DEATH)


@dataclass(frozen=True)
class CobordismCertificate:
    """Replayable edit script from ``start`` to ``end``."""

    start: LinkGaussDiagram
    events: tuple[MoveEvent, ...]
    end: LinkGaussDiagram
    counts: tuple[int, int, int] = field(default=None)  # births, saddles, deaths

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        if self.counts is None:
            object.__setattr__(self, "counts", _count(self.events))

    @property
    def births(self) -> int:
        return self.counts[0]

    @property
    def saddles(self) -> int:
        return self.counts[1]

    @property
    def deaths(self) -> int:
        return self.counts[2]


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str = ""
    failed_step: int | None = None

    def __bool__(self) -> bool:
        return self.accepted


def verify_certificate(c: CobordismCertificate, mode: str = "concordance") -> Verdict:
    """Replay ``c`` and check the birth/saddle/death accounting.

    ``mode`` is ``"concordance"`` or ``"ribbon"`` (which also forbids
    births).  ``failed_step`` is the index of the first illegal event, or
    ``len(events)`` when the replay ends somewhere other than ``c.end``.
    """
    if mode not in ("concordance", "ribbon"):
        raise ValueError(f"unknown mode {mode!r}")
    if c.start.circles or c.end.circles:
        return Verdict(False, "start and end must be long knots")
    if tuple(c.counts) != _count(c.events):
        return Verdict(False, f"declared counts {tuple(c.counts)} do not match events {_count(c.events)}")
    state = c.start
    for i, m in enumerate(c.events):
        try:
            state = apply(state, m)
        except (MoveError, DiagramError) as e:
            return Verdict(False, f"step {i} ({m.to_text()}): {e}", i)
    if state != c.end:
        return Verdict(False, "replay does not reach the declared end", len(c.events))
    b, s, d = c.counts
    if b - s + d != 0:
        return Verdict(False, f"#b - #s + #d = {b - s + d}, not 0")
    if mode == "ribbon" and b:
        return Verdict(False, f"ribbon certificate uses {b} births")
    return Verdict(True, "ok")


def _replay(start: LinkGaussDiagram, events: Sequence[MoveEvent]) -> LinkGaussDiagram:
    state = start
    for m in events:
        state = apply(state, m)
    return state


def trivialize_inverse_pair(k: LongGaussDiagram) -> CobordismCertificate:
    """Ribbon certificate from ``k # k^-1`` to the long unknot.

    With ``W`` the word of ``k # k^-1`` (length ``4n``), position ``p`` and
    its mirror ``4n - 1 - p`` hold the endpoints of ``x`` and ``m(x)``.
    The first saddle joins the two infinite rays, leaving the long
    component empty and all of ``W`` on one circle.  Saddle ``j`` then cuts
    that circle just after ``W[j-1]`` and just before ``W[4n-j]``, which
    peels the adjacent pair ``W[4n-j], W[j-1]`` onto a circle of its own.
    After ``2n`` saddles each mirror pair of endpoints sits alone on a
    circle, so ``x, m(x)`` cancel by Reidemeister II, and the ``2n`` empty
    circles die.
    """
    n = k.n_arrows
    start = LinkGaussDiagram.from_long(concatenate(k, inverse(k)))
    if n == 0:
        return CobordismCertificate(start, (), start)
    word = start.long
    size = len(word)
    mirror = {word[p].arrow: word[size - 1 - p].arrow for p in range(size // 2)}

    events = [MoveEvent(MoveKind.SADDLE, (0, 0, 0, size))]
    state = _replay(start, events)
    for j in range(1, 2 * n):
        inner = len(state.components) - 1
        length = len(state.components[inner])
        ev = MoveEvent(MoveKind.SADDLE, (inner, 1, inner, length - 1))
        state = apply(state, ev)
        events.append(ev)
        # every saddle here splits a component
        assert state.n_components == j + 2
    for x in k.arrows:
        ev = MoveEvent(MoveKind.R2_REMOVE, (x, mirror[x]))
        state = apply(state, ev)
        events.append(ev)
    for comp in range(2 * n, 0, -1):
        ev = MoveEvent(MoveKind.DEATH, (comp,))
        state = apply(state, ev)
        events.append(ev)
    return CobordismCertificate(start, tuple(events), state)


def ribbon_certificate(
    k: LongGaussDiagram, saddles: Sequence[tuple[tuple[int, int], tuple[int, int]]]
) -> CobordismCertificate:
    """Certificate: the given saddles, then greedy R1/R2 removals, then deaths.

    Raises MoveError if the diagram is not reduced to the long unknot
    plus empty circles this way.
    """
    start = LinkGaussDiagram.from_long(k)
    events = [MoveEvent(MoveKind.SADDLE, (*a1, *a2)) for a1, a2 in saddles]
    state = _replay(start, events)
    while state.n_arrows:
        removals = enumerate_moves(state, {MoveKind.R1_REMOVE, MoveKind.R2_REMOVE})
        if not removals:
            raise MoveError(f"stuck at {link_to_code(state)}")
        state = apply(state, removals[0])
        events.append(removals[0])
    for comp in range(len(state.circles), 0, -1):
        ev = MoveEvent(MoveKind.DEATH, (comp,))
        state = apply(state, ev)
        events.append(ev)
    return CobordismCertificate(start, tuple(events), state)


# -- certificate files ---------------------------------------------------------

_HEADER = "# lvknot cobordism certificate"


def dumps_certificate(c: CobordismCertificate) -> str:
    lines = [_HEADER, f"start {link_to_code(c.start)}"]
    lines += [m.to_text() for m in c.events]
    b, s, d = c.counts
    lines += [f"end {link_to_code(c.end)}", f"counts births={b} saddles={s} deaths={d}"]
    return "\n".join(lines) + "\n"


def loads_certificate(text: str) -> CobordismCertificate:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 3:
        raise CertificateError("certificate needs start, end and counts lines")
    head, tail, counts_line = lines[0], lines[-2], lines[-1]

    def field_value(line: str, key: str) -> str:
        name, _, rest = line.partition(" ")
        if name != key:
            raise CertificateError(f"expected {key!r} line, got {line!r}")
        return rest.strip()

    try:
        start = parse_link_code(field_value(head, "start"))
        end = parse_link_code(field_value(tail, "end"))
        events = tuple(MoveEvent.from_text(ln) for ln in lines[1:-2])
    except (DiagramError, MoveError) as e:
        raise CertificateError(str(e)) from None
    parts = dict(p.split("=", 1) for p in field_value(counts_line, "counts").split() if "=" in p)
    try:
        counts = (int(parts["births"]), int(parts["saddles"]), int(parts["deaths"]))
    except (KeyError, ValueError):
        raise CertificateError(f"bad counts line {counts_line!r}") from None
    return CobordismCertificate(start, events, end, counts)


# -- band-pass configurations ---------------------------------------------------

# Strands of the two bands: a1, a2 (upper band, horizontal), b1, b2 (lower
# band, vertical).  A configuration is the cyclic order in which the closed-up
# knot runs through the four strands.  Up to reversing the knot's orientation
# the six cyclic orders fall into four classes, represented by 1-4 (5 is
# equivalent to 2).  With the two band orientations this gives eight closed
# diagrams and five unordered band-pass pairs, and every one of them occurs.
CONFIGURATIONS: dict[int, tuple[str, str, str, str]] = {
    1: ("a1", "a2", "b1", "b2"),
    2: ("a1", "a2", "b2", "b1"),
    3: ("a1", "b1", "a2", "b2"),
    4: ("a1", "b2", "a2", "b1"),
    5: ("a1", "b1", "b2", "a2"),
}

# a1 runs right along y=1, a2 runs left along y=0; b1 sits at x=0, b2 at x=1
_STRAND_GEOMETRY = {
    1: {"a1": ((0, 1), (1, 0)), "a2": ((0, 0), (-1, 0)), "b1": ((0, 0), (0, 1)), "b2": ((1, 0), (0, -1))},
    2: {"a1": ((0, 1), (1, 0)), "a2": ((0, 0), (-1, 0)), "b1": ((0, 0), (0, -1)), "b2": ((1, 0), (0, 1))},
}


@dataclass(frozen=True)
class ConfigCase:
    configuration: int
    base_arc: int
    variant: int

    def __post_init__(self):
        if self.configuration not in CONFIGURATIONS:
            raise ValueError("configuration must be 1..5")
        if self.base_arc not in (1, 2, 3, 4):
            raise ValueError("base_arc must be 1..4")
        if self.variant not in (1, 2):
            raise ValueError("variant must be 1 or 2")


def all_config_cases() -> list[ConfigCase]:
    return [ConfigCase(c, a, v) for c in CONFIGURATIONS for a in (1, 2, 3, 4) for v in (1, 2)]


def _local_strands(variant: int) -> tuple[dict[str, list[Endpoint]], dict[str, int]]:
    """Endpoints met along each strand, with the upper band over, and crossing signs."""
    geo = _STRAND_GEOMETRY[variant]
    labels = {("a1", "b1"): "1", ("a1", "b2"): "2", ("a2", "b1"): "3", ("a2", "b2"): "4"}
    signs = {}
    strands: dict[str, list[tuple[float, Endpoint]]] = {s: [] for s in geo}
    for (a, b), label in labels.items():
        (pa, da), (pb, db) = geo[a], geo[b]
        # a is horizontal (constant y), b vertical (constant x)
        point = (pb[0], pa[1])
        signs[label] = 1 if da[0] * db[1] - da[1] * db[0] > 0 else -1
        strands[a].append((da[0] * point[0] + da[1] * point[1], Endpoint(label, Role.OVER)))
        strands[b].append((db[0] * point[0] + db[1] * point[1], Endpoint(label, Role.UNDER)))
    return {s: [ep for _, ep in sorted(v)] for s, v in strands.items()}, signs


def generate_band_pass_pair(
    case: ConfigCase, extra_arrows: int = 0, seed: int = 0
) -> tuple[LongGaussDiagram, LongGaussDiagram, BandPassSite]:
    """Two long diagrams differing by one band-pass, and the site.

    The knot runs through the four band strands in the order of the case's
    configuration; the point at infinity sits on the connecting arc that
    ends at strand number ``base_arc`` of that order.  Extra arrows get
    their endpoints at random places on the connecting arcs.
    """
    rng = random.Random(seed)
    strands, signs = _local_strands(case.variant)
    order = CONFIGURATIONS[case.configuration]
    k = case.base_arc - 1
    blocks = [strands[s] for s in order[k:] + order[:k]]
    # regions: before block 0, between blocks, after block 3
    regions: list[list[Endpoint]] = [[] for _ in range(5)]
    for i in range(extra_arrows):
        label = str(5 + i)
        signs[label] = rng.choice((1, -1))
        for role in (Role.OVER, Role.UNDER):
            region = regions[rng.randrange(5)]
            region.insert(rng.randint(0, len(region)), Endpoint(label, role))
    word: list[Endpoint] = list(regions[0])
    for block, region in zip(blocks, regions[1:]):
        word += block + region
    d1 = LongGaussDiagram(word, signs)
    site = BandPassSite(("1", "2", "3", "4"), case.variant, case)
    return d1, apply_band_pass(d1, site), site


# -- search -----------------------------------------------------------------------


def bounded_equivalence(
    a: LongGaussDiagram,
    b: LongGaussDiagram,
    max_arrows: int,
    max_steps: int,
    band_pass: bool = False,
) -> list[MoveEvent] | None:
    """Breadth-first search for a move path from ``a`` to ``b``.

    States are keyed by canonical serialization; add-moves are only taken
    while the arrow count stays within ``max_arrows``.  Returns the path
    (replay-checked) or None for "unknown"; None never means "not
    equivalent".
    """
    if max_arrows < 0 or max_steps < 0:
        raise ValueError("bounds must be non-negative")
    target = serialize(b)
    if serialize(a) == target:
        return []
    kinds = {MoveKind.R1_REMOVE, MoveKind.R2_REMOVE, MoveKind.R3}
    if band_pass:
        kinds.add(MoveKind.BAND_PASS)
    seen = {serialize(a)}
    frontier = deque([(a, ())])
    while frontier:
        d, path = frontier.popleft()
        if len(path) >= max_steps:
            continue
        step_kinds = set(kinds)
        if d.n_arrows + 1 <= max_arrows:
            step_kinds.add(MoveKind.R1_ADD)
        if d.n_arrows + 2 <= max_arrows:
            step_kinds.add(MoveKind.R2_ADD)
        for m in enumerate_moves(d, step_kinds):
            nxt = apply(d, m)
            key = serialize(nxt)
            if key in seen:
                continue
            seen.add(key)
            new_path = path + (m,)
            if key == target:
                if serialize(_replay(a, new_path)) != target:
                    raise AssertionError("search produced a path that does not replay")
                return list(new_path)
            frontier.append((nxt, new_path))
    return None

"""Classical realizability and the Conway polynomial by skein recursion.

This is a deliberately separate route from the arrow-diagram pairings: it
only knows how to change and smooth crossings of a closed multi-component
Gauss diagram, and that a descending diagram is an unlink.
"""

from __future__ import annotations

from functools import lru_cache

from .diagram import DiagramError, LongGaussDiagram, Role, closure

__all__ = [
    "NotRealizableError",
    "genus",
    "is_classical",
    "conway_polynomial",
    "conway_c2",
]


class NotRealizableError(DiagramError):
    """The Gauss code has no planar (classical) realization."""


# counterclockwise slot order around a crossing; slots are
# 0 over-in, 1 over-out, 2 under-in, 3 under-out
_ROTATION = {1: (1, 3, 0, 2), -1: (1, 2, 0, 3)}


def genus(d: LongGaussDiagram) -> int:
    """Genus of the closed surface carrying the closure of ``d``.

    The signs fix the cyclic order of the four half-edges at each crossing,
    so the closure is a ribbon graph; faces are counted and Euler's formula
    gives the genus.  Genus 0 means the diagram is classical.
    """
    n = d.n_arrows
    if n == 0:
        return 0
    m = len(d.word)
    # half-edge (k, 0) leaves position k, (k, 1) arrives at position k + 1
    slot_of: dict[tuple[int, int], tuple[str, int]] = {}
    at: dict[tuple[str, int], tuple[int, int]] = {}
    for k, ep in enumerate(d.word):
        base = 0 if ep.role is Role.OVER else 2
        out_half, in_half = (k, 0), ((k - 1) % m, 1)
        slot_of[out_half] = (ep.arrow, base + 1)
        slot_of[in_half] = (ep.arrow, base)
        at[(ep.arrow, base + 1)] = out_half
        at[(ep.arrow, base)] = in_half

    def rotate(h):
        arrow, slot = slot_of[h]
        order = _ROTATION[d.signs[arrow]]
        return at[(arrow, order[(order.index(slot) + 1) % 4])]

    seen = set()
    faces = 0
    for start in slot_of:
        if start in seen:
            continue
        faces += 1
        h = start
        while h not in seen:
            seen.add(h)
            h = rotate((h[0], 1 - h[1]))
    # V - E + F = 2 - 2g with V = n, E = 2n
    return (2 + n - faces) // 2


def is_classical(d: LongGaussDiagram) -> bool:
    return genus(d) == 0


def _poly_add(a: tuple[int, ...], b: tuple[int, ...], shift: int = 0, k: int = 1) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for i, c in enumerate(b):
        out[i + shift] += k * c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _first_bad(comps) -> str | None:
    met = set()
    for comp in comps:
        for arrow, role in comp:
            if arrow not in met:
                if role is Role.UNDER:
                    return arrow
                met.add(arrow)
    return None


def _smooth(comps, arrow):
    where = [(c, i) for c, comp in enumerate(comps) for i, ep in enumerate(comp) if ep[0] == arrow]
    (c1, i1), (c2, i2) = where
    rest = [comp for c, comp in enumerate(comps) if c not in (c1, c2)]
    if c1 == c2:
        w = comps[c1]
        return tuple(rest) + (w[i1 + 1:i2], w[i2 + 1:] + w[:i1])
    w1, w2 = comps[c1], comps[c2]
    return tuple(rest) + (w1[i1 + 1:] + w1[:i1] + w2[i2 + 1:] + w2[:i2],)


@lru_cache(maxsize=None)
def _conway(comps: tuple, signs: frozenset) -> tuple[int, ...]:
    bad = _first_bad(comps)
    if bad is None:
        return (1,) if len(comps) == 1 else ()
    sign = dict(signs)[bad]
    flipped = tuple(tuple((a, r.other if a == bad else r) for a, r in comp) for comp in comps)
    flipped_signs = frozenset((a, -s if a == bad else s) for a, s in signs)
    smoothed = _smooth(comps, bad)
    smoothed_signs = frozenset((a, s) for a, s in signs if a != bad)
    # C(L+) - C(L-) = z C(L0)
    return _poly_add(_conway(flipped, flipped_signs), _conway(smoothed, smoothed_signs), 1, sign)


def conway_polynomial(d: LongGaussDiagram, check: bool = True) -> tuple[int, ...]:
    """Conway polynomial coefficients ``(c0, c1, c2, ...)`` of a classical knot.

    Raises:
        NotRealizableError: if ``check`` and the closure is not planar.
    """
    if check and not is_classical(d):
        raise NotRealizableError(f"{d} is not a classical diagram (genus {genus(d)})")
    comps = (tuple((ep.arrow, ep.role) for ep in closure(d).word),)
    return _conway(comps, frozenset(d.signs.items()))


def conway_c2(d: LongGaussDiagram) -> int:
    """Coefficient of ``z^2`` in the Conway polynomial of a classical long knot."""
    c = conway_polynomial(d)
    return c[2] if len(c) > 2 else 0

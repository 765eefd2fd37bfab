"""Named diagrams and a generator of classical diagrams from braid words."""

from __future__ import annotations

import random
from typing import Sequence

from .diagram import Endpoint, LongGaussDiagram, Role, parse_gauss_code, renumber

__all__ = [
    "braid_closure",
    "random_classical_knot",
    "CLASSICAL",
    "W_EXAMPLE",
    "FLY",
    "FLY_SADDLE",
    "BAND_PASS_PAIR",
]


def braid_closure(braid: Sequence[int], n_strands: int) -> LongGaussDiagram | None:
    """Long Gauss diagram of the closure of a braid, cut at the top of strand 1.

    Generator ``+i`` crosses positions ``i`` and ``i + 1`` with a positive
    crossing, ``-i`` with a negative one.  Strands run downward; at a
    positive crossing the strand moving from ``i + 1`` to ``i`` is over.
    Returns None if the closure has more than one component.
    """
    word: list[Endpoint] = []
    signs: dict[str, int] = {}
    pos = 0
    while True:
        for k, g in enumerate(braid):
            i = abs(g) - 1
            if pos not in (i, i + 1):
                continue
            label = str(k + 1)
            signs[label] = 1 if g > 0 else -1
            over_from = i + 1 if g > 0 else i
            word.append(Endpoint(label, Role.OVER if pos == over_from else Role.UNDER))
            pos = i + 1 if pos == i else i
        if pos == 0:
            break
    if len(word) != 2 * len(braid):
        return None
    return renumber(LongGaussDiagram(word, signs))


def random_classical_knot(seed: int, n_strands: int = 3, length: int = 6) -> LongGaussDiagram:
    """Closure of a random braid word whose permutation is one cycle."""
    rng = random.Random(seed)
    while True:
        braid = [rng.choice((1, -1)) * rng.randint(1, n_strands - 1) for _ in range(length)]
        d = braid_closure(braid, n_strands)
        if d is not None:
            return d


# c2 values: the Conway polynomials are 1, 1+z^2, 1+z^2, 1-z^2, 1+3z^2+z^4, 1+2z^2
CLASSICAL = {
    "unknot": parse_gauss_code(""),
    "trefoil_right": parse_gauss_code("O1(+)U2(+)O3(+)U1(+)O2(+)U3(+)"),
    "trefoil_left": parse_gauss_code("O1(-)U2(-)O3(-)U1(-)O2(-)U3(-)"),
    "figure_eight": braid_closure([1, -2, 1, -2], 3),
    "cinquefoil": parse_gauss_code("O1(+)U2(+)O3(+)U4(+)O5(+)U1(+)O2(+)U3(+)O4(+)U5(+)"),
    "five_two": braid_closure([1, 1, 1, 2, -1, 2], 3),
}

W_EXAMPLE = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)")

# two crossings; its closure is undone by a single Reidemeister II move
FLY = parse_gauss_code("U1(+)O2(-)O1(+)U2(-)")
# splitting the arcs before position 1 and before position 3 cuts O2 O1 off as a circle
FLY_SADDLE = ((0, 1), (0, 3))

# a band-pass pair (no extra arrows) across which v21 and v22 both change
# parity while their sum keeps it; d1 has the same invariants as FLY
BAND_PASS_PAIR = (
    parse_gauss_code("O1(-)O2(+)U1(-)U3(+)O4(-)O3(+)U4(-)U2(+)"),
    parse_gauss_code("U1(+)U2(-)O1(+)O3(-)U4(+)U3(-)O4(+)O2(-)"),
)

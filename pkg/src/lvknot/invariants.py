"""Degree-one and degree-two finite-type invariants of long virtual knots.

``v21`` and ``v22`` pair the two interleaved two-arrow patterns whose
arrows point in opposite directions against the subdiagram sum of a
diagram; ``beta`` is their sum mod 2.  ``w_polynomial`` is the index
(writhe) polynomial of the closure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Iterator, Mapping

from .diagram import (
    Endpoint,
    LongGaussDiagram,
    Role,
    parse_gauss_code,
    renumber,
)

__all__ = [
    "LaurentPoly",
    "ArrowPattern",
    "InvariantReport",
    "V21_PATTERN",
    "V22_PATTERN",
    "subdiagrams",
    "pairing",
    "degree_two_weights",
    "v21",
    "v22",
    "beta",
    "crossing_indices",
    "w_polynomial",
    "report",
]

# above this size, pairing with patterns of degree > 2 is refused
MAX_ENUMERATION_ARROWS = 32


class LaurentPoly:
    """Integer Laurent polynomial in ``t``; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coefficients or {}).items() if c != 0}

    @property
    def coefficients(self) -> Mapping[int, int]:
        return MappingProxyType(self._c)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * c for e, c in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._c
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def to_pairs(self) -> list[list[int]]:
        """``[[exponent, coefficient], ...]`` sorted by exponent."""
        return [[e, self._c[e]] for e in sorted(self._c)]

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            mag = abs(c)
            body = {0: str(mag), 1: ("" if mag == 1 else str(mag)) + "t"}.get(
                e, ("" if mag == 1 else str(mag)) + f"t^{e}"
            )
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c})"


_PATTERN_TOKEN = re.compile(r"([OU])(\d+)")


@dataclass(frozen=True)
class ArrowPattern:
    """Left argument of the pairing.

    ``signs`` is ``None`` for an unsigned pattern, which stands for the sum
    over all signings weighted by the product of the arrow signs.
    """

    word: tuple[Endpoint, ...]
    signs: Mapping[str, int] | None = field(default=None)

    @classmethod
    def unsigned(cls, code: str) -> "ArrowPattern":
        word = [Endpoint(l, Role(r)) for r, l in _PATTERN_TOKEN.findall(code.replace(" ", ""))]
        d = renumber(LongGaussDiagram(word, {ep.arrow: 1 for ep in word}))
        return cls(d.word, None)

    @classmethod
    def signed(cls, code: str) -> "ArrowPattern":
        d = renumber(parse_gauss_code(code))
        return cls(d.word, MappingProxyType(dict(d.signs)))

    @property
    def n_arrows(self) -> int:
        return len(self.word) // 2


# first arrow points right, second left  /  first left, second right
V21_PATTERN = ArrowPattern.unsigned("O1U2U1O2")
V22_PATTERN = ArrowPattern.unsigned("U1O2O1U2")


def subdiagrams(d: LongGaussDiagram, k: int) -> Iterator[LongGaussDiagram]:
    """Yield the ``C(n, k)`` subdiagrams of ``d`` with exactly ``k`` arrows."""
    if not 0 <= k <= d.n_arrows:
        raise ValueError(f"k must lie in [0, {d.n_arrows}]")
    for keep in combinations(d.arrows, k):
        yield d.restrict(keep)


def pairing(p: ArrowPattern, d: LongGaussDiagram) -> int:
    """``<p, I(d)>``: matches of ``p`` among the subdiagrams of ``d``."""
    k = p.n_arrows
    if k > d.n_arrows:
        return 0
    if k > 2 and d.n_arrows > MAX_ENUMERATION_ARROWS:
        raise ValueError(f"pairing of degree {k} limited to {MAX_ENUMERATION_ARROWS} arrows")
    total = 0
    for sub in subdiagrams(d, k):
        canon = renumber(sub)
        if canon.word != p.word:
            continue
        if p.signs is None:
            w = 1
            for s in sub.signs.values():
                w *= s
            total += w
        elif dict(canon.signs) == dict(p.signs):
            total += 1
    return total


def degree_two_weights(d: LongGaussDiagram) -> dict[str, int]:
    """Signed counts of interleaved arrow pairs, keyed by direction pattern.

    Keys are ``"RR"``, ``"RL"``, ``"LR"``, ``"LL"``: the direction (Right
    means over endpoint left of under endpoint) of the arrow starting first,
    then of the other one.  One pass over pairs, no subdiagram objects.
    """
    spans = []
    for a, (o, u) in d.positions().items():
        spans.append((min(o, u), max(o, u), "R" if o < u else "L", d.signs[a]))
    spans.sort()
    out = {"RR": 0, "RL": 0, "LR": 0, "LL": 0}
    for i, (p1, q1, dir1, s1) in enumerate(spans):
        for p2, q2, dir2, s2 in spans[i + 1:]:
            if p2 > q1:
                break
            if q1 < q2:
                out[dir1 + dir2] += s1 * s2
    return out


def v21(d: LongGaussDiagram) -> int:
    return degree_two_weights(d)["RL"]


def v22(d: LongGaussDiagram) -> int:
    return degree_two_weights(d)["LR"]


def beta(d: LongGaussDiagram) -> int:
    """Band-pass invariant ``(v21 + v22) mod 2``."""
    w = degree_two_weights(d)
    return (w["RL"] + w["LR"]) % 2


def crossing_indices(d: LongGaussDiagram) -> dict[str, int]:
    """Index of each arrow in the closure of ``d``.

    Walking the circle from the over endpoint of ``c`` to its under
    endpoint, every arrow with exactly one endpoint on that arc contributes
    its sign, positively if that endpoint is its under endpoint.
    """
    pos = d.positions()
    n = len(d.word)
    out = {}
    for c, (o, u) in pos.items():
        length = (u - o) % n

        def inside(p: int) -> bool:
            return 0 < (p - o) % n < length

        idx = 0
        for e, (oe, ue) in pos.items():
            if e == c:
                continue
            io, iu = inside(oe), inside(ue)
            if io != iu:
                idx += d.signs[e] if iu else -d.signs[e]
        out[c] = idx
    return out


def w_polynomial(d: LongGaussDiagram) -> LaurentPoly:
    """Index polynomial ``sum sign(c) t^|ind(c)|`` over arrows of nonzero index."""
    coeffs: dict[int, int] = {}
    for c, idx in crossing_indices(d).items():
        if idx:
            coeffs[abs(idx)] = coeffs.get(abs(idx), 0) + d.signs[c]
    return LaurentPoly(coeffs)


@dataclass(frozen=True)
class InvariantReport:
    v21: int
    v22: int
    beta: int
    w: LaurentPoly

    def __post_init__(self):
        if self.beta != (self.v21 + self.v22) % 2:
            raise ValueError("beta must equal (v21 + v22) mod 2")

    def as_record(self) -> dict:
        return {"v21": self.v21, "v22": self.v22, "beta": self.beta, "w": self.w.to_pairs()}


def report(d: LongGaussDiagram) -> InvariantReport:
    w2 = degree_two_weights(d)
    a, b = w2["RL"], w2["LR"]
    return InvariantReport(a, b, (a + b) % 2, w_polynomial(d))


"""Slow reference computations used to cross-check the fast paths.

Nothing here shares code with the invariant engine beyond the diagram
types: subdiagrams are enumerated as bitmasks and relabelled by hand.
"""

from __future__ import annotations

from .diagram import LongGaussDiagram

__all__ = ["naive_pairing", "naive_v21", "naive_v22"]


def _shape(word, signs) -> tuple[str, int]:
    labels: dict[str, int] = {}
    out = []
    weight = 1
    for arrow, role in word:
        if arrow not in labels:
            labels[arrow] = len(labels) + 1
            weight *= signs[arrow]
        out.append(f"{role.value}{labels[arrow]}")
    return "".join(out), weight


def naive_pairing(pattern: str, d: LongGaussDiagram) -> int:
    """Sum over all ``2^n`` arrow subsets whose shape is ``pattern``.

    ``pattern`` is an unsigned word such as ``"O1U2U1O2"`` with labels
    numbered by first appearance; each match counts with the product of
    its arrow signs.
    """
    arrows = sorted(d.signs)
    total = 0
    for mask in range(1 << len(arrows)):
        keep = {a for i, a in enumerate(arrows) if mask >> i & 1}
        shape, weight = _shape([ep for ep in d.word if ep.arrow in keep], d.signs)
        if shape == pattern:
            total += weight
    return total


def naive_v21(d: LongGaussDiagram) -> int:
    return naive_pairing("O1U2U1O2", d)


def naive_v22(d: LongGaussDiagram) -> int:
    return naive_pairing("U1O2O1U2", d)

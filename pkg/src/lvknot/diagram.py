"""Gauss diagrams of long virtual knots and long virtual links.

A long diagram is a word of arrow endpoints read left to right along the
line.  Each arrow has an over endpoint and an under endpoint and carries a
crossing sign.  Arrows point from the over endpoint to the under endpoint.

Text form (a "Gauss code") is a sequence of tokens ``O<label>(<sign>)`` or
``U<label>(<sign>)``, e.g. ``O1(+)O2(+)U1(+)U2(+)``.  Link codes separate
components with ``|``: the first component is the long one, every further
component is a circle.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "Role",
    "Endpoint",
    "DiagramError",
    "GaussCodeError",
    "LongGaussDiagram",
    "ClosedGaussDiagram",
    "LinkGaussDiagram",
    "parse_gauss_code",
    "parse_link_code",
    "serialize",
    "link_to_code",
    "renumber",
    "closure",
    "concatenate",
    "inverse",
    "random_diagram",
    "validate",
    "UNKNOT",
]


class Role(str, Enum):
    OVER = "O"
    UNDER = "U"

    @property
    def other(self) -> "Role":
        return Role.UNDER if self is Role.OVER else Role.OVER


class Endpoint(NamedTuple):
    arrow: str
    role: Role

    def __str__(self) -> str:
        return f"{self.role.value}{self.arrow}"


class DiagramError(ValueError):
    """A word/sign combination violating the Gauss diagram invariants."""


class GaussCodeError(DiagramError):
    """Malformed or inconsistent Gauss code text."""


def _coerce_word(word: Iterable) -> tuple[Endpoint, ...]:
    return tuple(Endpoint(str(a), Role(r)) for a, r in word)


def _check_components(components: Sequence[Sequence[Endpoint]], signs: Mapping[str, int]) -> None:
    seen: dict[str, set[Role]] = {}
    for comp in components:
        for ep in comp:
            roles = seen.setdefault(ep.arrow, set())
            if ep.role in roles:
                raise DiagramError(f"arrow {ep.arrow!r} has two {ep.role.name} endpoints")
            roles.add(ep.role)
    for label, roles in seen.items():
        if len(roles) != 2:
            raise DiagramError(f"arrow {label!r} has only one endpoint")
    if set(signs) != set(seen):
        extra = set(signs) ^ set(seen)
        raise DiagramError(f"sign map does not match arrows: {sorted(extra)}")
    for label, s in signs.items():
        if s not in (1, -1):
            raise DiagramError(f"sign of {label!r} must be +1 or -1, got {s!r}")


def _sign_str(s: int) -> str:
    return "+" if s > 0 else "-"


def _tokens(word: Sequence[Endpoint], signs: Mapping[str, int]) -> str:
    return "".join(f"{ep.role.value}{ep.arrow}({_sign_str(signs[ep.arrow])})" for ep in word)


def _min_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True, eq=False)
class LongGaussDiagram:
    """Gauss diagram on the real line.

    Construction validates the invariants: every arrow label occurs exactly
    twice in ``word`` (once per role) and has exactly one sign.
    """

    word: tuple[Endpoint, ...] = ()
    signs: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "word", _coerce_word(self.word))
        object.__setattr__(self, "signs", MappingProxyType({str(k): v for k, v in self.signs.items()}))
        _check_components([self.word], self.signs)

    def __eq__(self, other):
        if not isinstance(other, LongGaussDiagram):
            return NotImplemented
        return self.word == other.word and dict(self.signs) == dict(other.signs)

    def __hash__(self):
        return hash((self.word, frozenset(self.signs.items())))

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return _tokens(self.word, self.signs)

    def __repr__(self) -> str:
        return f"LongGaussDiagram({str(self)!r})"

    @property
    def n_arrows(self) -> int:
        return len(self.word) // 2

    @property
    def arrows(self) -> tuple[str, ...]:
        """Arrow labels in order of first occurrence."""
        return tuple(dict.fromkeys(ep.arrow for ep in self.word))

    def positions(self) -> dict[str, tuple[int, int]]:
        """Map each arrow to ``(over_position, under_position)``."""
        over: dict[str, int] = {}
        under: dict[str, int] = {}
        for i, ep in enumerate(self.word):
            (over if ep.role is Role.OVER else under)[ep.arrow] = i
        return {a: (over[a], under[a]) for a in over}

    def restrict(self, keep: Iterable[str]) -> "LongGaussDiagram":
        """Subdiagram retaining only the arrows in ``keep``."""
        keep = set(keep)
        return LongGaussDiagram(
            tuple(ep for ep in self.word if ep.arrow in keep),
            {a: s for a, s in self.signs.items() if a in keep},
        )


UNKNOT = LongGaussDiagram()


@dataclass(frozen=True, eq=False)
class ClosedGaussDiagram:
    """Gauss diagram on the circle; equal to any rotation of itself."""

    word: tuple[Endpoint, ...] = ()
    signs: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "word", _coerce_word(self.word))
        object.__setattr__(self, "signs", MappingProxyType(dict(self.signs)))
        _check_components([self.word], self.signs)

    def __eq__(self, other):
        if not isinstance(other, ClosedGaussDiagram):
            return NotImplemented
        return (
            dict(self.signs) == dict(other.signs)
            and len(self.word) == len(other.word)
            and _min_rotation(self.word) == _min_rotation(other.word)
        )

    def __hash__(self):
        return hash((_min_rotation(self.word), frozenset(self.signs.items())))

    def __str__(self) -> str:
        return _tokens(self.word, self.signs)

    def __repr__(self) -> str:
        return f"ClosedGaussDiagram({str(self)!r})"

    @property
    def n_arrows(self) -> int:
        return len(self.word) // 2

    def rotations(self) -> Iterable[LongGaussDiagram]:
        """All long diagrams obtained by cutting the circle at some arc."""
        w = self.word
        for i in range(max(len(w), 1)):
            yield LongGaussDiagram(w[i:] + w[:i], self.signs)

    def canonical(self) -> str:
        """Label-independent key: least canonical serialization over rotations."""
        return min((serialize(d) for d in self.rotations()), key=lambda s: (len(s), s))


@dataclass(frozen=True, eq=False)
class LinkGaussDiagram:
    """One long component plus any number of circle components.

    Arrows may join different components.  Circles compare up to rotation
    and their order in ``circles`` is irrelevant for equality, but indices
    into ``circles`` are what the cobordism moves address.
    """

    long: tuple[Endpoint, ...] = ()
    circles: tuple[tuple[Endpoint, ...], ...] = ()
    signs: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "long", _coerce_word(self.long))
        object.__setattr__(self, "circles", tuple(_coerce_word(c) for c in self.circles))
        object.__setattr__(self, "signs", MappingProxyType(dict(self.signs)))
        _check_components(self.components, self.signs)

    @classmethod
    def from_long(cls, d: LongGaussDiagram) -> "LinkGaussDiagram":
        return cls(d.word, (), d.signs)

    def as_long(self) -> LongGaussDiagram:
        if self.circles:
            raise DiagramError("link has circle components; not a long knot")
        return LongGaussDiagram(self.long, self.signs)

    @property
    def components(self) -> tuple[tuple[Endpoint, ...], ...]:
        return (self.long,) + self.circles

    @property
    def n_components(self) -> int:
        return 1 + len(self.circles)

    @property
    def n_arrows(self) -> int:
        return len(self.signs)

    @property
    def arrows(self) -> tuple[str, ...]:
        """Arrow labels in order of first occurrence, long component first."""
        return tuple(dict.fromkeys(ep.arrow for comp in self.components for ep in comp))

    def locate(self) -> dict[Endpoint, tuple[int, int]]:
        """Map each endpoint to ``(component, index)``; component 0 is the long one."""
        return {ep: (c, i) for c, comp in enumerate(self.components) for i, ep in enumerate(comp)}

    def _key(self):
        return (self.long, tuple(sorted(_min_rotation(c) for c in self.circles)))

    def __eq__(self, other):
        if not isinstance(other, LinkGaussDiagram):
            return NotImplemented
        return self._key() == other._key() and dict(self.signs) == dict(other.signs)

    def __hash__(self):
        return hash((self._key(), frozenset(self.signs.items())))

    def __str__(self) -> str:
        return link_to_code(self)

    def __repr__(self) -> str:
        return f"LinkGaussDiagram({str(self)!r})"


_TOKEN = re.compile(r"([OU])([A-Za-z0-9_']+)\(([+\-−])\)")


def _parse_components(parts: Sequence[str]) -> tuple[list[list[Endpoint]], dict[str, int]]:
    signs: dict[str, int] = {}
    comps: list[list[Endpoint]] = []
    roles: dict[str, list[Role]] = {}
    for text in parts:
        text = re.sub(r"\s+", "", text)
        comp: list[Endpoint] = []
        pos = 0
        for m in _TOKEN.finditer(text):
            if m.start() != pos:
                raise GaussCodeError(f"malformed token at offset {pos}: {text[pos:pos + 12]!r}")
            pos = m.end()
            role, label, s = Role(m.group(1)), m.group(2), (1 if m.group(3) == "+" else -1)
            if label in signs and signs[label] != s:
                raise GaussCodeError(f"contradictory signs for label {label!r}")
            signs[label] = s
            if role in roles.setdefault(label, []):
                raise GaussCodeError(f"duplicate role {role.value} for label {label!r}")
            roles[label].append(role)
            comp.append(Endpoint(label, role))
        if pos != len(text):
            raise GaussCodeError(f"malformed token at offset {pos}: {text[pos:pos + 12]!r}")
        comps.append(comp)
    for label, rs in roles.items():
        if len(rs) != 2:
            raise GaussCodeError(f"unmatched label {label!r}")
    return comps, signs


def parse_gauss_code(text: str) -> LongGaussDiagram:
    """Parse a long Gauss code such as ``"O1(+)O2(+)U1(+)U2(+)"``.

    Whitespace is ignored and the empty string is the long unknot.

    Raises:
        GaussCodeError: malformed token, unmatched label, duplicate role,
            or contradictory signs for one label.
    """
    if "|" in text:
        raise GaussCodeError("'|' separates link components; use parse_link_code")
    comps, signs = _parse_components([text])
    return LongGaussDiagram(comps[0], signs)


def parse_link_code(text: str) -> LinkGaussDiagram:
    """Parse ``long|circle|circle...``; an empty field is an empty circle."""
    parts = text.split("|")
    comps, signs = _parse_components(parts)
    return LinkGaussDiagram(comps[0], comps[1:], signs)


def link_to_code(link: LinkGaussDiagram) -> str:
    """Serialize a link keeping its labels (certificates refer to them)."""
    return "|".join(_tokens(c, link.signs) for c in link.components)


def renumber(d: LongGaussDiagram) -> LongGaussDiagram:
    """Relabel arrows ``1..n`` in order of first occurrence."""
    names = {a: str(i) for i, a in enumerate(d.arrows, 1)}
    return LongGaussDiagram(
        tuple(Endpoint(names[ep.arrow], ep.role) for ep in d.word),
        {names[a]: s for a, s in d.signs.items()},
    )


def serialize(d: LongGaussDiagram) -> str:
    """Canonical Gauss code: labels ``1..n`` by first occurrence, no whitespace."""
    return str(renumber(d))


def closure(d: LongGaussDiagram) -> ClosedGaussDiagram:
    """Close the line up into a circle (the point at infinity becomes an arc)."""
    return ClosedGaussDiagram(d.word, d.signs)


def _fresh_labels(taken: set[str]):
    i = 1
    while True:
        if str(i) not in taken:
            yield str(i)
        i += 1


def concatenate(k1: LongGaussDiagram, k2: LongGaussDiagram) -> LongGaussDiagram:
    """``k1 # k2``: ``k2`` drawn to the right of ``k1``.

    Labels of ``k1`` are kept; labels of ``k2`` are replaced only where
    they collide with labels of ``k1``.
    """
    taken = set(k1.signs) | set(k2.signs)
    fresh = _fresh_labels(taken)
    names = {a: (next(fresh) if a in k1.signs else a) for a in k2.arrows}
    word = k1.word + tuple(Endpoint(names[ep.arrow], ep.role) for ep in k2.word)
    signs = dict(k1.signs)
    signs.update({names[a]: s for a, s in k2.signs.items()})
    return LongGaussDiagram(word, signs)


def inverse(k: LongGaussDiagram) -> LongGaussDiagram:
    """Concordance inverse: reflect in a vertical line, then reverse orientation.

    On the Gauss diagram this reverses the word and negates every sign;
    over/under roles are untouched.  Labels are kept.
    """
    return LongGaussDiagram(tuple(reversed(k.word)), {a: -s for a, s in k.signs.items()})


def random_diagram(n_arrows: int, seed: int) -> LongGaussDiagram:
    """Uniform random interleaving of ``n_arrows`` arrows with uniform signs."""
    if n_arrows < 0:
        raise ValueError("n_arrows must be non-negative")
    rng = random.Random(seed)
    word = [Endpoint(str(i), r) for i in range(1, n_arrows + 1) for r in Role]
    rng.shuffle(word)
    signs = {str(i): rng.choice((1, -1)) for i in range(1, n_arrows + 1)}
    return renumber(LongGaussDiagram(word, signs))


def validate(d) -> None:
    """Re-check the type invariants of a diagram; raises DiagramError."""
    if isinstance(d, LinkGaussDiagram):
        _check_components(d.components, d.signs)
    else:
        if len(d.word) % 2:
            raise DiagramError("odd word length")
        _check_components([d.word], d.signs)

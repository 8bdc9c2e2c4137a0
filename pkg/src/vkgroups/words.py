"""Free-group words, the text grammar for them, and the integral group ring.

Grammar (whitespace separates syllables)::

    word     := "1" | syllable+
    syllable := ident ("^" signed-integer)?
    ident    := letter (letter | digit)*
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ParseError, ValidationError

__all__ = [
    "Word",
    "GroupRingElem",
    "Presentation",
    "parse_word",
    "check_generator",
]

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_EXP = re.compile(r"\^\s*([+-]?\d+)")
_WS = re.compile(r"\s+")


def check_generator(name: str) -> str:
    if not isinstance(name, str) or not _IDENT.fullmatch(name):
        raise ValidationError(f"invalid generator name {name!r}")
    return name


def _reduce(syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[tuple[str, int]] = []
    for g, e in syllables:
        if not e:
            continue
        if stack and stack[-1][0] == g:
            e += stack.pop()[1]
            if e:
                stack.append((g, e))
        else:
            stack.append((g, e))
    return tuple(stack)


class Word:
    """Freely reduced word, a tuple of ``(generator, nonzero exponent)`` syllables.

    >>> w = Word([("x", 1), ("y", 2), ("y", -2), ("x", 1)])
    >>> w.syllables
    (('x', 2),)
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        object.__setattr__(self, "syllables", _reduce(syllables))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> "Word":
        return cls([(name, exponent)])

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[str, int]]) -> "Word":
        return cls(letters)

    # -- basic properties --------------------------------------------------

    @property
    def length(self) -> int:
        """Number of letters, i.e. sum of absolute exponents."""
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def __bool__(self):
        return bool(self.syllables)

    def letters(self) -> Iterator[tuple[str, int]]:
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def exponent_sum(self, g: str) -> int:
        return sum(e for h, e in self.syllables if h == g)

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.syllables))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.syllables * abs(n))

    def conjugate(self, by: "Word") -> "Word":
        """``by^-1 * self * by``."""
        return by.inverse() * self * by

    def substitute(self, mapping: Mapping[str, "Word"]) -> "Word":
        """Replace each generator ``g`` in ``mapping`` by ``mapping[g]``."""
        out: list[tuple[str, int]] = []
        for g, e in self.syllables:
            if g in mapping:
                out.extend((mapping[g] ** e).syllables)
            else:
                out.append((g, e))
        return Word(out)

    def cyclically_reduce(self) -> "Word":
        s = list(self.syllables)
        while len(s) >= 2 and s[0][0] == s[-1][0]:
            g = s[0][0]
            merged = s[0][1] + s[-1][1]
            s = s[1:-1]
            if merged:
                s = [(g, merged)] + s
                break
        return Word(s)

    def rotate(self, k: int) -> "Word":
        """Cyclic rotation by ``k`` letters (a conjugate of ``self``)."""
        lets = list(self.letters())
        if not lets:
            return self
        k %= len(lets)
        return Word(lets[k:] + lets[:k])

    # -- comparisons / rendering -------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def sort_key(self):
        return (self.length, self.syllables)

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)

    def __repr__(self):
        return f"Word('{self}')"


def parse_word(text: str, alphabet: Sequence[str] | None = None) -> Word:
    """Parse ``text`` per the word grammar.

    If ``alphabet`` is given, any other identifier is an error.
    """
    allowed = None if alphabet is None else set(alphabet)
    s = text
    pos = 0
    m = _WS.match(s, pos)
    if m:
        pos = m.end()
    if s[pos:].strip() == "1":
        return Word()
    syllables = []
    while pos < len(s):
        m = _IDENT.match(s, pos)
        if not m:
            raise ParseError(f"expected generator name, found {s[pos]!r}", pos)
        name = m.group()
        if allowed is not None and name not in allowed:
            raise ParseError(f"unknown generator {name!r}", pos)
        pos = m.end()
        exp = 1
        if pos < len(s) and s[pos] == "^":
            m = _EXP.match(s, pos)
            if not m:
                raise ParseError(f"malformed exponent after {name!r}", pos)
            exp = int(m.group(1))
            pos = m.end()
        syllables.append((name, exp))
        m = _WS.match(s, pos)
        if m:
            pos = m.end()
        elif pos < len(s):
            raise ParseError(f"expected whitespace, found {s[pos]!r}", pos)
    if not syllables:
        raise ParseError("empty word (write '1' for the identity)", 0)
    return Word(syllables)


class GroupRingElem:
    """Finite Z-linear combination of reduced words (element of ZF)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self._terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "GroupRingElem":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "GroupRingElem":
        return cls({Word(): 1})

    @property
    def terms(self) -> dict[Word, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Word, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElem(out)

    def __neg__(self):
        return GroupRingElem({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElem({w: c * other for w, c in self._terms.items()})
        if isinstance(other, Word):
            other = GroupRingElem.from_word(other)
        out: dict[Word, int] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                w = a * b
                out[w] = out.get(w, 0) + c * d
        return GroupRingElem(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, Word):
            return GroupRingElem({other * w: c for w, c in self._terms.items()})
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, GroupRingElem) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            body = str(w) if abs(c) == 1 else f"{abs(c)}*{w}" if w else str(abs(c))
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"GroupRingElem('{self}')"


@dataclass(frozen=True)
class Presentation:
    """``<generators | relators>``; relators are reduced words over the generators."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        for g in self.generators:
            check_generator(g)
        if len(set(self.generators)) != len(self.generators):
            raise ValidationError(f"duplicate generator in {self.generators}")
        known = set(self.generators)
        for r in self.relators:
            extra = r.generators() - known
            if extra:
                raise ValidationError(
                    f"relator {r} uses unknown generator {sorted(extra)[0]!r}"
                )

    @property
    def deficiency(self) -> int:
        return abs(len(self.generators) - len(self.relators))

    def exponent_matrix(self) -> list[list[int]]:
        """Row i holds the exponent sums of relator i (the abelianized relations)."""
        return [[r.exponent_sum(g) for g in self.generators] for r in self.relators]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [str(r) for r in self.relators],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Presentation":
        try:
            gens = [check_generator(g) for g in data["generators"]]
            rels = data.get("relators", [])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"presentation JSON needs 'generators': {exc}") from None
        if not isinstance(rels, list):
            raise ValidationError("'relators' must be a list of words")
        return cls(tuple(gens), tuple(parse_word(r, gens) for r in rels))

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        return cls.from_dict(data)

    def __str__(self):
        return "⟨{} | {}⟩".format(
            ", ".join(self.generators), ", ".join(str(r) for r in self.relators)
        )

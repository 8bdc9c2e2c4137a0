"""Exact integer Laurent polynomials in ``t``, polynomials in ``u`` over them,
and 2x2 matrices with such entries.

Everything here is immutable and uses Python integers / ``Fraction``; there is
no floating point anywhere.

>>> t = LaurentPoly.t()
>>> str((1 + t) * (1 - t))
'1 - t^2'
>>> str(laurent_gcd(t**2 - 1, t**3 - 1))
'1 - t'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Iterable, Mapping

from .errors import ParseError, PreconditionError

__all__ = [
    "LaurentPoly",
    "BiPoly",
    "Mat2",
    "laurent_gcd",
    "laurent_normalize_unit",
]


def _clean(terms: Iterable[tuple[int, Any]]) -> dict:
    out: dict = {}
    for k, c in terms:
        c = out.get(k, 0) + c
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return out


class LaurentPoly:
    """Element of Z[t, t^-1], stored as ``{degree: coefficient}``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        for k, c in terms.items():
            if not isinstance(k, int) or not isinstance(c, int):
                raise TypeError("LaurentPoly needs integer degrees and coefficients")
        self._terms = {k: c for k, c in terms.items() if c}

    # -- constructors -----------------------------------------------------

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPoly":
        return cls({power: 1})

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> "LaurentPoly":
        return cls({degree: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Build ``sum coeffs[i] * t^(low + i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the rendering produced by ``str``; also accepts ``2t`` and ``t**3``."""
        return cls(_parse_laurent(text))

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def coeff(self, degree: int) -> int:
        return self._terms.get(degree, 0)

    @property
    def degree(self) -> int:
        """Largest exponent; raises on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    @property
    def span(self) -> int:
        """Degree width ``max - min``; this is the degree of the polynomial up to units."""
        return self.degree - self.min_degree

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def coeff_list(self) -> list[int]:
        """Dense coefficients from ``min_degree`` up to ``degree``."""
        if not self._terms:
            return []
        lo, hi = self.min_degree, self.degree
        return [self._terms.get(k, 0) for k in range(lo, hi + 1)]

    def __call__(self, t0):
        """Evaluate exactly at an int/Fraction (negative powers allowed if t0 != 0)."""
        total = Fraction(0)
        for k, c in self._terms.items():
            total += c * Fraction(t0) ** k
        return total

    evaluate = __call__

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(_clean([*self._terms.items(), *other._terms.items()]))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(
            _clean(
                (a + b, c * d)
                for a, c in self._terms.items()
                for b, d in other._terms.items()
            )
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (k, c), = self._terms.items()
            return LaurentPoly({k * n: c ** -n})
        result = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly({d + k: c for d, c in self._terms.items()})

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Return ``q`` with ``q * other == self`` in Z[t, t^-1], or None."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly()
        q, r = _poly_divmod(
            [Fraction(c) for c in self.coeff_list()],
            [Fraction(c) for c in other.coeff_list()],
        )
        if any(r) or any(c.denominator != 1 for c in q):
            return None
        return LaurentPoly.from_coeffs(
            [int(c) for c in q], self.min_degree - other.min_degree
        )

    def divides(self, other: "LaurentPoly") -> bool:
        return other.divmod_exact(self) is not None

    def normalize_unit(self) -> "LaurentPoly":
        return laurent_normalize_unit(self)

    def reciprocal(self) -> "LaurentPoly":
        """Substitute ``t -> t^-1``."""
        return LaurentPoly({-k: c for k, c in self._terms.items()})

    # -- comparisons / rendering -------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self}')"


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+)?\s*(\*?\s*t\s*(?:(?:\^|\*\*)\s*([+-]?\d+))?)?\s*"
)


def _parse_laurent(text: str) -> dict[int, int]:
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial", 0)
    pos, terms, first = 0, [], True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, tpart, exp = m.groups()
        if m.end() == pos or (digits is None and tpart is None):
            raise ParseError(f"unexpected character {s[pos]!r} in polynomial", pos)
        if sign is None and not first:
            raise ParseError("missing '+' or '-' between terms", pos)
        if tpart is not None and tpart.lstrip().startswith("*") and digits is None:
            raise ParseError("dangling '*'", pos)
        coeff = int(digits) if digits is not None else 1
        if sign == "-":
            coeff = -coeff
        degree = 0 if tpart is None else (int(exp) if exp is not None else 1)
        terms.append((degree, coeff))
        pos, first = m.end(), False
    return _clean(terms)


# -- dense polynomial helpers over Q (low degree first) ----------------------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num, den = _trim(list(num)), _trim(list(den))
    if not den:
        raise ZeroDivisionError
    if len(num) < len(den):
        return [], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    r = list(num)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c = Fraction(r[i + len(den) - 1]) / lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                r[i + j] -= c * d
    return q, _trim(r[: len(den) - 1])


def _poly_gcd_q(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    return a


def laurent_normalize_unit(a: LaurentPoly) -> LaurentPoly:
    """Return ``±t^k * a`` with lowest degree 0 and positive lowest coefficient."""
    if not a:
        return a
    lo = a.min_degree
    sign = -1 if a.coeff(lo) < 0 else 1
    return LaurentPoly({k - lo: sign * c for k, c in a.terms.items()})


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Generator of the ideal (a, b) in Z[t, t^-1], unit-normalized.

    Content gcd times the primitive part of the gcd over Q (Gauss's lemma).
    """
    if not a and not b:
        raise PreconditionError("gcd(0, 0) is undefined")
    if not a:
        return laurent_normalize_unit(b)
    if not b:
        return laurent_normalize_unit(a)
    content = gcd(a.content(), b.content())
    g = _poly_gcd_q(
        [Fraction(c) for c in a.coeff_list()], [Fraction(c) for c in b.coeff_list()]
    )
    denom = 1
    for c in g:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in g]
    prim = 0
    for c in ints:
        prim = gcd(prim, c)
    ints = [c // prim for c in ints]
    return laurent_normalize_unit(LaurentPoly.from_coeffs([content * c for c in ints]))


class BiPoly:
    """Element of Z[t, t^-1][u], stored as ``{u_degree: LaurentPoly}``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, LaurentPoly | int] | LaurentPoly | int | None = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, (int, LaurentPoly)):
            terms = {0: terms}
        clean = {}
        for k, c in terms.items():
            if not isinstance(k, int) or k < 0:
                raise ValueError("u-degrees must be nonnegative integers")
            c = LaurentPoly._coerce(c)
            if c is NotImplemented:
                raise TypeError("BiPoly coefficients must be LaurentPoly or int")
            if c:
                clean[k] = c
        self._terms = clean

    @classmethod
    def u(cls, power: int = 1) -> "BiPoly":
        return cls({power: LaurentPoly(1)})

    @classmethod
    def t(cls, power: int = 1) -> "BiPoly":
        return cls({0: LaurentPoly.t(power)})

    @property
    def terms(self) -> dict[int, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, LaurentPoly]]:
        return sorted(self._terms.items())

    def coeff(self, u_degree: int) -> LaurentPoly:
        return self._terms.get(u_degree, LaurentPoly())

    @property
    def u_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def min_t_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(c.min_degree for c in self._terms.values())

    def shift_t(self, k: int) -> "BiPoly":
        return BiPoly({d: c.shift(k) for d, c in self._terms.items()})

    def as_laurent(self) -> LaurentPoly:
        """The polynomial itself, if it does not involve ``u``."""
        if any(k for k in self._terms):
            raise ValueError("polynomial involves u")
        return self.coeff(0)

    def __call__(self, t0, u0):
        total = Fraction(0)
        for k, c in self._terms.items():
            total += c(t0) * Fraction(u0) ** k
        return total

    evaluate = __call__

    def specialize_t(self, t0) -> dict[int, Fraction]:
        """Coefficients in ``u`` after substituting ``t = t0``."""
        return {k: c(t0) for k, c in self._terms.items() if c(t0)}

    @staticmethod
    def _coerce(other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return BiPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, LaurentPoly()) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, LaurentPoly] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                out[a + b] = out.get(a + b, LaurentPoly()) + c * d
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*u")
            else:
                parts.append(f"({c})*u^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BiPoly('{self}')"


def _scalar_inverse(d):
    if isinstance(d, BiPoly):
        if set(d.terms) != {0} or not d.coeff(0).is_unit():
            raise PreconditionError(f"determinant {d} is not a unit of Z[t,t^-1,u]")
        return BiPoly(d.coeff(0) ** -1)
    if isinstance(d, LaurentPoly):
        if not d.is_unit():
            raise PreconditionError(f"determinant {d} is not a unit of Z[t,t^-1]")
        return d ** -1
    if d == 0:
        raise PreconditionError("singular matrix")
    return 1 / Fraction(d)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over any commutative ring whose elements support + - *.

    Used with ``BiPoly`` entries for the symbolic representation and with
    ``Fraction`` entries for numeric checks.
    """

    e11: Any
    e12: Any
    e21: Any
    e22: Any

    @classmethod
    def identity(cls, one=1) -> "Mat2":
        return cls(one, 0 * one, 0 * one, one)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self.e11, self.e12, self.e21, self.e22
        p, q, r, s = other.e11, other.e12, other.e21, other.e22
        return Mat2(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)

    __mul__ = __matmul__

    def det(self):
        return self.e11 * self.e22 - self.e12 * self.e21

    def inverse(self) -> "Mat2":
        """Exact inverse; the determinant must be a unit of the entry ring."""
        k = _scalar_inverse(self.det())
        return Mat2(k * self.e22, -(k * self.e12), -(k * self.e21), k * self.e11)

    def map(self, f) -> "Mat2":
        return Mat2(f(self.e11), f(self.e12), f(self.e21), f(self.e22))

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.e11 - other.e11,
            self.e12 - other.e12,
            self.e21 - other.e21,
            self.e22 - other.e22,
        )

    def entries(self) -> tuple:
        return (self.e11, self.e12, self.e21, self.e22)

    def is_zero(self) -> bool:
        return not any(self.entries())

    def __str__(self):
        return f"[[{self.e11}, {self.e12}], [{self.e21}, {self.e22}]]"

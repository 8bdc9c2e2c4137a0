"""Two-bridge knots in Schubert normal form S(alpha, beta)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError, ValidationError
from .groups import WirtingerPresentation, cyclic_chain
from .knotcode import KnotCode
from .synthesis import close_deficiency_one, cyclic_wirtinger_to_code
from .words import Presentation, Word

__all__ = [
    "SchubertParams",
    "schubert_exponents",
    "schubert_s_value",
    "schubert_words",
    "schubert_chain",
    "schubert_presentations",
    "schubert_code",
    "torus_presentation",
]


@dataclass(frozen=True)
class SchubertParams:
    alpha: int
    beta: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if a % 2 == 0 or b % 2 == 0:
            raise ValidationError(f"alpha and beta must be odd, got ({a}, {b})")
        if not 0 < b < a:
            raise ValidationError(f"need 0 < beta < alpha, got ({a}, {b})")
        if gcd(a, b) != 1:
            raise ValidationError(f"alpha and beta must be coprime, got ({a}, {b})")


def schubert_exponents(p: SchubertParams, method: str = "t-form") -> tuple[int, ...]:
    """Signs ``e_1 .. e_{alpha-1}``.

    ``t-form``: ``t_k = k*beta mod 2*alpha``, ``e_k = +1`` iff ``t_k < alpha``.
    ``c-form``: the representative ``c_k`` in ``(-alpha, alpha)``, ``e_k = sign(c_k)``.
    """
    a, b = p.alpha, p.beta
    if method == "t-form":
        return tuple(1 if (k * b) % (2 * a) < a else -1 for k in range(1, a))
    if method == "c-form":
        out = []
        for k in range(1, a):
            c = (k * b) % (2 * a)
            if c >= a:
                c -= 2 * a
            out.append(1 if c > 0 else -1)
        return tuple(out)
    raise ValueError(f"unknown method {method!r}")


def schubert_s_value(p: SchubertParams) -> tuple[int, int]:
    """The even ``2 <= s <= alpha-1`` with ``s*beta = +-1 (mod alpha)``.

    Returns ``(s, case)`` where ``case = +1`` when ``s*beta = -1`` (then
    ``e_s = +1``) and ``case = -1`` when ``s*beta = +1`` (then ``e_s = -1``).
    """
    a, b = p.alpha, p.beta
    for s in range(2, a, 2):
        r = (s * b) % a
        if r == a - 1:
            return s, 1
        if r == 1:
            return s, -1
    raise AssertionError("no s found; alpha and beta are not coprime")


def _alternate(first: str, second: str, exps) -> Word:
    return Word((first if i % 2 == 0 else second, e) for i, e in enumerate(exps))


def schubert_words(p: SchubertParams) -> tuple[Word, Word]:
    """``w1 = y^e1 x^e2 ... x^e(alpha-1)`` and ``w2 = x^e1 y^e2 ... y^e(alpha-1)``."""
    e = schubert_exponents(p)
    return _alternate("y", "x", e), _alternate("x", "y", e)


def schubert_chain(p: SchubertParams) -> WirtingerPresentation:
    """One-relator chain ``x -> y`` by ``w1``, i.e. ``x w1 = w1 y``."""
    w1, _ = schubert_words(p)
    return cyclic_chain(("x", "y"), [w1])


def schubert_presentations(p: SchubertParams) -> tuple[Presentation, Presentation]:
    """Two-relator (``x w1 = w1 y``, ``y w2 = w2 x``) and one-relator forms."""
    w1, w2 = schubert_words(p)
    two = cyclic_chain(("x", "y"), [w1, w2]).base
    one = schubert_chain(p).base
    return two, one


def schubert_code(p: SchubertParams) -> KnotCode:
    return cyclic_wirtinger_to_code(close_deficiency_one(schubert_chain(p)))


def torus_presentation(alpha: int) -> Presentation:
    """``<z, h | z^alpha h^-2>``, the (2, alpha) torus knot group."""
    if alpha < 3 or alpha % 2 == 0:
        raise PreconditionError(f"alpha must be odd and >= 3, got {alpha}")
    return Presentation(("z", "h"), (Word([("z", alpha), ("h", -2)]),))

"""Fox calculus, Alexander polynomials, the Murasugi center test, Riley's
Nab-rep polynomial and Baumslag-Solitar classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Mapping

from .algebra import BiPoly, LaurentPoly, Mat2, laurent_gcd, laurent_normalize_unit
from .errors import PreconditionError
from .groups import abelianization, abelianization_two_gen
from .words import GroupRingElem, Presentation, Word

__all__ = [
    "fox_derivative",
    "ring_abelianize",
    "abelianization_map",
    "alexander_two_generator",
    "alexander_polynomial",
    "MurasugiVerdict",
    "MurasugiResult",
    "murasugi_center_test",
    "riley_matrices",
    "nabrep_eval",
    "nabrep_condition",
    "nabrep_phi",
    "numeric_nabrep_eval",
    "numeric_rep_residual",
    "two_bridge_relator",
    "BSReport",
    "bs_classify",
    "bs_relator",
    "Center",
    "prime_divisors",
]


# -- Fox calculus -----------------------------------------------------------


def _power_sum(g: str, p: int) -> GroupRingElem:
    """``1 + g + ... + g^(p-1)``."""
    return GroupRingElem({Word.gen(g, k): 1 for k in range(p)})


def fox_derivative(w: Word, g: str) -> GroupRingElem:
    """``d w / d g`` in ZF, one syllable at a time.

    ``d(uv) = du + u dv``; ``d(g^p) = 1 + ... + g^(p-1)`` and
    ``d(g^-p) = -g^-p (1 + ... + g^(p-1))`` for ``p >= 1``.
    """
    result = GroupRingElem()
    prefix = Word()
    for h, e in w.syllables:
        if h == g:
            if e > 0:
                result = result + prefix * _power_sum(g, e)
            else:
                result = result - (prefix * Word.gen(g, e)) * _power_sum(g, -e)
        prefix = prefix * Word.gen(h, e)
    return result


def ring_abelianize(e: GroupRingElem, mapping: Mapping[str, int]) -> LaurentPoly:
    """Image in Z[t, t^-1] under ``g -> t^mapping[g]`` (missing generators -> 1)."""
    out = LaurentPoly()
    for w, c in e.terms.items():
        deg = sum(mapping.get(g, 0) * x for g, x in w.syllables)
        out = out + LaurentPoly({deg: c})
    return out


def abelianization_map(P: Presentation) -> dict[str, int]:
    """Primitive ``g -> d_g`` killing every relator, first nonzero entry positive.

    Requires free rank 1 of the abelianization.
    """
    rank, _ = abelianization(P)
    if rank != 1:
        raise PreconditionError(f"abelianization has free rank {rank}, expected 1")
    gens = P.generators
    rows = [[Fraction(x) for x in row] for row in P.exponent_matrix()]
    n = len(gens)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = next(c for c in range(n) if c not in pivots)
    vec = [Fraction(0)] * n
    vec[free] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -rows[i][free]
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if next(v for v in ints if v) < 0:
        ints = [-v for v in ints]
    return dict(zip(gens, ints))


def alexander_two_generator(P: Presentation) -> LaurentPoly:
    """gcd of the abelianized Fox derivatives of the single relator."""
    if len(P.generators) != 2 or len(P.relators) != 1:
        raise PreconditionError("need exactly two generators and one relator")
    (r,) = P.relators
    if r.is_identity():
        raise PreconditionError("relator is trivial")
    rank, tors = abelianization_two_gen(P)
    if rank != 1:
        raise PreconditionError(f"abelianization has free rank {rank}, expected 1")
    x1, x2 = P.generators
    lx, ly = r.exponent_sum(x1), r.exponent_sum(x2)
    d1, d2 = ly // tors, -lx // tors
    if d1 < 0 or (d1 == 0 and d2 < 0):
        d1, d2 = -d1, -d2
    mapping = {x1: d1, x2: d2}
    a = ring_abelianize(fox_derivative(r, x1), mapping)
    b = ring_abelianize(fox_derivative(r, x2), mapping)
    return laurent_gcd(a, b)


def _det(M: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(M)
    if n == 0:
        return LaurentPoly(1)
    if n == 1:
        return M[0][0]
    total = LaurentPoly()
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_polynomial(P: Presentation) -> LaurentPoly:
    """Alexander polynomial of any presentation with free abelian rank 1.

    gcd of the (n-1)-minors of the abelianized Fox Jacobian; for two
    generators and one relator this is `alexander_two_generator` up to units.
    """
    if len(P.generators) == 2 and len(P.relators) == 1:
        return alexander_two_generator(P)
    mapping = abelianization_map(P)
    gens = P.generators
    n = len(gens)
    J = [[ring_abelianize(fox_derivative(r, g), mapping) for g in gens] for r in P.relators]
    g = LaurentPoly()
    for rows in combinations(range(len(J)), n - 1):
        for cols in combinations(range(n), n - 1):
            m = _det([[J[i][j] for j in cols] for i in rows])
            if m:
                g = m if not g else laurent_gcd(g, m)
    if not g:
        return LaurentPoly()
    return laurent_normalize_unit(g)


# -- Murasugi center conditions ----------------------------------------------


class MurasugiVerdict(enum.Enum):
    FAILS_DEG0 = "fails_deg0"
    DEG1_MATCHES = "deg1_matches"
    DEG1_NO_MATCH = "deg1_no_match"
    DIVIDES_1_MINUS_T_R = "divides_1_minus_t_r"
    NO_DIVISOR_UP_TO_R_MAX = "no_divisor_up_to_r_max"


@dataclass(frozen=True)
class MurasugiResult:
    verdict: MurasugiVerdict
    degree: int
    r: int | None = None
    r_max: int | None = None

    @property
    def center_may_be_nontrivial(self) -> bool:
        return self.verdict in (MurasugiVerdict.DEG1_MATCHES, MurasugiVerdict.DIVIDES_1_MINUS_T_R)


def murasugi_center_test(delta: LaurentPoly, r_max: int | None = None) -> MurasugiResult:
    """Check the necessary conditions for a one-relator group to have nontrivial center.

    The search for ``r`` with ``delta | 1 - t^r`` stops at ``r_max``
    (default ``2 * degree**2``), so a negative answer is bounded, not a proof.
    """
    if not delta:
        raise PreconditionError("Alexander polynomial is zero")
    delta = laurent_normalize_unit(delta)
    d = delta.degree
    if d == 0:
        return MurasugiResult(MurasugiVerdict.FAILS_DEG0, 0)
    if d == 1:
        a0, a1 = delta.coeff(0), delta.coeff(1)
        ok = abs(a0) == abs(a1)
        return MurasugiResult(
            MurasugiVerdict.DEG1_MATCHES if ok else MurasugiVerdict.DEG1_NO_MATCH, 1
        )
    if r_max is None:
        r_max = 2 * d * d
    for r in range(1, r_max + 1):
        if delta.divides(LaurentPoly({0: 1, r: -1})):
            return MurasugiResult(MurasugiVerdict.DIVIDES_1_MINUS_T_R, d, r, r_max)
    return MurasugiResult(MurasugiVerdict.NO_DIVISOR_UP_TO_R_MAX, d, None, r_max)


# -- Riley's representation ------------------------------------------------------


def riley_matrices() -> tuple[Mat2, Mat2]:
    """``(A, B)`` with ``A = [[t, 0], [-tu, 1]]`` (image of x), ``B = [[t, 1], [0, 1]]`` (y)."""
    t, u = BiPoly.t(), BiPoly.u()
    A = Mat2(t, BiPoly(0), -(t * u), BiPoly(1))
    B = Mat2(t, BiPoly(1), BiPoly(0), BiPoly(1))
    return A, B


def _eval_word(w: Word, images: dict[str, Mat2], one) -> Mat2:
    inverses = {g: M.inverse() for g, M in images.items()}
    W = Mat2.identity(one)
    for g, e in w.letters():
        if g not in images:
            raise PreconditionError(f"word uses {g!r}; only {sorted(images)} are mapped")
        W = W @ (images[g] if e > 0 else inverses[g])
    return W


def nabrep_eval(w: Word) -> Mat2:
    """``H(w)`` over Z[t, t^-1, u] with ``H(x) = A``, ``H(y) = B``."""
    A, B = riley_matrices()
    return _eval_word(w, {"x": A, "y": B}, BiPoly(1))


def nabrep_condition(w: Word) -> BiPoly:
    """``w11 + (1 - t) w12`` of ``H(w)`` before any unit shift."""
    W = nabrep_eval(w)
    return W.e11 + (1 - BiPoly.t()) * W.e12


def nabrep_phi(w: Word) -> BiPoly:
    """Nab-rep polynomial: `nabrep_condition` shifted by ``t^-m`` so its lowest t-degree is 0."""
    cond = nabrep_condition(w)
    if not cond:
        return cond
    return cond.shift_t(-cond.min_t_degree())


def numeric_nabrep_eval(w: Word, t0, u0) -> Mat2:
    """``H(w)`` at exact rational ``(t0, u0)``."""
    t0, u0 = Fraction(t0), Fraction(u0)
    if t0 == 0:
        raise PreconditionError("t = 0 makes the matrices singular")
    A = Mat2(t0, Fraction(0), -t0 * u0, Fraction(1))
    B = Mat2(t0, Fraction(1), Fraction(0), Fraction(1))
    return _eval_word(w, {"x": A, "y": B}, Fraction(1))


def two_bridge_relator(w: Word) -> Word:
    """``x w y^-1 w^-1``, the relation ``x w = w y``."""
    return Word.gen("x") * w * Word.gen("y", -1) * w.inverse()


def numeric_rep_residual(w: Word, t0, u0, relator: Word | None = None) -> Mat2:
    """``H(relator) - I`` at ``(t0, u0)``; relator defaults to ``x w = w y``."""
    if relator is None:
        relator = two_bridge_relator(w)
    return numeric_nabrep_eval(relator, t0, u0) - Mat2.identity(Fraction(1))


# -- Baumslag-Solitar groups ----------------------------------------------------


def prime_divisors(k: int) -> frozenset[int]:
    k = abs(k)
    out = set()
    p = 2
    while p * p <= k:
        while k % p == 0:
            out.add(p)
            k //= p
        p += 1
    if k > 1:
        out.add(k)
    return frozenset(out)


class Center(str, enum.Enum):
    TRIVIAL = "trivial"
    CYCLIC_Y_N = "cyclic-generated-by-y^n"
    NOT_CLASSIFIED = "not-classified"


@dataclass(frozen=True)
class BSReport:
    m: int
    n: int
    residually_finite: bool
    hopfian: bool
    abelianization: tuple[int, int]
    is_virtual_knot_group: bool
    center: Center

    def to_dict(self) -> dict:
        rank, tors = self.abelianization
        return {
            "m": self.m,
            "n": self.n,
            "residually_finite": self.residually_finite,
            "hopfian": self.hopfian,
            "abelianization": {"rank": rank, "torsion": tors},
            "virtual_knot_group": self.is_virtual_knot_group,
            "center": self.center.value,
        }


def bs_relator(m: int, n: int) -> Word:
    """``x y^m x^-1 y^-n``."""
    return Word([("x", 1), ("y", m), ("x", -1), ("y", -n)])


def bs_classify(m: int, n: int) -> BSReport:
    if m == 0 or n == 0:
        raise PreconditionError("BS(m, n) needs nonzero m and n")
    rf = abs(m) == abs(n) or abs(m) == 1 or abs(n) == 1
    hopf = rf or prime_divisors(m) == prime_divisors(n)
    ab = abelianization_two_gen(Presentation(("x", "y"), (bs_relator(m, n),)))
    if m == n:
        center = Center.CYCLIC_Y_N
    elif m == -n:
        center = Center.NOT_CLASSIFIED
    else:
        center = Center.TRIVIAL
    return BSReport(m, n, rf, hopf, ab, n == m + 1, center)

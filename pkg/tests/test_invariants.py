from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import alexander_oracle, laurent_coeffs, letters, riley_numeric
from vkgroups.algebra import BiPoly, LaurentPoly, Mat2
from vkgroups.errors import PreconditionError
from vkgroups.invariants import (
    Center,
    MurasugiVerdict,
    abelianization_map,
    alexander_polynomial,
    alexander_two_generator,
    bs_classify,
    bs_relator,
    fox_derivative,
    murasugi_center_test,
    nabrep_eval,
    nabrep_phi,
    numeric_rep_residual,
    ring_abelianize,
)
from vkgroups.words import GroupRingElem, Presentation, Word, parse_word

t = LaurentPoly.t()
letter_lists = st.lists(st.tuples(st.sampled_from("xy"), st.sampled_from([1, -1])), max_size=10)
words = letter_lists.map(Word.from_letters)


def fox_oracle(w: Word, g: str) -> GroupRingElem:
    """Letter-by-letter Fox derivative in the full group ring."""
    out = GroupRingElem()
    prefix = Word()
    for h, e in w.letters():
        if h == g:
            term = prefix if e == 1 else prefix * Word.gen(g, -1)
            out = out + GroupRingElem.from_word(term, e)
        prefix = prefix * Word.gen(h, e)
    return out


def test_fox_examples():
    R = bs_relator(2, 3)
    assert str(fox_derivative(R, "x")) == "1 - x y^2 x^-1"
    expected = (
        GroupRingElem.from_word(parse_word("x"))
        + GroupRingElem.from_word(parse_word("x y"))
        - GroupRingElem.from_word(parse_word("x y^2 x^-1 y^-1"))
        - GroupRingElem.from_word(parse_word("x y^2 x^-1 y^-2"))
        - GroupRingElem.from_word(parse_word("x y^2 x^-1 y^-3"))
    )
    assert fox_derivative(R, "y") == expected
    assert not fox_derivative(Word(), "x")


def test_ring_abelianize_examples():
    R = bs_relator(2, 3)
    m = {"x": 1, "y": 0}
    assert ring_abelianize(fox_derivative(R, "x"), m) == LaurentPoly()
    assert ring_abelianize(fox_derivative(R, "y"), m) == 2 * t - 3
    assert ring_abelianize(GroupRingElem(), m) == LaurentPoly()


@given(words, st.sampled_from("xy"))
def test_fox_matches_letter_oracle(w, g):
    assert fox_derivative(w, g) == fox_oracle(w, g)


@given(words, words, st.sampled_from("xy"))
def test_fox_product_rule(u, v, g):
    assert fox_derivative(u * v, g) == fox_derivative(u, g) + u * fox_derivative(v, g)


@given(words, st.integers(-3, 3), st.integers(-3, 3))
def test_fundamental_formula(w, dx, dy):
    # sum over g of pi(dw/dg)(t^{d_g} - 1) = pi(w) - 1
    m = {"x": dx, "y": dy}
    lhs = sum(
        (ring_abelianize(fox_derivative(w, g), m) * (LaurentPoly.t(m[g]) - 1) for g in "xy"),
        LaurentPoly(),
    )
    deg = dx * w.exponent_sum("x") + dy * w.exponent_sum("y")
    assert lhs == LaurentPoly.t(deg) - 1


def test_abelianization_map():
    assert abelianization_map(Presentation(("x", "y"), (bs_relator(2, 3),))) == {"x": 1, "y": 0}
    assert abelianization_map(Presentation(("z", "h"), (parse_word("z^3 h^-2"),))) == {"z": 2, "h": 3}


def test_alexander_examples():
    tref = Presentation(("x", "y"), (parse_word("x y x y^-1 x^-1 y^-1"),))
    assert alexander_two_generator(tref) == 1 - t + t**2
    fig8 = Presentation(("x", "y"), (parse_word("x y x^-1 y^-1 x y^-1 x^-1 y x y^-1"),))
    assert laurent_coeffs(alexander_two_generator(fig8)) == alexander_oracle(
        ["x", "y"], str(fig8.relators[0]), {"x": 1, "y": 1}
    )
    for m, n in [(2, 3), (3, 2), (-2, 5), (1, 7)]:
        P = Presentation(("x", "y"), (bs_relator(m, n),))
        assert laurent_coeffs(alexander_two_generator(P)) == laurent_coeffs(m * t - n)
    with pytest.raises(PreconditionError):
        alexander_two_generator(Presentation(("x", "y"), (bs_relator(4, 4),)))


@settings(max_examples=40, deadline=None)
@given(words.filter(lambda w: not w.is_identity()))
def test_general_alexander_agrees_with_two_generator(r):
    P = Presentation(("x", "y"), (r,))
    try:
        a = alexander_two_generator(P)
    except PreconditionError:
        return
    assert alexander_polynomial(P) == a


@pytest.mark.parametrize(
    "poly, verdict, r",
    [
        ("3 + 3*t", MurasugiVerdict.DEG1_MATCHES, None),
        ("2*t - 3", MurasugiVerdict.DEG1_NO_MATCH, None),
        ("1 - t + t^2", MurasugiVerdict.DIVIDES_1_MINUS_T_R, 6),
        ("1 - t + t^2 - t^3 + t^4", MurasugiVerdict.DIVIDES_1_MINUS_T_R, 10),
        ("5", MurasugiVerdict.FAILS_DEG0, None),
        ("1 - 3*t + t^2", MurasugiVerdict.NO_DIVISOR_UP_TO_R_MAX, None),
    ],
)
def test_murasugi_examples(poly, verdict, r):
    res = murasugi_center_test(LaurentPoly.parse(poly))
    assert res.verdict is verdict
    assert res.r == r


def test_murasugi_respects_rmax():
    res = murasugi_center_test(1 - t + t**2, r_max=5)
    assert res.verdict is MurasugiVerdict.NO_DIVISOR_UP_TO_R_MAX and res.r_max == 5


def test_nabrep_examples():
    one = LaurentPoly(1)
    assert nabrep_eval(parse_word("y")) == Mat2(BiPoly.t(), BiPoly(1), BiPoly(), BiPoly(1))
    assert nabrep_eval(parse_word("y^-1")) == Mat2(
        BiPoly(t**-1), BiPoly(-(t**-1)), BiPoly(), BiPoly(one)
    )
    u, tt = BiPoly.u(), BiPoly.t()
    assert nabrep_eval(parse_word("y x")) == Mat2(tt * tt - tt * u, BiPoly(1), -tt * u, BiPoly(1))
    assert nabrep_phi(parse_word("y x")) == tt * tt - tt * u - tt + 1
    assert nabrep_phi(Word()) == BiPoly(1)


def test_residual_examples():
    w = parse_word("y x")
    assert numeric_rep_residual(w, 1, 1).is_zero()
    assert not numeric_rep_residual(w, 1, 2).is_zero()
    assert numeric_rep_residual(w, 3, 5, relator=Word()).is_zero()
    # trefoil braid relation A B A = B A B at t = u = 1
    assert riley_numeric("x y x", Fraction(1), Fraction(1)) == riley_numeric("y x y", Fraction(1), Fraction(1))


def _rational_roots(coeffs: dict[int, Fraction]) -> set[Fraction]:
    """Rational roots of a polynomial in u, by the rational root theorem."""
    from math import lcm

    if not any(coeffs.values()):
        return set()
    den = lcm(*(c.denominator for c in coeffs.values()))
    ints = {k: int(c * den) for k, c in coeffs.items() if c}
    lo = min(ints)
    ints = {k - lo: c for k, c in ints.items()}
    roots = {Fraction(0)} if lo > 0 else set()
    a0, an = ints[0], ints[max(ints)]
    divs = lambda n: [d for d in range(1, abs(n) + 1) if n % d == 0]
    for p in divs(a0):
        for q in divs(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand**k for k, c in ints.items()) == 0:
                    roots.add(cand)
    return roots


@pytest.mark.parametrize("ab", [(3, 1), (5, 1), (5, 3), (7, 1), (7, 3), (9, 5)])
@pytest.mark.parametrize("t0", [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 3)])
def test_phi_roots_are_representations(ab, t0):
    from vkgroups.schubert import SchubertParams, schubert_words

    w, _ = schubert_words(SchubertParams(*ab))
    phi = nabrep_phi(w)
    for u0 in _rational_roots(phi.specialize_t(t0)):
        assert numeric_rep_residual(w, t0, u0).is_zero()
    for u0 in (Fraction(7, 11), Fraction(-13, 3)):
        if phi(t0, u0) != 0:
            assert not numeric_rep_residual(w, t0, u0).is_zero()


def test_bs_examples():
    r = bs_classify(2, 3)
    assert (r.residually_finite, r.hopfian, r.is_virtual_knot_group, r.center) == (
        False, False, True, Center.TRIVIAL
    )
    r = bs_classify(2, 2)
    assert (r.residually_finite, r.hopfian, r.is_virtual_knot_group, r.center) == (
        True, True, False, Center.CYCLIC_Y_N
    )
    r = bs_classify(1, 2)
    assert r.residually_finite and r.hopfian and r.is_virtual_knot_group
    r = bs_classify(12, 18)
    assert not r.residually_finite and r.hopfian
    assert bs_classify(3, -3).center is Center.NOT_CLASSIFIED
    assert bs_classify(2, 3).to_dict()["abelianization"] == {"rank": 1, "torsion": 1}
    with pytest.raises(PreconditionError):
        bs_classify(0, 2)

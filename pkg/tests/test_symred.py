from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hyperred.diffspace import analyze, oracle_reduce, spanning_support, verify_certificate
from hyperred.polycore import Parity, Poly, PowerBasisPoly, compose_linear, parity, shift, to_power_basis
from hyperred.symred import (
    HALF3_ALT,
    HALF4,
    DivisibilityViolation,
    HypothesisViolation,
    ParityViolation,
    ShiftViolation,
    SymmetryViolation,
    TermSpec,
    c_m_product,
    half4_reduce,
    half4_scale,
    integral_reduce_alt,
    integral_reduce_same,
    sym_reduce,
    tilde_p,
    tilde_x,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def test_tilde_p_examples():
    assert tilde_p(HALF3_ALT, 0) == Poly([0, 3, 0, 1])
    assert tilde_p(HALF4, 0) == Poly([0, 4, 0, 4])
    p1 = tilde_p(HALF3_ALT, 1)
    assert p1.degree == 4 and parity(p1) is Parity.EVEN


specs = st.builds(
    TermSpec,
    st.sampled_from([1, -1]),
    st.builds(Fraction, st.integers(-7, 7), st.integers(1, 5)),
    st.integers(1, 5),
)


@settings(max_examples=100, deadline=None)
@given(specs, st.integers(0, 8))
def test_tilde_p_laws(spec, s):
    tp = tilde_p(spec, s)
    assert tp.is_integral() and tilde_x(spec, s).is_integral()
    if spec.sign == -1:
        assert tp.degree == s + spec.r and tp.lc() == 1
    else:
        lead = (spec.alpha * spec.r + s) * spec.D
        if lead == 0:
            assert tp.degree < s + spec.r - 1
        else:
            assert tp.degree == s + spec.r - 1 and tp.lc() == lead
    assert parity(tp) in (Parity.EVEN, Parity.ODD, Parity.ZERO)


@settings(max_examples=60, deadline=None)
@given(specs, st.integers(0, 6))
def test_tilde_pair_is_an_image(spec, s):
    # Delta(2^{r-1} (Dk)^r tx(2Dk) t) = tp(k') t, checked in the k variable
    info = spec.space()
    X = compose_linear(tilde_x(spec, s), 2 * spec.D, 0) * (2 ** (spec.r - 1) * spec.D ** spec.r)
    f = compose_linear(tilde_p(spec, s), 2 * spec.D, spec.shift_num)
    lhs = info.a * shift(X, 1) - shift(info.b, -1) * X
    assert lhs == f


@pytest.mark.parametrize("s", range(0, 14))
def test_half4_divisibility(s):
    q = 2 if s % 2 else 4
    assert all(c.numerator % q == 0 for c in tilde_p(HALF4, s).coeffs)


def test_alt_examples():
    r1 = integral_reduce_alt(HALF3_ALT, 1)
    assert r1.coeffs_a == {1: 1} and r1.x.is_zero() and r1.C == 1
    r3 = integral_reduce_alt(HALF3_ALT, 3)
    assert r3.coeffs_a == {1: -3} and r3.x == Poly([-1]) and r3.C == 1
    assert r3.verify()
    r5 = integral_reduce_alt(HALF3_ALT, 5)
    assert set(r5.coeffs_a) == {1} and r5.verify()


def test_alt_spot_check_at_zero():
    # (k')^3 t_0 - (-3) k' t_0 at k = 0 equals the Delta side: 32 * 1^3 * (-1) * t_1
    t1 = Fraction(-1, 8)
    assert (1 + 3) * 1 == -32 * t1


def test_same_examples():
    spec = HALF4
    r1 = integral_reduce_same(spec, 1)
    assert r1.coeffs_a == {1: 1} and r1.x.is_zero() and r1.C == 1
    r3 = integral_reduce_same(spec, 3)
    assert r3.C == 4 and r3.coeffs_a == {1: -4} and r3.x == Poly([1])
    assert r3.verify()
    r2 = integral_reduce_same(spec, 2)
    assert r2.coeffs_a == {2: 1} and r2.C == 1 and r2.verify()


def test_same_hypothesis_violation():
    with pytest.raises(HypothesisViolation):
        integral_reduce_same(TermSpec(1, Fraction(-1, 2), 4), 5)


def test_half4_examples():
    r1 = half4_reduce(1)
    assert r1.coeffs_a == {1: 1} and r1.C == 1 and r1.x.is_zero()
    r3 = half4_reduce(3)
    assert r3.coeffs_a == {1: -1} and r3.C == 1 and r3.x == Poly([1]) and r3.verify()
    r11 = half4_reduce(11)
    assert r11.C == 120
    assert Fraction(r11.coeffs_a[1], r11.C) == -10515
    assert r11.verify()


def test_half4_spot_check_at_zero():
    # Delta(32 k^4 t)|_{k=0} = 32 t_1 = 2 = (1 + 1) t_0
    assert 32 * Fraction(1, 16) == 2


@pytest.mark.parametrize("m", range(1, 20))
def test_half4_scale_and_shape(m):
    red = half4_reduce(m)
    assert red.C == half4_scale(m)
    assert red.delta_scale == (32 if m % 2 else 64)
    assert red.verify()
    if m % 2:
        assert set(red.coeffs_a) <= {1}
    else:
        assert set(red.coeffs_a) <= {0, 2}


def test_half4_even_branch_small():
    red = half4_reduce(4)
    assert red.C == 3
    assert set(red.coeffs_a) <= {0, 2} and red.verify()


def test_divisibility_violation_is_raised(monkeypatch):
    import hyperred.symred as sr

    real = sr.tilde_p
    monkeypatch.setattr(sr, "tilde_p", lambda spec, s: real(spec, s) + 1)
    with pytest.raises(DivisibilityViolation):
        sr.half4_reduce(5)


@settings(max_examples=80, deadline=None)
@given(specs, st.integers(1, 11))
def test_integral_reduction_properties(spec, m):
    if spec.sign == 1 and not spec.same_sign_ok():
        with pytest.raises(HypothesisViolation):
            integral_reduce_same(spec, m)
        return
    red = integral_reduce_alt(spec, m) if spec.sign == -1 else integral_reduce_same(spec, m)
    assert red.verify()
    assert all(isinstance(a, int) for a in red.coeffs_a.values())
    assert red.x.is_integral()
    assert all(i % 2 == m % 2 for i in red.coeffs_a)
    top = spec.r - 1 if spec.sign == -1 else spec.r - 2
    assert all(i <= top for i in red.coeffs_a)
    if spec.sign == 1:
        assert red.C == c_m_product(spec, m)
    else:
        assert red.C == 1


def test_c_m_product_examples():
    assert c_m_product(HALF4, 1) == 1
    assert c_m_product(HALF4, 3) == 4
    # (2+2)*2 * (2+0)*2
    assert c_m_product(HALF4, 5) == 32


@pytest.mark.parametrize("m", range(1, 16))
@pytest.mark.parametrize("which", ["alt", "same", "half4"])
def test_oracle_agreement(m, which):
    if which == "alt":
        red = integral_reduce_alt(HALF3_ALT, m)
    elif which == "same":
        red = integral_reduce_same(HALF4, m)
    else:
        red = half4_reduce(m)
    info, f, cert = red.certificate()
    assert verify_certificate(info, f, cert)
    want = oracle_reduce(info, f, spanning_support(info))
    assert cert.h / cert.scale == want.h
    gamma = red.spec.gamma
    hp = parity(to_power_basis(cert.h, gamma))  # k' = 2D(k + gamma)
    assert hp in (Parity.ODD if m % 2 else Parity.EVEN, Parity.ZERO)


def test_sym_reduce_trivial():
    b = Poly([1, 1]) ** 3
    a = -shift(b, -HALF)
    f = PowerBasisPoly(QUARTER, (1,))
    cert = sym_reduce(a, b, -HALF, -1, -1, f)
    assert cert.h == Poly([1]) and cert.x.is_zero()


def test_sym_reduce_alt_cubic_matches_integral():
    b = Poly([1, 1]) ** 3
    a = -shift(b, -HALF)
    f = PowerBasisPoly(QUARTER, (0, 0, 0, 1))
    cert = sym_reduce(a, b, -HALF, -1, -1, f)
    info = analyze(a, b)
    fk = Poly([QUARTER, 1]) ** 3
    assert verify_certificate(info, fk, cert)
    assert parity(to_power_basis(cert.h, QUARTER)) is Parity.ODD and cert.h.degree <= 1
    # (k')^3 = 64 (k + 1/4)^3
    red = integral_reduce_alt(HALF3_ALT, 3)
    _, _, icert = red.certificate()
    assert cert.h * 64 == icert.h


def test_sym_reduce_same_quartic_even():
    b = Poly([1, 1]) ** 4
    a = shift(b, -HALF)
    f = PowerBasisPoly(QUARTER, (0, 0, 1))
    cert = sym_reduce(a, b, -HALF, -1, 1, f)
    info = analyze(a, b)
    fk = Poly([QUARTER, 1]) ** 2
    assert verify_certificate(info, fk, cert)
    assert parity(to_power_basis(cert.h, QUARTER)) in (Parity.EVEN, Parity.ZERO)
    assert cert.h.degree <= 2
    assert cert.h == oracle_reduce(info, fk, {0, 1, 2}).h


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=3),
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3)),
    st.builds(Fraction, st.integers(-4, 4), st.integers(1, 2)),
    st.sampled_from([1, -1]),
    st.integers(0, 9),
)
def test_sym_reduce_general_symmetric_b(even_coeffs, alpha, beta, sign, n):
    # b symmetric about beta: polynomial in (k - beta)^2, possibly times (k - beta)
    sq = Poly([-beta, 1]) ** 2
    b = sum((sq ** i * c for i, c in enumerate(even_coeffs)), Poly())
    assume(not b.is_zero())
    if n % 3 == 0:
        b = b * Poly([-beta, 1])
    a = shift(b, alpha) * sign
    r = a.degree
    if sign == 1:
        v = -(alpha + 1) * r
        if v.denominator == 1 and v >= 0:
            with pytest.raises(HypothesisViolation):
                sym_reduce(a, b, alpha, beta, sign, PowerBasisPoly(0, (1,)))
            return
    gamma = -beta + (alpha - 1) / 2
    f = PowerBasisPoly(gamma, (0,) * n + (1,))
    cert = sym_reduce(a, b, alpha, beta, sign, f)
    info = analyze(a, b)
    fk = Poly([gamma, 1]) ** n
    assert verify_certificate(info, fk, cert)
    hp = parity(to_power_basis(cert.h, gamma))
    assert hp in (Parity.EVEN if n % 2 == 0 else Parity.ODD, Parity.ZERO)
    bound = r if sign == -1 else r - 1
    assert cert.h.is_zero() or cert.h.degree < bound


def test_sym_reduce_errors():
    b = Poly([1, 1]) ** 3
    a = -shift(b, -HALF)
    with pytest.raises(ShiftViolation):
        sym_reduce(a + 1, b, -HALF, -1, -1, PowerBasisPoly(0, (1,)))
    nonsym = b + Poly.monomial(1)
    with pytest.raises(SymmetryViolation):
        sym_reduce(-shift(nonsym, -HALF), nonsym, -HALF, -1, -1, PowerBasisPoly(0, (1,)))
    with pytest.raises(ParityViolation):
        sym_reduce(a, b, -HALF, -1, -1, PowerBasisPoly(QUARTER, (1, 1)))
    b2 = Poly([1, 1]) ** 2
    with pytest.raises(HypothesisViolation):
        sym_reduce(shift(b2, -1), b2, -1, -1, 1, PowerBasisPoly(0, (1,)))


def test_half4_m11_certificate_polynomial():
    # p(k) = x(4k)/120 expanded in powers of (4k - 1)
    x = half4_reduce(11).x / 120
    expected = {
        0: Fraction(524029, 20),
        2: Fraction(-89909, 20),
        4: Fraction(20207, 60),
        6: Fraction(-249, 20),
        8: Fraction(1, 5),
    }
    coeffs = to_power_basis(x, -1).coeffs
    assert {i: c for i, c in enumerate(coeffs) if c} == expected

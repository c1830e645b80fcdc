"""Parity-preserving reductions for ``t_k = (+-1)^k ((alpha)_k / k!)^r``.

When ``a(k)`` is a shift of ``+-b(k)`` and ``b`` is symmetric, the generic
reduction maps polynomials that are even (odd) in ``k + gamma`` to even (odd)
remainders.  For ``b(k) = (k+1)^r`` the reduction can be run entirely over
the integers in the variable ``k' = 2Dk + D*alpha``, where ``D`` is the
denominator of ``alpha``; that is what :func:`integral_reduce_alt`,
:func:`integral_reduce_same` and :func:`half4_reduce` do.

Every result carries integers ``C`` and ``a_i``, an integer polynomial ``x``
and a prefactor ``delta_scale`` such that, with ``k' = 2Dk + D*alpha``::

    C (k')^m t_k = sum_i a_i (k')^i t_k + Delta_k(delta_scale * k^r * x(2Dk) * t_k)

``x`` is stored in its own argument, i.e. it is applied as ``x(2Dk)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .diffspace import (
    ReductionCertificate,
    SpaceInfo,
    analyze,
    image_of,
    verify_certificate,
)
from .polycore import (
    Parity,
    Poly,
    PowerBasisPoly,
    compose_linear,
    format_rat,
    from_power_basis,
    parity,
    shift,
    to_power_basis,
)


class HypothesisViolation(ValueError):
    pass


class SymmetryViolation(ValueError):
    pass


class ShiftViolation(ValueError):
    pass


class ParityViolation(ValueError):
    pass


class DivisibilityViolation(ArithmeticError):
    """A coefficient failed a divisibility that the construction guarantees."""


@dataclass(frozen=True)
class TermSpec:
    sign: int
    alpha: Fraction
    r: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.r < 1:
            raise ValueError("r must be a positive integer")

    @property
    def D(self) -> int:
        return self.alpha.denominator

    @property
    def shift_num(self) -> int:
        """``D * alpha`` (an integer)."""
        return self.alpha.numerator

    @property
    def gamma(self) -> Fraction:
        return self.alpha / 2

    @property
    def beta(self) -> Fraction:
        return Fraction(-1)

    def a_poly(self) -> Poly:
        return Poly([self.alpha, 1]) ** self.r * self.sign

    def b_poly(self) -> Poly:
        return Poly([1, 1]) ** self.r

    def space(self) -> SpaceInfo:
        return analyze(self.a_poly(), self.b_poly())

    def kprime(self) -> Poly:
        """``2Dk + D*alpha`` as a polynomial in ``k``."""
        return Poly([self.shift_num, 2 * self.D])

    def same_sign_ok(self) -> bool:
        v = -self.alpha * self.r
        return not (v.denominator == 1 and v >= 0)


HALF4 = TermSpec(1, Fraction(1, 2), 4)
HALF3_ALT = TermSpec(-1, Fraction(1, 2), 3)


@dataclass(frozen=True)
class IntegralReduction:
    spec: TermSpec
    m: int
    coeffs_a: dict
    x: Poly
    C: int
    delta_scale: int

    def remainder(self) -> Poly:
        """``sum_i a_i (k')^i`` as a polynomial in ``k'``."""
        out = Poly()
        for i, a in self.coeffs_a.items():
            out = out + Poly.monomial(i, a)
        return out

    def certificate(self) -> tuple[SpaceInfo, Poly, ReductionCertificate]:
        """Translate back to the variable ``k`` for :func:`verify_certificate`."""
        kp = self.spec.kprime()
        f = kp ** self.m
        h = compose_linear(self.remainder(), 2 * self.spec.D, self.spec.shift_num)
        xk = compose_linear(self.x, 2 * self.spec.D, 0) * self.delta_scale
        return self.spec.space(), f, ReductionCertificate(h, xk, Fraction(self.C))

    def verify(self) -> bool:
        info, f, cert = self.certificate()
        return verify_certificate(info, f, cert).passed

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "C": self.C,
            "a": {str(i): a for i, a in sorted(self.coeffs_a.items())},
            "a_over_C": {str(i): format_rat(Fraction(a, self.C)) for i, a in sorted(self.coeffs_a.items())},
            "x": self.x.int_coeffs(),
            "delta_scale": self.delta_scale,
            "spec": {"sign": self.spec.sign, "alpha": format_rat(self.spec.alpha), "r": self.spec.r},
        }


def tilde_p(spec: TermSpec, s: int) -> Poly:
    """Image of :func:`tilde_x` written in ``k'`` (integer coefficients)."""
    A, D = spec.shift_num, spec.D
    plus = Poly([A, 1]) ** spec.r * Poly([D, 1]) ** s
    minus = Poly([-A, 1]) ** spec.r * Poly([-D, 1]) ** s
    # sign -1 is the alternating term: sum; sign +1: difference
    total = plus + minus if spec.sign == -1 else plus - minus
    return total / 2


def tilde_x(spec: TermSpec, s: int) -> Poly:
    lin = Poly([spec.shift_num - spec.D, 1]) ** s
    return -lin if spec.sign == -1 else lin


def c_m_product(spec: TermSpec, m: int) -> int:
    """``prod_{0 <= 2i <= m-r+1} (alpha*r + m - r + 1 - 2i) * D`` (empty product is 1)."""
    out = Fraction(1)
    i = 0
    while 2 * i <= m - spec.r + 1:
        out *= (spec.alpha * spec.r + m - spec.r + 1 - 2 * i) * spec.D
        i += 1
    assert out.denominator == 1
    return out.numerator


def _integral_loop(spec: TermSpec, m: int, offset: int, divisor=None):
    # Eliminates k^l for l = m, m-2, ... >= offset using tilde_p(l - offset).
    # A zero coefficient still multiplies C by the leading coefficient so that
    # C matches the closed-form product.
    p = Poly.monomial(m)
    x = Poly()
    C = 1
    ell = m
    while ell >= offset:
        s = ell - offset
        tp = tilde_p(spec, s)
        tx = tilde_x(spec, s)
        if divisor is not None:
            q = divisor(s)
            bad = [c for c in tp.coeffs if c.numerator % q]
            if bad:
                raise DivisibilityViolation(f"tilde_p_{s} not divisible by {q}: {tp!r}")
            tp = tp / q
        L = tp.lc().numerator
        c = p.coeff(ell).numerator
        p = p * L - tp * c
        x = x * L + tx * c
        C *= L
        if p.degree >= ell or p.coeff(ell - 1) != 0:
            raise AssertionError(f"reduction step at degree {ell} did not drop two degrees")
        ell -= 2
    if not (p.is_integral() and x.is_integral()):
        raise AssertionError("integral reduction left the integers")
    coeffs = {i: c.numerator for i, c in enumerate(p.coeffs) if c != 0}
    return coeffs, x, C


def integral_reduce_alt(spec: TermSpec, m: int) -> IntegralReduction:
    """Reduce ``(k')^m`` for the alternating term ``(-1)^k ((alpha)_k/k!)^r``."""
    if spec.sign != -1:
        raise ValueError("integral_reduce_alt needs sign = -1")
    if m < 1:
        raise ValueError("m must be positive")
    coeffs, x, C = _integral_loop(spec, m, spec.r)
    return IntegralReduction(spec, m, coeffs, x, C, 2 ** (spec.r - 1) * spec.D ** spec.r)


def integral_reduce_same(spec: TermSpec, m: int) -> IntegralReduction:
    """Reduce ``C_m (k')^m`` for ``((alpha)_k/k!)^r``; needs ``-alpha*r`` not in N."""
    if spec.sign != 1:
        raise ValueError("integral_reduce_same needs sign = +1")
    if m < 1:
        raise ValueError("m must be positive")
    if not spec.same_sign_ok():
        raise HypothesisViolation(f"-alpha*r = {-spec.alpha * spec.r} is a nonnegative integer")
    coeffs, x, C = _integral_loop(spec, m, spec.r - 1)
    return IntegralReduction(spec, m, coeffs, x, C, 2 ** (spec.r - 1) * spec.D ** spec.r)


def half4_reduce(m: int) -> IntegralReduction:
    """Reduction for ``((1/2)_k/k!)^4`` with the scale cut down to ``((m-1)/2)!`` or ``(m-1)!!``.

    Each ``tilde_p_s`` is divisible by 4 for even ``s`` and by 2 for odd ``s``;
    dividing it out before eliminating keeps ``C`` small.  ``s`` has the
    parity of ``m - 3``, so a single divisor applies to the whole run.
    """
    if m < 1:
        raise ValueError("m must be positive")
    coeffs, x, C = _integral_loop(HALF4, m, HALF4.r - 1, divisor=lambda s: 4 if s % 2 == 0 else 2)
    divisor = 4 if (m - 3) % 2 == 0 else 2
    return IntegralReduction(HALF4, m, coeffs, x, C, 128 // divisor)


def half4_scale(m: int) -> int:
    """``((m-1)/2)!`` for odd ``m``, ``(m-1)!!`` for even ``m``."""
    if m % 2:
        return math.factorial((m - 1) // 2)
    return math.prod(range(m - 1, 0, -2))


# -- rational symmetric reduction ---------------------------------------------


def symmetry_center_parity(b: Poly, beta: Fraction) -> Parity:
    return parity(to_power_basis(b, -Fraction(beta)))


def sym_reduce(
    a: Poly,
    b: Poly,
    alpha,
    beta,
    sign: int,
    f: PowerBasisPoly,
) -> ReductionCertificate:
    """Parity-preserving reduction of ``f`` for ``a(k) = sign*b(k+alpha)``, ``b`` symmetric about ``beta``.

    ``f`` is re-expanded about ``gamma = -beta + (alpha-1)/2`` and must be
    purely even or purely odd there; the remainder ``h`` has the same parity
    and degree below ``deg a`` (sign -1) or ``deg a - 1`` (sign +1).
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a != shift(b, alpha) * sign:
        raise ShiftViolation("a(k) != sign * b(k + alpha)")
    if symmetry_center_parity(b, beta) not in (Parity.EVEN, Parity.ODD):
        raise SymmetryViolation(f"b is not symmetric about {beta}")
    r = a.degree
    if sign == 1:
        v = -(alpha + 1) * r
        if v.denominator == 1 and v >= 0:
            raise HypothesisViolation(f"-(alpha+1)*deg a = {v} is a nonnegative integer")
    gamma = -beta + (alpha - 1) / 2
    fk = from_power_basis(f)
    if parity(to_power_basis(fk, gamma)) == Parity.MIXED:
        raise ParityViolation("f mixes even and odd powers of (k + gamma)")

    info = analyze(a, b)
    half_shift = Poly([gamma - Fraction(1, 2), 1])
    if sign == -1:
        x_s = lambda s: half_shift ** s * Fraction(-1, 2)
        floor = r
    else:
        x_s = lambda s: half_shift ** s
        floor = r - 1
    p = fk
    x = Poly()
    while not p.is_zero() and p.degree >= floor:
        s = p.degree - floor
        xs = x_s(s)
        ps = image_of(info, xs)
        c = p.lc() / ps.lc()
        p = p - ps * c
        x = x + xs * c
    return ReductionCertificate(p, x, Fraction(1))


__all__ = [
    "DivisibilityViolation",
    "HALF3_ALT",
    "HALF4",
    "HypothesisViolation",
    "IntegralReduction",
    "ParityViolation",
    "ShiftViolation",
    "SymmetryViolation",
    "TermSpec",
    "c_m_product",
    "half4_reduce",
    "half4_scale",
    "integral_reduce_alt",
    "integral_reduce_same",
    "sym_reduce",
    "tilde_p",
    "tilde_x",
]

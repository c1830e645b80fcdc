"""Exact verification of the mod ``p^4`` congruences for

    S_m = sum_{k=0}^{(p-1)/2} (-1)^k (4k+1)^m ((1/2)_k/k!)^3      (case 3)
    S_m = sum_{k=0}^{(p-1)/2}        (4k+1)^m ((1/2)_k/k!)^4      (case 4)

Sums are formed as exact rationals and reduced modulo ``p^4`` only at the end.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .hyperseries import euler_numbers, partial_sum, stream
from .polycore import Poly
from .symred import HALF3_ALT, HALF4, HypothesisViolation, half4_reduce, integral_reduce_alt


class NotPIntegral(ArithmeticError):
    pass


def residue(v, p: int, e: int) -> int:
    """``v mod p^e`` for a rational ``v`` whose denominator is prime to ``p``."""
    v = Fraction(v)
    mod = p ** e
    if v.denominator % p == 0:
        raise NotPIntegral(f"{p} divides the denominator of {v}")
    return v.numerator * pow(v.denominator, -1, mod) % mod


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


@dataclass(frozen=True)
class CongruenceReport:
    theorem: str
    m: int
    p: int
    modulus: int
    lhs_residue: int
    rhs_residue: int
    a_m: int
    c_m: Optional[int]
    mu: int
    passed: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


FOUR_K_PLUS_1 = Poly([1, 4])


def _check_m(m: int):
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be a positive odd integer")


def s_m(spec, m: int, p: int) -> Fraction:
    return partial_sum(spec, FOUR_K_PLUS_1 ** m, (p - 1) // 2)


def case3_data(m: int) -> tuple[int, Poly]:
    """``(a_m, q_m)`` with ``(4k+1)^m t - a_m (4k+1) t = Delta(32 k^3 q_m(4k) t)``."""
    red = integral_reduce_alt(HALF3_ALT, m)
    assert set(red.coeffs_a) <= {1} and red.C == 1 and red.delta_scale == 32
    return red.coeffs_a.get(1, 0), red.x


def check_case3(m: int, p: int) -> CongruenceReport:
    _check_m(m)
    if p < 5 or not is_prime(p):
        raise ValueError("p must be a prime >= 5")
    a_m, q = case3_data(m)
    c_m = -4 * q(2)
    assert c_m.denominator == 1
    c_m = c_m.numerator
    mod = p ** 4
    E = euler_numbers(p - 3)[p - 3]
    sign = (-1) ** ((p - 1) // 2)
    rhs = (a_m * (p * sign + p ** 3 * E) + p ** 3 * c_m) % mod
    lhs = residue(s_m(HALF3_ALT, m, p), p, 4)
    return CongruenceReport("Case3", m, p, mod, lhs, rhs, a_m, c_m, (m - 1) // 2, lhs == rhs)


def case4_data(m: int) -> tuple[int, int, Poly]:
    """``(c, C', x)`` with ``C'(4k+1)^m t = c (4k+1) t + Delta(32 k^4 x(4k) t)``."""
    red = half4_reduce(m)
    assert set(red.coeffs_a) <= {1} and red.delta_scale == 32
    return red.coeffs_a.get(1, 0), red.C, red.x


def check_case4(m: int, p: int) -> CongruenceReport:
    _check_m(m)
    mu = (m - 1) // 2
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if p <= mu:
        raise HypothesisViolation(f"need p > (m-1)/2 = {mu}")
    c, C, _ = case4_data(m)
    if C % p == 0:
        raise NotPIntegral(f"{p} divides C' = {C}")
    mod = p ** 4
    rhs = residue(Fraction(c, C) * p, p, 4)
    lhs = residue(s_m(HALF4, m, p), p, 4)
    a_m = Fraction(c * math.factorial(mu), C)
    assert a_m.denominator == 1
    return CongruenceReport("Case4", m, p, mod, lhs, rhs, a_m.numerator, None, mu, lhs == rhs)


def boundary_identity(case: int, m: int, p: int) -> bool:
    """Exact telescoped form ``S_m - (a/C) S_1 = boundary term at (p+1)/2``."""
    omega = (p + 1) // 2
    if case == 3:
        spec = HALF3_ALT
        a, q = case3_data(m)
        C = 1
        g = 32 * Fraction(omega) ** 3 * q(4 * omega)
    else:
        spec = HALF4
        a, C, q = case4_data(m)
        g = 32 * Fraction(omega) ** 4 * q(4 * omega)
    t_omega = stream(spec)[omega]
    lhs = s_m(spec, m, p) - Fraction(a, C) * s_m(spec, 1, p)
    return lhs == g * t_omega / C


def scan_integrality(m_max: int) -> list[dict]:
    """``c/C'`` from :func:`half4_reduce` for odd ``m <= m_max`` and whether it is an integer."""
    rows = []
    for m in range(1, m_max + 1, 2):
        c, C, _ = case4_data(m)
        v = Fraction(c, C)
        rows.append({"m": m, "a_m_over_factorial": v, "is_integer": v.denominator == 1})
    return rows


def _run(args):
    case, m, p = args
    return check_case3(m, p) if case == 3 else check_case4(m, p)


def sweep(
    case: int,
    m_max: int,
    p_max: int,
    workers: Optional[int] = None,
    p_min: Optional[int] = None,
) -> list[CongruenceReport]:
    """All checks for odd ``m <= m_max`` and admissible primes ``p <= p_max``, in (m, p) order.

    Admissible: ``p >= 5`` for case 3; odd ``p > (m-1)/2`` for case 4.
    ``p_min`` raises the lower end further.
    """
    jobs = []
    for m in range(1, m_max + 1, 2):
        lo = 5 if case == 3 else max(3, (m - 1) // 2 + 1)
        if p_min is not None:
            lo = max(lo, p_min)
        jobs.extend((case, m, p) for p in primes_in(lo, p_max))
    if workers is None:
        workers = int(os.environ.get("HYPERRED_THREADS", "0")) or os.cpu_count() or 1
    if workers <= 1 or len(jobs) < 2:
        return [_run(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_run, jobs, chunksize=8))

"""Difference spaces ``S_{a,b}`` and polynomial reduction modulo them.

For a hypergeometric term with ``t(k+1)/t(k) = a(k)/b(k)`` and any polynomial
``x``::

    Delta(b(k-1) x(k) t_k) = (a(k) x(k+1) - b(k-1) x(k)) t_k

so the image ``a(k)x(k+1) - b(k-1)x(k)`` of every ``x`` is summable against
``t``.  :func:`reduce` rewrites ``f`` as such an image plus a remainder ``h``
of bounded degree.  :func:`oracle_reduce` reaches the same kind of answer by
brute-force linear algebra and is kept independent of :func:`reduce`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .polycore import Poly, format_rat, parse_rat, shift


class ZeroInput(ValueError):
    pass


class NoSolution(ValueError):
    pass


@dataclass(frozen=True)
class SpaceInfo:
    a: Poly
    b: Poly
    u: Poly
    d: int
    m0: Optional[Fraction]
    degenerate: bool

    def b_prev(self) -> Poly:
        """``b(k-1)``, the polynomial factor of ``g`` in ``g = b(k-1) x(k)``."""
        return shift(self.b, -1)

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "u": self.u.to_json(),
            "d": self.d,
            "m0": None if self.m0 is None else format_rat(self.m0),
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class ReductionCertificate:
    """``scale*f - h == a(k)x(k+1) - b(k-1)x(k)``."""

    h: Poly
    x: Poly
    scale: Fraction = Fraction(1)

    def to_json(self) -> dict:
        return {"h": self.h.to_json(), "x": self.x.to_json(), "scale": format_rat(self.scale)}

    @classmethod
    def from_json(cls, data: dict) -> "ReductionCertificate":
        return cls(
            Poly.from_json(data["h"]),
            Poly.from_json(data["x"]),
            parse_rat(data.get("scale", "1/1")),
        )


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    residual: Poly = field(default_factory=Poly)

    def __bool__(self):
        return self.passed


def analyze(a: Poly, b: Poly) -> SpaceInfo:
    if a.is_zero() or b.is_zero():
        raise ZeroInput("a and b must be nonzero")
    u = a - shift(b, -1)
    # d = -1 only for a == b(k-1) constant; then every polynomial is summable.
    d = max(u.degree, a.degree - 1)
    m0 = None
    degenerate = False
    if u.degree == a.degree - 1:
        m0 = -u.lc() / a.lc()
        degenerate = m0.denominator == 1 and m0 >= 0
    elif a.degree >= 1 and u.degree < a.degree - 1:
        # The k^(deg a - 1) coefficient of u vanishes, so m0 = 0: x = 1 maps
        # to u, of degree below d, exactly as in a degenerate pair.
        m0 = Fraction(0)
        degenerate = True
    return SpaceInfo(a, b, u, d, m0, degenerate)


def image_of(info: SpaceInfo, x: Poly) -> Poly:
    """``a(k) x(k+1) - b(k-1) x(k)``."""
    return info.a * shift(x, 1) - info.b_prev() * x


def _p_s(info: SpaceInfo, s: int) -> Poly:
    return info.a * (Poly([1, 1]) ** s) - info.b_prev() * Poly.monomial(s)


def reduce(info: SpaceInfo, f: Poly) -> ReductionCertificate:
    """Reduce ``f`` modulo ``S_{a,b}``.

    Non-degenerate pairs leave ``deg h < d``.  For a degenerate pair the
    monomial ``k**(d+m0)`` cannot be eliminated; its coefficient is moved
    into ``h`` and the reduction carries on below it.
    """
    p = f
    x = Poly()
    h_extra = Poly()
    blocked = info.d + int(info.m0) if info.degenerate else None
    cache: dict[int, Poly] = {}
    while not p.is_zero() and p.degree >= info.d:
        m = p.degree
        if m == blocked:
            lead = Poly.monomial(m, p.lc())
            h_extra = h_extra + lead
            p = p - lead
            continue
        s = m - info.d
        if s not in cache:
            cache[s] = _p_s(info, s)
        ps = cache[s]
        if ps.degree != m:
            raise AssertionError(f"p_{s} has degree {ps.degree}, expected {m}")
        c = p.lc() / ps.lc()
        p = p - ps * c
        x = x + Poly.monomial(s, c)
    return ReductionCertificate(p + h_extra, x, Fraction(1))


def verify_certificate(info: SpaceInfo, f: Poly, cert: ReductionCertificate) -> VerificationReport:
    residual = f * cert.scale - cert.h - image_of(info, cert.x)
    return VerificationReport(residual.is_zero(), residual)


def spanning_support(info: SpaceInfo) -> set[int]:
    """Exponents of the monomials that span the quotient ``K[k]/S_{a,b}``."""
    support = set(range(max(info.d, 0)))
    if info.degenerate:
        support.add(info.d + int(info.m0))
    return support


# -- independent oracle ------------------------------------------------------


def solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """One solution of ``rows @ z == rhs`` over Q, or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    n_cols = len(rows[0]) if rows else 0
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n_cols):
        piv = next((i for i in range(row, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for i in range(len(aug)):
            if i != row and aug[i][col] != 0:
                fac = aug[i][col]
                aug[i] = [vi - fac * vr for vi, vr in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == len(aug):
            break
    for i in range(row, len(aug)):
        if aug[i][-1] != 0:
            return None
    z = [Fraction(0)] * n_cols
    for i, col in enumerate(pivots):
        z[col] = aug[i][-1]
    return z


def _oracle_solve(info, f, support, x_bound):
    support = sorted(support)
    columns = []
    for j in range(x_bound + 1):
        # image of k^j written out directly from the definition
        xj = Poly.monomial(j)
        columns.append(info.a * shift(xj, 1) - shift(info.b, -1) * xj)
    for i in support:
        columns.append(Poly.monomial(i))
    n_rows = max([f.degree if not f.is_zero() else -1] + [c.degree for c in columns if not c.is_zero()]) + 1
    if n_rows <= 0:
        return ReductionCertificate(Poly(), Poly())
    rows = [[col.coeff(i) for col in columns] for i in range(n_rows)]
    rhs = [f.coeff(i) for i in range(n_rows)]
    z = solve_linear(rows, rhs)
    if z is None:
        return None
    x = Poly(z[: x_bound + 1])
    h = sum((Poly.monomial(i, c) for i, c in zip(support, z[x_bound + 1 :])), Poly())
    return ReductionCertificate(h, x)


def oracle_reduce(
    info: SpaceInfo,
    f: Poly,
    target_support: Iterable[int],
    x_bound: Optional[int] = None,
) -> ReductionCertificate:
    """Solve ``f = image_of(x) + h`` with ``h`` supported on ``target_support``.

    The default bound is ``deg x <= deg f + 1``; for a degenerate pair an
    infeasible system is retried once with the bound raised by ``m0``.
    Raises :class:`NoSolution` if no certificate exists within the bound.
    """
    support = set(target_support)
    if x_bound is None:
        x_bound = max(f.degree, 0) + 1 if not f.is_zero() else 0
    cert = _oracle_solve(info, f, support, x_bound)
    if cert is None and info.degenerate:
        cert = _oracle_solve(info, f, support, x_bound + int(info.m0))
    if cert is None:
        raise NoSolution(f"no certificate with deg x <= {x_bound} and support {sorted(support)}")
    return cert


def in_difference_space(info: SpaceInfo, g: Poly) -> bool:
    try:
        oracle_reduce(info, g, ())
    except NoSolution:
        return False
    return True


def telescoping_check(info: SpaceInfo, f: Poly, cert: ReductionCertificate, terms: list) -> bool:
    """Check ``sum_{k<N} (scale*f - h)(k) t_k == g(N) t_N - g(0) t_0`` with ``N = len(terms) - 1``.

    ``terms[k]`` must hold ``t_k`` for ``k = 0..N``.
    """
    n = len(terms) - 1
    lhs = sum(((f * cert.scale - cert.h)(k) * terms[k] for k in range(n)), Fraction(0))
    g = info.b_prev() * cert.x
    return lhs == g(n) * terms[n] - g(0) * terms[0]


def term_values(a: Poly, b: Poly, n: int, t0: Fraction = Fraction(1)) -> list[Fraction]:
    """``t_0..t_n`` from the ratio ``a(k)/b(k)``; ``b`` must not vanish on ``0..n-1``."""
    out = [Fraction(t0)]
    for k in range(n):
        bk = b(k)
        if bk == 0:
            raise ZeroDivisionError(f"b({k}) = 0")
        out.append(out[-1] * a(k) / bk)
    return out


__all__ = [
    "NoSolution",
    "ReductionCertificate",
    "SpaceInfo",
    "VerificationReport",
    "ZeroInput",
    "analyze",
    "image_of",
    "in_difference_space",
    "oracle_reduce",
    "reduce",
    "solve_linear",
    "spanning_support",
    "telescoping_check",
    "term_values",
    "verify_certificate",
]

"""
Reducing a polynomial against a hypergeometric term
===================================================

For ``t_k = (-n)_k / k! = (-1)^k binom(n, k)`` the ratio is
``t(k+1)/t(k) = (k-n)/(k+1)``.  Every polynomial ``f`` splits as a
summable part plus a multiple of ``k^n``.
"""

from fractions import Fraction
import math

from hyperred import Poly, analyze, reduce, verify_certificate
from hyperred.diffspace import telescoping_check, term_values

n = 4
a, b = Poly([-n, 1]), Poly([1, 1])
info = analyze(a, b)
print("u =", info.u, " d =", info.d, " m0 =", info.m0, " degenerate:", info.degenerate)

# an arbitrary polynomial of degree n + 2
f = Poly([3, -1, 0, 2, 5, 0, 1])
cert = reduce(info, f)
print("h =", cert.h)
print("x =", cert.x)
print("certificate holds:", verify_certificate(info, f, cert).passed)

# the sum over the full support collapses onto the k^n coefficient
c = cert.h.coeff(n)
lhs = sum((-1) ** k * math.comb(n, k) * f(k) for k in range(n + 1))
print("alternating binomial sum:", lhs, "=", c * (-1) ** n * math.factorial(n))

# and the finite telescoping identity holds for any cut-off
print("telescopes up to N=3:", telescoping_check(info, f, cert, term_values(a, b, 3)))

# a non-degenerate pair: the alternating cube of (1/2)_k/k!
half = Fraction(1, 2)
info3 = analyze(-(Poly([half, 1]) ** 3), Poly([1, 1]) ** 3)
cert3 = reduce(info3, Poly([1, 4]) ** 3)
print("(4k+1)^3 reduces to", cert3.h)

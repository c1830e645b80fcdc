"""
Integer certificates for (4k+1)^m
=================================

Working in ``k' = 4k + 1`` keeps every step of the reduction over the
integers.  The alternating cube needs no scale; the quartic needs the
scale ``((m-1)/2)!``.
"""

from fractions import Fraction

from hyperred import HALF3_ALT, half4_reduce, integral_reduce_alt

print("alternating ((1/2)_k/k!)^3:  (4k+1)^m = a_m (4k+1) + summable")
for m in range(1, 16, 2):
    red = integral_reduce_alt(HALF3_ALT, m)
    print(f"  m={m:2d}  a_m={red.coeffs_a.get(1, 0):>14}  verified={red.verify()}")

print()
print("((1/2)_k/k!)^4:  C'(4k+1)^m = c (4k+1) + summable")
for m in range(1, 16, 2):
    red = half4_reduce(m)
    c = red.coeffs_a.get(1, 0)
    print(f"  m={m:2d}  C'={red.C:>6}  c/C'={Fraction(c, red.C)!s:>12}  verified={red.verify()}")

red = half4_reduce(11)
print()
print("m = 11 certificate polynomial x (applied as x(4k)):", red.x.int_coeffs())

"""
Checking the mod p^4 congruences
================================

The partial sums are computed exactly and reduced modulo ``p^4`` at the end.
"""

from hyperred.congruence import check_case3, check_case4, scan_integrality, sweep

print(check_case3(7, 11))
print(check_case4(11, 13))

for case, p_min in ((3, None), (4, 5)):
    reports = sweep(case, 15, 97, workers=1, p_min=p_min)
    print(f"case {case}: {sum(r.passed for r in reports)}/{len(reports)} pass")

# p = 3 sits inside p > (m-1)/2 for m = 1, 3, but S_1 = 21/16 is not 3 mod 81
for m in (1, 3, 5):
    r = check_case4(m, 3)
    print(f"case 4, m={m}, p=3: lhs={r.lhs_residue} rhs={r.rhs_residue} pass={r.passed}")

print()
for row in scan_integrality(25):
    print(f"m={row['m']:2d}  a_m/mu! = {row['a_m_over_factorial']}")

"""The Bannai-Ito relations among the C_A, checked exactly."""
from fractions import Fraction

from ospbi.bannai_ito import bi_residual, verify_bi
from ospbi.casimir import subset

for n in (2, 3, 4):
    report = verify_bi(n)
    print(f"n={n}: {sum(c.passed for c in report.checks)}/{len(report)} pairs hold")

A, B = subset(3, 1, 2), subset(3, 2, 3)
bad = bi_residual(A, B, scale=Fraction(-1, 2))
print(f"\nWith C_A scaled by -1/2 the {A},{B} relation leaves {len(bad.residual)} terms:")
print(bad.residual)

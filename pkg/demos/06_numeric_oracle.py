"""A 3-dimensional representation as an independent check."""
from fractions import Fraction

import numpy as np

from ospbi import numeric
from ospbi.casimir import intermediate_casimir, simple_embedding_casimir, subset

np.set_printoptions(linewidth=120)

rep = numeric.load_rep()
for g in ("Fp", "Fm", "H", "P"):
    print(f"rho({g}) =")
    print(rep[g])
print(numeric.check_rep(rep).format())
print("\nrho(C) = lambda * 1 with lambda =", numeric.casimir_scalar(rep))

c13 = numeric.evaluate(intermediate_casimir(subset(3, 1, 3)), rep)
bar = numeric.evaluate(simple_embedding_casimir(subset(3, 1, 3)), rep)
print("\ncommutators with the diagonal generators (max |entry|):")
for name, m in (("C_13", c13), ("Cbar_13", bar)):
    res = numeric.matrix_centralizer_residuals(m, rep, 3)
    print(f"  {name:<8}", "  ".join(f"{g}:{v}" for g, v in res.items()))

A, B = subset(3, 1, 2), subset(3, 2, 3)
print("\nBI residual for {1,2},{2,3}:", numeric.matrix_bi_residual(A, B, rep))
print("same, wrong normalisation:", numeric.matrix_bi_residual(A, B, rep, scale=Fraction(-1, 2)))

"""Intermediate Casimirs C_A and why the naive embedding is not enough."""
from ospbi.casimir import (
    all_subsets,
    centralizer_residuals,
    explicit_casimir,
    intermediate_casimir,
    path_consistency,
    simple_embedding_casimir,
    subset,
)

spacer = "_" * 60

A = subset(3, 1, 3)
print("C_13 =", intermediate_casimir(A))
print("explicit formula agrees:", explicit_casimir(A) == intermediate_casimir(A))

print("\nCbar_13 (Delta(C) dropped on legs 1 and 3):")
print(centralizer_residuals(simple_embedding_casimir(A), 3).format())

print(spacer)
print("\nEvery C_A at n=4 commutes with the diagonal image:")
for B in all_subsets(4):
    ok = centralizer_residuals(intermediate_casimir(B), 4).ok
    print(f"  C_{B}: {len(intermediate_casimir(B))} terms, centralizing={ok}")

print(spacer)
print()
print(path_consistency(subset(4, 1, 3, 4)).format())

"""The R-matrix, its braid action and the coactions it defines."""
from ospbi import pbw
from ospbi.rmatrix import coaction, universal_R, verify_r_properties

R = universal_R(2, 1, 2)
print("R =", R)
print("R*R =", R * R)

print("\nCoactions on the generators")
for g in ["Fp", "Fm", "H", "C"]:
    x = pbw.normal_form(g)
    print(f"  hat({g}) = {coaction(x, 'hat')}    check({g}) = {coaction(x, 'check')}")

print()
print(verify_r_properties(3).format())

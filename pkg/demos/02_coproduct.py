"""Coproducts in the ordinary (unsigned) tensor product."""
from ospbi import pbw
from ospbi.tensor import coproduct, coproduct_iter, evaluate

spacer = "_" * 60

for g in pbw.Generator:
    print(f"Delta({g.name}) = {coproduct(pbw.generator(g))}")

print(spacer)
delta_c = coproduct(pbw.casimir())
print(f"\nDelta(C) has {len(delta_c)} terms:")
print(delta_c)

closed = evaluate("16*(Fm#Fp - Fp#Fm)*(P#1) + C#P + P#C - P#P")
print("\nmatches 16(Fm#Fp - Fp#Fm)(P#1) + C#P + P#C - P#P:", delta_c == closed)
wrong = evaluate("16*(Fm#Fp - Fp#Fm)*(P#1) + 8*C#P + P#C - P#P")
print("with 8*C#P instead:", delta_c == wrong)

print(spacer)
print("\nDelta^(2)(Fp) =", coproduct_iter(2, pbw.generator("Fp")))

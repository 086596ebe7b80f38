"""Rewriting words of U(osp(1|2)) into PBW normal form."""
from ospbi import pbw

spacer = "_" * 60

print("Generators in normal order: Em < Fm < H < Fp < Ep < P")
for text in ["Fp*Fm", "Fp*Fp", "P*Fp", "Ep*Em", "{Fp,Fm} - 1/2*H"]:
    print(f"  {text:<18} -> {pbw.normal_form(text)}")

print(spacer)
print("\nThe Casimir 8[Fp,Fm]P + P:")
c = pbw.casimir()
print("  C =", c)
for g in pbw.Generator:
    print(f"  [C, {g.name}] = {c.commutator(pbw.generator(g))}")

print(spacer)
print("\nDefining relations")
print(pbw.check_defining_relations().format())

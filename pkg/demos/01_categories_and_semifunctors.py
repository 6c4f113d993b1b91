"""Finite categories, semifunctors and the canonical semifunctor E^e.

A semifunctor preserves composition but may send an identity to a
non-identity idempotent.  This walk-through builds the three-element monoid
M3, the walking idempotent W and the diagonal-style semifunctor f_e.
"""

from semicat.gallery import f_e, m3, walking_idempotent
from semicat.kernel import product_category
from semicat.semifunctor import canonical_E, enumerate_semifunctors, idem_nat, idempotent_nat_transfs, is_functor

# M3 = {1, x, e} with x·x = e, and e absorbing x from the left
c = m3()
print(c, "idempotents:", c.idempotents("*"))
for g in c.hom("*", "*"):
    print("  ", " ".join(f"{g}∘{f}={c.compose(g, f)}" for f in c.hom("*", "*")))

# f_e: M3 -> M3×M3, b ↦ (e, b); the image of 1 is (e,1), an idempotent but not the identity
cc = product_category(c, c)
fe = f_e(c, cc)
print("f_e(1) =", fe("1"), "| functor?", is_functor(fe))

# W has one non-identity morphism u with u∘u = u; it does not split in W
w = walking_idempotent()
print("semifunctors W -> W:", [dict(s.mor_map) for s in enumerate_semifunctors(w, w)])

# every idempotent natural e: Id -> Id gives E^e(f) = f∘e, a functor only when e = Id
for e in idempotent_nat_transfs(w):
    ee = canonical_E(e)
    print(f"E^{e['*']}: {dict(ee.mor_map)} functor={is_functor(ee)}")
print(canonical_E(idem_nat(c, {"*": "e"})).mor_map)

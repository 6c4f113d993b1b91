"""Morphism-level predicates relative to semifunctors, and natural
semi-isomorphisms of semifunctors.

An (F_C, F'_C')-semi-isomorphism f: FC -> F'C' has a unique normalised
inverse g with g∘f = F(Id_C) and f∘g = F'(Id_C').
"""

from semicat.gallery import build, walking_idempotent
from semicat.morphprop import cc_semi_isomorphism, cc_semisplit_epi, cc_semisplit_mono, is_fc_semi_mono
from semicat.semifunctor import canonical_E, idem_nat
from semicat.transform import enumerate_seminatural, find_semi_inverse, natural_semisplit_mono_witness

w = walking_idempotent()
eu = canonical_E(idem_nat(w, {"*": "u"}))
for f in w.hom("*", "*"):
    print(f, "semi-mono:", is_fc_semi_mono(eu, "*", f),
          "semisplit-mono:", cc_semisplit_mono(eu, "*", eu, "*", f),
          "semisplit-epi:", cc_semisplit_epi(eu, "*", eu, "*", f),
          "semi-inverse:", cc_semi_isomorphism(eu, "*", eu, "*", f))

# seminatural transformations E^u -> E^u: only u survives α∘E^u(Id) = α
print("seminatural E^u -> E^u:", [dict(t.components) for t in enumerate_seminatural(eu, eu)])

# a semifunctor and its fixpoint functor are naturally semi-isomorphic
fix = build("fixpoint-W")
alpha = fix.transformations["alpha"]
print("alpha:", dict(alpha.components))
print("semi-inverse:", dict(find_semi_inverse(alpha).components))
print("semisplit-mono witness:", dict(natural_semisplit_mono_witness(alpha).components))

"""Semiadjunctions F ⊣ₛ G given by unit and counit, and the unit/counit
criteria for separability.

The semitriangular identities replace the triangle identities:
Gε∘ηG = GId and εF∘Fη = FId.
"""

from semicat.gallery import build, walking_idempotent
from semicat.semiadj import (
    char_unit_counit,
    idempotent_from_self_semiadjoint,
    promote_right_semiadjoint,
    rafael,
    self_semiadjunction,
    validate_semiadjunction,
)
from semicat.semifunctor import canonical_E, idem_nat, identity_semifunctor

w = walking_idempotent()
u = idem_nat(w, {"*": "u"})
adj = validate_semiadjunction(self_semiadjunction(u))
print(adj, "-> idempotent:", dict(idempotent_from_self_semiadjoint(adj).components))

# the forgetful υ: W♮ -> W and ι: W -> W♮ are semiadjoint both ways
forget = build("forgetful-upsilon")
ui = forget.adjunctions["upsilon -| iota (W)"]
for side in ("left", "right"):
    for mode in ("separable", "naturally-semifull", "semiseparable"):
        found = rafael(ui, side, mode)
        print(f"  rafael {side:5} {mode:18}:", None if found is None else dict(found.transformation.components))
print("unit/counit criteria:", char_unit_counit(ui)["F"])

# data satisfying only Gε∘ηG = GId can be promoted to a semiadjunction by changing F
eu = canonical_E(u)
fixed = promote_right_semiadjoint(identity_semifunctor(w), eu, {"*": "u"}, {"*": "u"})
print("promoted left adjoint:", dict(fixed.F.mor_map))

"""The coidentifier C_e: identify f and g when e∘f = e∘g.

It comes with a functor H: C -> C_e and a semifunctor L: C_e -> C with
HL = Id and LH = E^e; L is semifully faithful and L ⊣ₛ H.
"""

from semicat.coident import coidentifier, coidentifier_semiadjunction
from semicat.gallery import m3, walking_idempotent
from semicat.props import property_report
from semicat.semiadj import validate_semiadjunction
from semicat.semifunctor import idem_nat

for cat, comp in ((walking_idempotent(), "u"), (m3(), "e")):
    e = idem_nat(cat, {"*": comp})
    q, h, l = coidentifier(cat, e)
    print(cat.name, "/", comp, "->", [m.id for m in q.morphisms], "classes:", dict(q.meta["class_of"]))
    print("  L:", dict(l.mor_map), "sff:", property_report(l)["semifully-faithful"])
    validate_semiadjunction(coidentifier_semiadjunction(cat, e))
    print("  L -| H validates")

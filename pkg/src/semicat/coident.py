"""The coidentifier ``C_e`` of an idempotent natural ``e: Id -> Id``.

Morphisms ``f, g: X -> Y`` are identified when ``e_Y∘f = e_Y∘g``.  Each class
is named after its first member in morphism order, suffixed ``~``.
"""

from .kernel import FinCategory, Morphism
from .semifunctor import Semifunctor
from .semiadj import Semiadjunction

__all__ = ["coidentifier", "coidentifier_semiadjunction"]


def coidentifier(cat, e):
    """Return ``(C_e, H, L)`` with ``H: C -> C_e`` the projection and
    ``L: C_e -> C`` sending a class ``[f]: X -> Y`` to ``e_Y∘f``."""
    rep = {}
    classes = []
    for x in cat.objects:
        for y in cat.objects:
            reps = {}
            for f in cat.hom(x, y):
                key = cat.compose(e[y], f)
                if key not in reps:
                    reps[key] = f
                    classes.append(Morphism(f + "~", x, y))
                rep[f] = reps[key] + "~"
    # class of g∘f does not depend on representatives because
    # e∘g∘f = g∘e∘f; recomputing from representatives checks that
    compose = {}
    for (g, f), h in cat.compose_table.items():
        key = (rep[g], rep[f])
        if compose.setdefault(key, rep[h]) != rep[h]:
            raise AssertionError(f"composition not well defined on classes at {key}")
    identity = {x: rep[cat.id(x)] for x in cat.objects}
    name = f"{cat.name}_e" if cat.name else None
    quotient = FinCategory(cat.objects, classes, identity, compose, name=name,
                           meta={"class_of": rep})
    ident = {x: x for x in cat.objects}
    h = Semifunctor(cat, quotient, ident, rep, name="H")
    lmap = {m.id: cat.compose(e[m.dst], m.id[:-1]) for m in classes}
    l = Semifunctor(quotient, cat, ident, lmap, name="L")
    return quotient, h, l


def coidentifier_semiadjunction(cat, e):
    """``L ⊣ₛ H`` with unit the identity classes and counit ``e``."""
    quotient, h, l = coidentifier(cat, e)
    unit = {x: quotient.id(x) for x in quotient.objects}
    return Semiadjunction(l, h, unit, dict(e.components), name="L -| H")

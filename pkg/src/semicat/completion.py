"""Idempotent completion (Karoubi envelope) and the canonical maps around it.

Objects of the completion are pairs ``(X, e)`` named ``"X#e"``.  A morphism
``(X, e) -> (X', e')`` is a base morphism ``f`` with ``e'∘f∘e = f``; it is
named ``"f:X#e->X'#e'"`` so that hom-sets stay disjoint.
"""

from functools import lru_cache

from .errors import CompletionTooLarge, NotIdempotent, NotSeminatural
from .kernel import FinCategory, Morphism
from .semifunctor import Semifunctor
from .transform import Transformation, is_seminatural

__all__ = [
    "DEFAULT_CAP",
    "completed_object",
    "idempotent_completion",
    "lift",
    "base_morphism",
    "iota",
    "upsilon",
    "complete_semifunctor",
    "complete_transformation",
    "split_idempotent",
    "is_idempotent_complete",
]

DEFAULT_CAP = 5000


def completed_object(x, e):
    return f"{x}#{e}"


def _mor_name(f, a, b):
    return f"{f}:{a}->{b}"


def idempotent_completion(cat, cap=DEFAULT_CAP):
    """``C♮``.  Raises :class:`CompletionTooLarge` past ``cap`` morphisms."""
    return _completion(cat, cap)


@lru_cache(maxsize=128)
def _completion(cat, cap):
    objs = [(x, e) for x in cat.objects for e in cat.idempotents(x)]
    comp = cat.compose_table
    homs = {}
    total = 0
    for x, e in objs:
        for y, e2 in objs:
            hs = [f for f in cat.hom(x, y) if comp[(e2, comp[(f, e)])] == f]
            homs[(x, e, y, e2)] = hs
            total += len(hs)
            if total > cap:
                raise CompletionTooLarge(f"completion exceeds {cap} morphisms")
    names = {(x, e): completed_object(x, e) for x, e in objs}
    morphisms, lifts, base = [], {}, {}
    for (x, e, y, e2), hs in homs.items():
        a, b = names[(x, e)], names[(y, e2)]
        for f in hs:
            mid = _mor_name(f, a, b)
            morphisms.append(Morphism(mid, a, b))
            lifts[(f, a, b)] = mid
            base[mid] = f
    identity = {names[(x, e)]: lifts[(e, names[(x, e)], names[(x, e)])] for x, e in objs}
    compose = {}
    by_src = {}
    for m in morphisms:
        by_src.setdefault(m.src, []).append(m)
    for f in morphisms:
        for g in by_src.get(f.dst, ()):
            compose[(g.id, f.id)] = lifts[(comp[(base[g.id], base[f.id])], f.src, g.dst)]
    meta = {"base": base, "lifts": lifts, "pairs": {names[p]: p for p in objs}}
    name = f"{cat.name}♮" if cat.name else None
    return FinCategory([names[p] for p in objs], morphisms, identity, compose, name=name, meta=meta)


def lift(completed, f, a, b):
    """The morphism of ``completed`` with underlying ``f`` from ``a`` to ``b``."""
    return completed.meta["lifts"][(f, a, b)]


def base_morphism(completed, m):
    return completed.meta["base"][m]


def iota(cat, cap=DEFAULT_CAP):
    """``ι: C -> C♮``, ``X ↦ (X, Id_X)``."""
    cn = idempotent_completion(cat, cap)
    obj = {x: completed_object(x, cat.id(x)) for x in cat.objects}
    mor = {m.id: lift(cn, m.id, obj[m.src], obj[m.dst]) for m in cat.morphisms}
    return Semifunctor(cat, cn, obj, mor, name="iota")


def upsilon(cat, cap=DEFAULT_CAP):
    """The forgetful semifunctor ``υ: C♮ -> C``; ``υ(Id_(X,e)) = e``."""
    cn = idempotent_completion(cat, cap)
    obj = {a: x for a, (x, _) in cn.meta["pairs"].items()}
    return Semifunctor(cn, cat, obj, dict(cn.meta["base"]), name="upsilon")


def complete_semifunctor(fun, cap=DEFAULT_CAP):
    """``F♮(X, e) = (FX, Fe)`` and ``F♮f = Ff``; always a functor."""
    cs = idempotent_completion(fun.source, cap)
    ct = idempotent_completion(fun.target, cap)
    obj = {a: completed_object(fun.ob(x), fun(e)) for a, (x, e) in cs.meta["pairs"].items()}
    mor = {m.id: lift(ct, fun(cs.meta["base"][m.id]), obj[m.src], obj[m.dst]) for m in cs.morphisms}
    name = f"{fun.name}♮" if fun.name else None
    return Semifunctor(cs, ct, obj, mor, name=name)


def complete_transformation(alpha, cap=DEFAULT_CAP):
    """``α♮_(X,e) = α_X∘Fe``, a natural transformation ``F♮ -> F'♮``."""
    if not is_seminatural(alpha):
        raise NotSeminatural("only seminatural transformations complete")
    f, g = alpha.src, alpha.dst
    fn, gn = complete_semifunctor(f, cap), complete_semifunctor(g, cap)
    d = f.target
    ct = fn.target
    comps = {}
    for a, (x, e) in fn.source.meta["pairs"].items():
        comps[a] = lift(ct, d.compose(alpha[x], f(e)), fn.ob(a), gn.ob(a))
    return Transformation(fn, gn, comps)


def split_idempotent(cat, e, cap=DEFAULT_CAP):
    """Split ``e: X -> X`` through ``(X, e)`` in the completion.

    Returns ``(h, k)`` with ``h: (X,Id) -> (X,e)``, ``k: (X,e) -> (X,Id)``,
    ``k∘h = ι(e)`` and ``h∘k = Id_(X,e)``.
    """
    if not cat.is_idempotent(e):
        raise NotIdempotent(f"{e!r} is not idempotent")
    cn = idempotent_completion(cat, cap)
    x = cat.src(e)
    top, part = completed_object(x, cat.id(x)), completed_object(x, e)
    return lift(cn, e, top, part), lift(cn, e, part, top)


def is_idempotent_complete(cat):
    """Every idempotent ``e`` factors as ``k∘h`` with ``h∘k = Id``."""
    for x in cat.objects:
        for e in cat.idempotents(x):
            if not _splits(cat, x, e):
                return False
    return True


def _splits(cat, x, e):
    for y in cat.objects:
        for h in cat.hom(x, y):
            for k in cat.hom(y, x):
                if cat.compose(k, h) == e and cat.compose(h, k) == cat.id(y):
                    return True
    return False

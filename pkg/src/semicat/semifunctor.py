"""Semifunctors: composition-preserving maps that may send identities to
idempotents rather than identities."""

from itertools import product
from types import MappingProxyType

from .errors import (
    CompositionNotPreserved,
    EndpointMismatch,
    NotIdempotent,
    NotSeminatural,
    SourceTargetMismatch,
    UnknownObject,
)

__all__ = [
    "Semifunctor",
    "IdemNatTransf",
    "validate_semifunctor",
    "identity_semifunctor",
    "is_functor",
    "compose_semifunctors",
    "canonical_E",
    "constant_semifunctor",
    "image_identities",
    "idem_nat",
    "idempotent_nat_transfs",
    "enumerate_semifunctors",
]


class Semifunctor:
    """Object map plus a flat morphism map between two finite categories.

    Not validated on construction; see :func:`validate_semifunctor`.
    """

    def __init__(self, source, target, obj_map, mor_map, name=None):
        self.source = source
        self.target = target
        self.obj_map = MappingProxyType(dict(obj_map))
        self.mor_map = MappingProxyType(dict(mor_map))
        self.name = name

    def ob(self, x):
        return self.obj_map[x]

    def __call__(self, f):
        return self.mor_map[f]

    def id_image(self, x):
        """``F(Id_X)``."""
        return self.mor_map[self.source.id(x)]

    def __eq__(self, other):
        if not isinstance(other, Semifunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.obj_map == other.obj_map and self.mor_map == other.mor_map)

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.mor_map.items()))))

    def __repr__(self):
        return f"<Semifunctor {self.name or ''} {self.source!r} -> {self.target!r}>"


def validate_semifunctor(fun):
    src, tgt = fun.source, fun.target
    for x in src.objects:
        if x not in fun.obj_map:
            raise UnknownObject(f"object {x!r} has no image")
        if not tgt.has_object(fun.obj_map[x]):
            raise UnknownObject(f"image {fun.obj_map[x]!r} of {x!r} is not a target object")
    for m in src.morphisms:
        if m.id not in fun.mor_map:
            raise EndpointMismatch(f"morphism {m.id!r} has no image")
        fm = fun.mor_map[m.id]
        if not tgt.has_morphism(fm):
            raise EndpointMismatch(f"image {fm!r} of {m.id!r} is not a target morphism")
        if tgt.src(fm) != fun.obj_map[m.src] or tgt.dst(fm) != fun.obj_map[m.dst]:
            raise EndpointMismatch(f"image of {m.id!r} does not go F(src) -> F(dst)")
    for (g, f), h in src.compose_table.items():
        if tgt.compose_table[(fun.mor_map[g], fun.mor_map[f])] != fun.mor_map[h]:
            raise CompositionNotPreserved(f"F({g}∘{f}) != F({g})∘F({f})", g, f)
    return fun


def identity_semifunctor(cat):
    return Semifunctor(cat, cat, {x: x for x in cat.objects},
                       {m.id: m.id for m in cat.morphisms}, name="Id")


def is_functor(fun):
    tgt = fun.target
    return all(fun.id_image(x) == tgt.id(fun.ob(x)) for x in fun.source.objects)


def image_identities(fun):
    """``X -> F(Id_X)``; each value is idempotent."""
    return {x: fun.id_image(x) for x in fun.source.objects}


def compose_semifunctors(g, f):
    """``G∘F``: apply ``f`` first."""
    if f.target != g.source:
        raise SourceTargetMismatch(f"target of {f!r} is not the source of {g!r}")
    name = f"{g.name}∘{f.name}" if g.name and f.name else None
    return Semifunctor(
        f.source, g.target,
        {x: g.obj_map[y] for x, y in f.obj_map.items()},
        {m: g.mor_map[fm] for m, fm in f.mor_map.items()},
        name=name,
    )


class IdemNatTransf:
    """An idempotent natural transformation ``e: Id_C -> Id_C``.

    Build through :func:`idem_nat`, which validates.
    """

    def __init__(self, base, components):
        self.base = base
        self.components = MappingProxyType(dict(components))

    def __getitem__(self, x):
        return self.components[x]

    def is_identity(self):
        return all(self.components[x] == self.base.id(x) for x in self.base.objects)

    def __eq__(self, other):
        if not isinstance(other, IdemNatTransf):
            return NotImplemented
        return self.base == other.base and self.components == other.components

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.components.items()))))

    def __repr__(self):
        return f"IdemNatTransf({dict(self.components)})"


def idem_nat(base, components):
    """Validate and wrap an idempotent natural family on ``Id_base``."""
    comps = dict(components)
    for x in base.objects:
        if x not in comps:
            raise UnknownObject(f"no component at {x!r}")
        e = comps[x]
        if not base.has_morphism(e) or base.src(e) != x or base.dst(e) != x:
            raise EndpointMismatch(f"component {e!r} is not an endomorphism of {x!r}")
        if base.compose(e, e) != e:
            raise NotIdempotent(f"component {e!r} at {x!r} is not idempotent")
    for m in base.morphisms:
        if base.compose(m.id, comps[m.src]) != base.compose(comps[m.dst], m.id):
            raise NotSeminatural(f"naturality fails at {m.id!r}")
    extra = set(comps) - set(base.objects)
    if extra:
        raise UnknownObject(f"components for unknown objects {sorted(extra)}")
    return IdemNatTransf(base, comps)


def idempotent_nat_transfs(base):
    """Every idempotent natural ``e: Id -> Id``, identity first."""
    choices = [sorted(base.idempotents(x), key=lambda f, x=x: f != base.id(x)) for x in base.objects]
    out = []
    for combo in product(*choices):
        comps = dict(zip(base.objects, combo))
        if all(base.compose(m.id, comps[m.src]) == base.compose(comps[m.dst], m.id) for m in base.morphisms):
            out.append(IdemNatTransf(base, comps))
    return out


def canonical_E(e):
    """``Eᵉ``: identity on objects, ``f ↦ f∘e_X``."""
    base = e.base
    mor_map = {m.id: base.compose(m.id, e[m.src]) for m in base.morphisms}
    return Semifunctor(base, base, {x: x for x in base.objects}, mor_map, name="E^e")


def constant_semifunctor(z, source, target):
    """Every object to ``src(z)`` and every morphism to the idempotent ``z``."""
    if target.src(z) != target.dst(z) or target.compose(z, z) != z:
        raise NotIdempotent(f"{z!r} is not an idempotent of the target")
    d = target.src(z)
    return Semifunctor(source, target, {x: d for x in source.objects},
                       {m.id: z for m in source.morphisms}, name=f"K_{z}")


def enumerate_semifunctors(source, target, limit=None):
    """All semifunctors ``source -> target`` by backtracking over morphisms.

    Morphisms are assigned in an order that puts identities first, so
    idempotency of ``F(Id)`` prunes early.
    """
    objs = source.objects
    order = [source.id(x) for x in objs] + [m.id for m in source.morphisms if m.id not in set(source.identity.values())]
    src_of = {m.id: m.src for m in source.morphisms}
    dst_of = {m.id: m.dst for m in source.morphisms}
    # each composition law is checked once its last morphism is assigned
    pos = {m: i for i, m in enumerate(order)}
    checks = [[] for _ in order]
    for (g, f), h in source.compose_table.items():
        checks[max(pos[g], pos[f], pos[h])].append((g, f, h))
    out = []

    def extend(obj_map):
        mor_map = {}

        def rec(i):
            if limit is not None and len(out) >= limit:
                return
            if i == len(order):
                out.append(Semifunctor(source, target, obj_map, mor_map))
                return
            m = order[i]
            for cand in target.hom(obj_map[src_of[m]], obj_map[dst_of[m]]):
                mor_map[m] = cand
                if all(target.compose_table[(mor_map[g], mor_map[f])] == mor_map[h] for g, f, h in checks[i]):
                    rec(i + 1)
            mor_map.pop(m, None)

        rec(0)

    for images in product(target.objects, repeat=len(objs)):
        extend(dict(zip(objs, images)))
        if limit is not None and len(out) >= limit:
            break
    return out


"""Finite categories as explicit composition tables.

A category is stored as identifier sets plus a total table ``(g, f) -> g∘f``
defined exactly on composable pairs (``dst f == src g``).  Construction is
cheap and does not check the axioms; :func:`validate_category` does.
"""

from dataclasses import dataclass
from itertools import product
from types import MappingProxyType

from .errors import (
    DanglingEndpoint,
    EndpointMismatch,
    IdentityNotNeutral,
    MissingComposite,
    NotAMonoid,
    NotAssociative,
    UnknownObject,
    ValidationError,
)

__all__ = [
    "Morphism",
    "FinCategory",
    "FinSetObject",
    "validate_category",
    "hom_set",
    "opposite",
    "product_category",
    "monoid_category",
    "full_finset_subcategory",
    "terminal_category",
    "is_mono",
    "is_epi",
    "retraction",
    "section",
]


@dataclass(frozen=True)
class Morphism:
    id: str
    src: str
    dst: str


class FinCategory:
    """A finite category.

    ``compose[(g, f)]`` is ``g∘f``, i.e. ``f`` is applied first.  Objects and
    morphisms keep their insertion order, which fixes every iteration order
    used by the search code.  ``meta`` carries construction data (e.g. the
    underlying functions of a category of finite sets); it takes no part in
    equality or serialization.
    """

    def __init__(self, objects, morphisms, identity, compose, name=None, meta=None):
        self.objects = tuple(objects)
        self.morphisms = tuple(m if isinstance(m, Morphism) else Morphism(*m) for m in morphisms)
        self.identity = MappingProxyType(dict(identity))
        self.compose_table = MappingProxyType(dict(compose))
        self.name = name
        self.meta = MappingProxyType(dict(meta or {}))
        self._mor = {m.id: m for m in self.morphisms}
        self._obj = frozenset(self.objects)
        homs = {(x, y): [] for x in self.objects for y in self.objects}
        for m in self.morphisms:
            homs.setdefault((m.src, m.dst), []).append(m.id)
        self._homs = {k: tuple(v) for k, v in homs.items()}
        self._key = None

    # lookups

    def src(self, f):
        return self._mor[f].src

    def dst(self, f):
        return self._mor[f].dst

    def id(self, x):
        return self.identity[x]

    def hom(self, x, y):
        return self._homs.get((x, y), ())

    def has_object(self, x):
        return x in self._obj

    def has_morphism(self, f):
        return f in self._mor

    @property
    def morphism_ids(self):
        return tuple(m.id for m in self.morphisms)

    def compose(self, *fs):
        """``compose(a, b, c) == a∘b∘c``."""
        out = fs[-1]
        table = self.compose_table
        for g in reversed(fs[:-1]):
            try:
                out = table[(g, out)]
            except KeyError:
                raise EndpointMismatch(f"{g!r} and {out!r} are not composable in {self}") from None
        return out

    def composable(self, g, f):
        return self._mor[f].dst == self._mor[g].src

    def is_idempotent(self, f):
        m = self._mor[f]
        return m.src == m.dst and self.compose_table[(f, f)] == f

    def idempotents(self, x):
        return tuple(f for f in self.hom(x, x) if self.compose_table[(f, f)] == f)

    def __len__(self):
        return len(self.morphisms)

    # equality ignores the display name and meta

    def _canonical(self):
        if self._key is None:
            self._key = (
                self.objects,
                self.morphisms,
                tuple(sorted(self.identity.items())),
                frozenset(self.compose_table.items()),
            )
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def __repr__(self):
        label = self.name or "FinCategory"
        return f"<{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"


def validate_category(cat):
    """Return ``cat`` unchanged if it satisfies the category axioms, else raise."""
    seen = set()
    for x in cat.objects:
        if not isinstance(x, str) or not x:
            raise ValidationError(f"object ids must be non-empty strings, got {x!r}")
        if x in seen:
            raise ValidationError(f"duplicate object id {x!r}")
        seen.add(x)
    ids = set()
    for m in cat.morphisms:
        if not isinstance(m.id, str) or not m.id:
            raise ValidationError(f"morphism ids must be non-empty strings, got {m.id!r}")
        if m.id in ids:
            raise ValidationError(f"duplicate morphism id {m.id!r}")
        ids.add(m.id)
        if m.src not in seen or m.dst not in seen:
            raise DanglingEndpoint(f"morphism {m.id!r} has endpoint outside the object set")
    for x in cat.objects:
        if x not in cat.identity:
            raise IdentityNotNeutral(f"object {x!r} has no identity")
        i = cat.identity[x]
        if i not in ids or cat.src(i) != x or cat.dst(i) != x:
            raise IdentityNotNeutral(f"identity {i!r} of {x!r} is not an endomorphism of {x!r}")
    for x in cat.identity:
        if x not in seen:
            raise DanglingEndpoint(f"identity given for unknown object {x!r}")
    table = cat.compose_table
    for (g, f), h in table.items():
        if g not in ids or f not in ids or h not in ids:
            raise DanglingEndpoint(f"compose entry ({g!r}, {f!r}) -> {h!r} names an unknown morphism")
        if cat.dst(f) != cat.src(g):
            raise DanglingEndpoint(f"compose entry for non-composable pair ({g!r}, {f!r})")
        if cat.src(h) != cat.src(f) or cat.dst(h) != cat.dst(g):
            raise DanglingEndpoint(f"composite {h!r} of ({g!r}, {f!r}) has the wrong endpoints")
    for f in cat.morphisms:
        for g in cat.morphisms:
            if f.dst == g.src and (g.id, f.id) not in table:
                raise MissingComposite(f"no composite for ({g.id!r}, {f.id!r})")
    for m in cat.morphisms:
        if table[(cat.identity[m.dst], m.id)] != m.id or table[(m.id, cat.identity[m.src])] != m.id:
            raise IdentityNotNeutral(f"identities are not neutral for {m.id!r}")
    for x, y, z, w in product(cat.objects, repeat=4):
        for f in cat.hom(x, y):
            for g in cat.hom(y, z):
                gf = table[(g, f)]
                for h in cat.hom(z, w):
                    if table[(h, gf)] != table[(table[(h, g)], f)]:
                        raise NotAssociative(f"(h∘g)∘f != h∘(g∘f) for h={h!r}, g={g!r}, f={f!r}")
    return cat


def hom_set(cat, x, y):
    """Morphisms ``x -> y`` in insertion order."""
    for o in (x, y):
        if not cat.has_object(o):
            raise UnknownObject(f"{o!r} is not an object of {cat}")
    return cat.hom(x, y)


def opposite(cat):
    """Same ids, endpoints swapped, composition reversed."""
    morphisms = [Morphism(m.id, m.dst, m.src) for m in cat.morphisms]
    compose = {(f, g): h for (g, f), h in cat.compose_table.items()}
    name = f"{cat.name}^op" if cat.name else None
    return FinCategory(cat.objects, morphisms, cat.identity, compose, name=name)


def _pair(a, b):
    return f"({a},{b})"


def product_category(c, d):
    """Componentwise product; pairs are named ``(a,b)``."""
    objects = [_pair(x, y) for x in c.objects for y in d.objects]
    morphisms = [Morphism(_pair(f.id, g.id), _pair(f.src, g.src), _pair(f.dst, g.dst))
                 for f in c.morphisms for g in d.morphisms]
    identity = {_pair(x, y): _pair(c.identity[x], d.identity[y]) for x in c.objects for y in d.objects}
    compose = {}
    for (g1, f1), h1 in c.compose_table.items():
        for (g2, f2), h2 in d.compose_table.items():
            compose[(_pair(g1, g2), _pair(f1, f2))] = _pair(h1, h2)
    name = f"{c.name}×{d.name}" if c.name and d.name else None
    meta = {"factors": {_pair(f.id, g.id): (f.id, g.id) for f in c.morphisms for g in d.morphisms}}
    return FinCategory(objects, morphisms, identity, compose, name=name, meta=meta)


def monoid_category(table, elements=None, obj="*", name=None):
    """One-object category of a finite monoid.

    ``table[(a, b)]`` is the product ``a·b``, read as the composite ``a∘b``.
    The unit is found from the table.
    """
    if elements is None:
        elements = []
        for a, b in table:
            for m in (a, b):
                if m not in elements:
                    elements.append(m)
    elements = [str(m) for m in elements]
    tab = {(str(a), str(b)): str(c) for (a, b), c in table.items()}
    elems = set(elements)
    for a in elements:
        for b in elements:
            if (a, b) not in tab:
                raise NotAMonoid(f"product {a}·{b} missing")
            if tab[(a, b)] not in elems:
                raise NotAMonoid(f"product {a}·{b} = {tab[(a, b)]} is not an element")
    units = [u for u in elements if all(tab[(u, a)] == a == tab[(a, u)] for a in elements)]
    if not units:
        raise NotAMonoid("no two-sided unit")
    for a in elements:
        for b in elements:
            ab = tab[(a, b)]
            for c in elements:
                if tab[(ab, c)] != tab[(a, tab[(b, c)])]:
                    raise NotAMonoid(f"not associative at ({a}, {b}, {c})")
    morphisms = [Morphism(m, obj, obj) for m in elements]
    return FinCategory([obj], morphisms, {obj: units[0]}, tab, name=name)


def terminal_category(obj="*", mor="id"):
    return FinCategory([obj], [Morphism(mor, obj, obj)], {obj: mor}, {(mor, mor): mor}, name="1")


@dataclass(frozen=True)
class FinSetObject:
    """A finite set given by distinct atom labels."""

    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(a) for a in self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValidationError(f"repeated labels in {self.elements}")

    @property
    def name(self):
        return "{" + ",".join(self.elements) + "}"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _fn_id(a, b, images):
    return f"{a.name}->{b.name}[{','.join(images)}]"


def full_finset_subcategory(objs, name=None):
    """All functions between the given finite sets.

    A function ``A -> B`` is named ``A->B[b1,...]`` listing the images of the
    elements of ``A`` in order.  ``meta["functions"]`` maps each id to a dict
    and ``meta["sets"]`` maps each object id to its :class:`FinSetObject`.
    """
    objs = [o if isinstance(o, FinSetObject) else FinSetObject(tuple(o)) for o in objs]
    if len({o.name for o in objs}) != len(objs):
        raise ValidationError("objects must be distinct")
    morphisms, functions, by_graph = [], {}, {}
    for a in objs:
        for b in objs:
            for images in product(b.elements, repeat=len(a)):
                mid = _fn_id(a, b, images)
                morphisms.append(Morphism(mid, a.name, b.name))
                functions[mid] = dict(zip(a.elements, images))
                by_graph[(a.name, b.name, images)] = mid
    sets = {o.name: o for o in objs}
    identity = {o.name: by_graph[(o.name, o.name, o.elements)] for o in objs}
    compose = {}
    for f in morphisms:
        ff = functions[f.id]
        for g in morphisms:
            if g.src != f.dst:
                continue
            gg = functions[g.id]
            images = tuple(gg[ff[x]] for x in sets[f.src].elements)
            compose[(g.id, f.id)] = by_graph[(f.src, g.dst, images)]
    meta = {"functions": functions, "sets": sets, "by_graph": by_graph}
    return FinCategory([o.name for o in objs], morphisms, identity, compose, name=name, meta=meta)


def is_mono(cat, f):
    x = cat.src(f)
    for w in cat.objects:
        seen = {}
        for h in cat.hom(w, x):
            fh = cat.compose(f, h)
            if fh in seen:
                return False
            seen[fh] = h
    return True


def is_epi(cat, f):
    y = cat.dst(f)
    for w in cat.objects:
        seen = {}
        for h in cat.hom(y, w):
            hf = cat.compose(h, f)
            if hf in seen:
                return False
            seen[hf] = h
    return True


def retraction(cat, f):
    """Some ``r`` with ``r∘f = Id``, or ``None``."""
    i = cat.id(cat.src(f))
    for r in cat.hom(cat.dst(f), cat.src(f)):
        if cat.compose(r, f) == i:
            return r
    return None


def section(cat, f):
    """Some ``s`` with ``f∘s = Id``, or ``None``."""
    i = cat.id(cat.dst(f))
    for s in cat.hom(cat.dst(f), cat.src(f)):
        if cat.compose(f, s) == i:
            return s
    return None

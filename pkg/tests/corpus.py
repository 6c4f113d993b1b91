"""Shared instance lists: every gallery construction plus seeded random ones."""

import random
from functools import lru_cache

from semicat.fuzz import random_category, random_semifunctor
from semicat.gallery import build, entry_names


@lru_cache(maxsize=None)
def gallery():
    return {n: build(n) for n in entry_names()}


def semifunctors():
    return [(f"{n}:{k}", f) for n, g in gallery().items() for k, f in g.semifunctors.items()]


def adjunctions():
    return [(f"{n}:{k}", a) for n, g in gallery().items() for k, a in g.adjunctions.items()]


def transformations():
    return [(f"{n}:{k}", t) for n, g in gallery().items() for k, t in g.transformations.items()]


def categories():
    seen = {}
    for _, f in semifunctors():
        for c in (f.source, f.target):
            seen.setdefault(id(c), c)
    return list(seen.values())


def composable_pairs():
    """``(F, G)`` with ``G.source`` equal to ``F.target`` among gallery semifunctors."""
    funs = [f for _, f in semifunctors()]
    return [(f, g) for f in funs for g in funs if g.source == f.target]


def random_chain(seed, max_morphisms=6):
    """``F: C -> D`` and ``G: D -> E`` on small random categories."""
    rng = random.Random(seed)
    c, d, e = (random_category(rng, max_morphisms=max_morphisms) for _ in range(3))
    return random_semifunctor(rng, c, d), random_semifunctor(rng, d, e)


def all_semiadjunctions(f, g):
    """Every ``(η, ε)`` making ``F ⊣ₛ G``; brute force over seminatural pairs."""
    from semicat.errors import SemicatError
    from semicat.semiadj import Semiadjunction, validate_semiadjunction
    from semicat.semifunctor import compose_semifunctors, identity_semifunctor
    from semicat.transform import search_transformations

    if f.source != g.target or f.target != g.source:
        return []
    units = search_transformations(identity_semifunctor(f.source), compose_semifunctors(g, f))
    counits = search_transformations(compose_semifunctors(f, g), identity_semifunctor(f.target))
    out = []
    for u in units:
        for v in counits:
            adj = Semiadjunction(f, g, u, v)
            try:
                validate_semiadjunction(adj)
            except SemicatError:
                continue
            out.append(adj)
    return out


def random_semiadjunctions(seed, max_morphisms=5):
    """All semiadjunctions between two small random categories (often ``D = C``)."""
    from semicat.semifunctor import enumerate_semifunctors

    rng = random.Random(seed)
    c = random_category(rng, max_morphisms=max_morphisms)
    d = c if rng.random() < 0.5 else random_category(rng, max_morphisms=max_morphisms)
    fs, gs = enumerate_semifunctors(c, d), enumerate_semifunctors(d, c)
    return [a for f in fs for g in gs for a in all_semiadjunctions(f, g)]

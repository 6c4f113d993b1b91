"""Seeded generators of small random categories, semifunctors and
idempotent natural transformations.

Random categories are concrete: objects are small finite sets and the
morphisms are the closure of a few random functions under composition, so
they satisfy the axioms by construction.
"""

import random
from dataclasses import dataclass

from .kernel import FinCategory, Morphism
from .semifunctor import enumerate_semifunctors, idempotent_nat_transfs, is_functor

__all__ = ["random_category", "random_semifunctor", "random_idem_nat", "FuzzInstance", "random_instance", "instances"]


def _closure(sizes, gens, cap):
    """Close ``gens`` (``(a, b, images)``) and the identities under composition.

    Returns the list of functions or None when more than ``cap`` appear.
    """
    funcs = [(a, a, tuple(range(sizes[a]))) for a in range(len(sizes))]
    seen = set(funcs)
    for g in gens:
        if g not in seen:
            seen.add(g)
            funcs.append(g)
    changed = True
    while changed:
        changed = False
        for f in list(funcs):
            for g in list(funcs):
                if f[1] != g[0]:
                    continue
                h = (f[0], g[1], tuple(g[2][i] for i in f[2]))
                if h not in seen:
                    seen.add(h)
                    funcs.append(h)
                    changed = True
                    if len(funcs) > cap:
                        return None
    return funcs


def random_category(rng, max_objects=2, max_morphisms=6, max_set_size=3, name=None):
    """A random concrete category with at most the given numbers of objects
    and morphisms.  Retries until the closure fits."""
    while True:
        n = rng.randint(1, max_objects)
        sizes = [min(rng.choice((1, 2, 2, 3, 3)), max_set_size) for _ in range(n)]
        gens = []
        for _ in range(rng.randint(1, 3)):
            a, b = rng.randrange(n), rng.randrange(n)
            gens.append((a, b, tuple(rng.randrange(sizes[b]) for _ in range(sizes[a]))))
        funcs = _closure(sizes, gens, max_morphisms)
        if funcs is not None:
            break
    objs = "ABCDEFGH"[:n]
    ids = {}
    counter = 0
    for f in funcs:
        a, b, images = f
        if a == b and images == tuple(range(sizes[a])):
            ids[f] = f"1{objs[a]}"
        else:
            ids[f] = f"m{counter}"
            counter += 1
    morphisms = [Morphism(ids[f], objs[f[0]], objs[f[1]]) for f in funcs]
    identity = {objs[a]: f"1{objs[a]}" for a in range(n)}
    by_key = {f: ids[f] for f in funcs}
    compose = {}
    for f in funcs:
        for g in funcs:
            if f[1] == g[0]:
                compose[(ids[g], ids[f])] = by_key[(f[0], g[1], tuple(g[2][i] for i in f[2]))]
    return FinCategory(list(objs), morphisms, identity, compose, name=name)


def random_semifunctor(rng, source, target):
    """A random semifunctor ``source -> target``, a non-functor with
    probability one half when one exists.

    There is always at least one: a constant semifunctor at an identity.
    """
    pool = enumerate_semifunctors(source, target)
    proper = [f for f in pool if not is_functor(f)]
    if proper and rng.random() < 0.5:
        return rng.choice(proper)
    return rng.choice(pool)


def random_idem_nat(rng, cat):
    return rng.choice(idempotent_nat_transfs(cat))


@dataclass
class FuzzInstance:
    seed: int
    category: FinCategory
    target: FinCategory
    idem: object
    functor: object


def random_instance(seed, max_objects=2, max_morphisms=6):
    """``(C, e, F: C -> D)`` from one seed; ``D`` is ``C`` itself half of the time."""
    rng = random.Random(seed)
    c = random_category(rng, max_objects, max_morphisms, name="C")
    d = c if rng.random() < 0.5 else random_category(rng, max_objects, max_morphisms, name="D")
    return FuzzInstance(seed, c, d, random_idem_nat(rng, c), random_semifunctor(rng, c, d))


def instances(count, seed=0, **kw):
    return [random_instance(seed + i, **kw) for i in range(count)]

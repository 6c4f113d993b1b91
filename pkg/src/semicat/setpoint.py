"""Pointwise checks on finite sets for constructions that live on all of
``Set``: the square semifunctor ``A ↦ A×A`` and the semi-product
semiadjunction ``Δ ⊣ₛ ×``.

Sets are tuples of hashable elements and a function ``A -> B`` is the tuple
of images of the elements of ``A`` in order.
"""

import random
from itertools import combinations, product

from .errors import IdentityFailure

__all__ = ["sample_sets", "functions", "pointwise_set_square", "pointwise_semiproduct"]


def sample_sets(max_set_size=2):
    """All subsets of the first ``max_set_size`` atoms ``a, b, c, ...``."""
    atoms = "abcdefghijklmnopqrstuvwxyz"[:max_set_size]
    return [tuple(c) for n in range(len(atoms) + 1) for c in combinations(atoms, n)]


def functions(a, b):
    return list(product(b, repeat=len(a)))


def _apply(fn, dom, x):
    return fn[dom.index(x)]


def _compose(g, f, a, b):
    """``g∘f`` for ``f: a -> b`` given as tuples."""
    return tuple(g[b.index(y)] for y in f)


def _square(a):
    return tuple(product(a, a))


def _sq_map(f, a, b):
    """``F(f)(x, x') = (f x, f x)``."""
    return tuple((_apply(f, a, x), _apply(f, a, x)) for x, _ in _square(a))


def _identity(a):
    return tuple(a)


def _set_name(a):
    return "{" + ",".join(a) + "}"


def _maps(a, b, limit, rng):
    total = len(b) ** len(a)
    if total <= limit:
        return functions(a, b)
    return [tuple(rng.choice(b) for _ in a) for _ in range(limit)]


def _triples(hs, gs, ks, limit, rng):
    if len(hs) * len(gs) * len(ks) <= limit:
        return product(hs, gs, ks)
    if not (hs and gs and ks):
        return ()
    return [(rng.choice(hs), rng.choice(gs), rng.choice(ks)) for _ in range(limit)]


def pointwise_set_square(samples=None, max_set_size=2, limit=4096, nat_limit=4096, seed=0):
    """Check the square semifunctor and ``P_{A,B}(g) = ψ_B∘g∘Δ_A`` on samples.

    Verifies ``P(Ff) = f``, ``F(P(g)) = FId_B∘g∘FId_A`` and naturality of
    ``P`` for every function among the samples.  Hom-sets of squares larger
    than ``limit`` are sampled with a seeded generator instead, and so are
    the ``(h, g, k)`` naturality triples past ``nat_limit`` per quadruple of
    sets.  Raises :class:`IdentityFailure` on the first failing cell.
    """
    sets = samples if samples is not None else sample_sets(max_set_size)
    rng = random.Random(seed)
    homs = {(a, b): functions(a, b) for a in sets for b in sets}
    sq_homs = {(a, b): _maps(_square(a), _square(b), limit, rng) for a in sets for b in sets}
    fid = {a: _sq_map(_identity(a), a, a) for a in sets}

    def p(a, b, g):
        # g: A×A -> B×B;  ψ_B takes the first coordinate, Δ_A is the diagonal
        sa = _square(a)
        return tuple(g[sa.index((x, x))][0] for x in a)

    counts = {"separability": 0, "natural-semifullness": 0, "naturality": 0}
    for a in sets:
        for b in sets:
            for f in homs[(a, b)]:
                counts["separability"] += 1
                if p(a, b, _sq_map(f, a, b)) != f:
                    raise IdentityFailure((_set_name(a), _set_name(b), f), "P(Ff) != f")
            sa, sb = _square(a), _square(b)
            for g in sq_homs[(a, b)]:
                counts["natural-semifullness"] += 1
                framed = _compose(fid[b], _compose(g, fid[a], sa, sa), sa, sb)
                if _sq_map(p(a, b, g), a, b) != framed:
                    raise IdentityFailure((_set_name(a), _set_name(b), g), "F(P(g)) != FId∘g∘FId")
    for a in sets:
        sa = _square(a)
        for b in sets:
            sb = _square(b)
            for c in sets:
                sc = _square(c)
                for d in sets:
                    for h, g, k in _triples(homs[(a, b)], sq_homs[(b, c)], homs[(c, d)], nat_limit, rng):
                        counts["naturality"] += 1
                        gfh = _compose(g, _sq_map(h, a, b), sa, sb)
                        lhs = p(a, d, _compose(_sq_map(k, c, d), gfh, sa, sc))
                        if lhs != _compose(k, _compose(p(b, c, g), h, a, b), a, c):
                            raise IdentityFailure((_set_name(a), _set_name(d), h, g, k),
                                                  "P(Fk∘g∘Fh) != k∘P(g)∘h")
    return {"sets": [_set_name(a) for a in sets], "checks": counts}


def pointwise_semiproduct(samples=None, max_set_size=2):
    """Check ``Δ ⊣ₛ ×`` on finite sets and look for the two failure witnesses:
    a non-epic projection ``π_B: ∅×B -> B`` and a missing ``γ₂: B -> ∅``.
    """
    sets = samples if samples is not None else sample_sets(max_set_size)
    checks = 0
    for a in sets:
        for b in sets:
            ab = tuple(product(a, b))
            pa = tuple(x for x, _ in ab)
            pb = tuple(y for _, y in ab)
            # semi-product axioms
            for c in sets:
                for f in functions(c, a):
                    for g in functions(c, b):
                        pair = tuple(zip(f, g))
                        checks += 2
                        if _compose(pa, pair, c, ab) != f or _compose(pb, pair, c, ab) != g:
                            raise IdentityFailure((_set_name(a), _set_name(b), f, g), "π∘<f,g> != f, g")
                        for d in sets:
                            for h in functions(d, c):
                                checks += 1
                                fh, gh = _compose(f, h, d, c), _compose(g, h, d, c)
                                if tuple(zip(fh, gh)) != _compose(pair, h, d, c):
                                    raise IdentityFailure((_set_name(d), _set_name(c)), "<fh,gh> != <f,g>∘h")
            # ×ε_(A,B) ∘ η_(A×B) = ×(Id_A, Id_B)
            abab = tuple(product(ab, ab))
            eta = tuple((p, p) for p in ab)
            x_eps = tuple((p1[0], p2[1]) for p1, p2 in abab)
            lhs = _compose(x_eps, eta, ab, abab)
            x_id = tuple(zip(pa, pb))
            checks += 1
            if lhs != x_id:
                raise IdentityFailure((_set_name(a), _set_name(b)), "×ε∘η× != ×Id")
        # ε_(A,A) ∘ Δη_A = Δ(Id_A), componentwise
        aa = tuple(product(a, a))
        eta_a = tuple((x, x) for x in a)
        p1 = tuple(x for x, _ in aa)
        p2 = tuple(y for _, y in aa)
        checks += 1
        if _compose(p1, eta_a, a, aa) != _identity(a) or _compose(p2, eta_a, a, aa) != _identity(a):
            raise IdentityFailure((_set_name(a),), "εΔ∘Δη != ΔId")
    not_epi = None
    no_gamma = None
    empty = [s for s in sets if not s]
    if empty:
        for b in sets:
            if not b:
                continue
            # π_B: ∅×B = ∅ -> B is the empty map; any two maps out of B agree after it
            for z in sets:
                hs = functions(b, z)
                if len(hs) >= 2 and not_epi is None:
                    not_epi = {"B": _set_name(b), "Z": _set_name(z), "h": hs[0], "k": hs[1]}
            if no_gamma is None and not functions(b, ()):
                no_gamma = {"B": _set_name(b), "reason": "Hom(B, ∅) is empty"}
    return {"sets": [_set_name(a) for a in sets], "checks": checks,
            "projection_not_epi": not_epi, "gamma2_missing": no_gamma}

"""Splitting properties of morphisms out of or into the image of a
semifunctor, measured against ``F(Id_C)`` instead of an identity.

Every witness search scans a hom-set in morphism order and returns the
first hit or ``None``.
"""

from .errors import EndpointMismatch, InvariantViolation

__all__ = [
    "is_fc_semi_mono",
    "is_fc_semi_epi",
    "fc_semisplit_mono_witness",
    "fc_semisplit_epi_witness",
    "cc_semisplit_mono",
    "cc_semisplit_epi",
    "cc_semi_inverses",
    "cc_semi_isomorphism",
]


def _expect(d, f, src=None, dst=None):
    if not d.has_morphism(f):
        raise EndpointMismatch(f"{f!r} is not a morphism of {d}")
    if src is not None and d.src(f) != src:
        raise EndpointMismatch(f"{f!r} does not start at {src!r}")
    if dst is not None and d.dst(f) != dst:
        raise EndpointMismatch(f"{f!r} does not end at {dst!r}")


def is_fc_semi_mono(fun, c, f):
    """``f: FC -> D`` with ``f∘h = f∘k ⇒ FId_C∘h = FId_C∘k``."""
    d = fun.target
    fc = fun.ob(c)
    _expect(d, f, src=fc)
    e = fun.id_image(c)
    for w in d.objects:
        hs = d.hom(w, fc)
        for i, h in enumerate(hs):
            for k in hs[i + 1:]:
                if d.compose(f, h) == d.compose(f, k) and d.compose(e, h) != d.compose(e, k):
                    return False
    return True


def is_fc_semi_epi(fun, c, f):
    """``f: D -> FC`` with ``h∘f = k∘f ⇒ h∘FId_C = k∘FId_C``."""
    d = fun.target
    fc = fun.ob(c)
    _expect(d, f, dst=fc)
    e = fun.id_image(c)
    for w in d.objects:
        hs = d.hom(fc, w)
        for i, h in enumerate(hs):
            for k in hs[i + 1:]:
                if d.compose(h, f) == d.compose(k, f) and d.compose(h, e) != d.compose(k, e):
                    return False
    return True


def fc_semisplit_mono_witness(fun, c, f):
    """For ``f: FC -> D``, some ``g`` with ``g∘f = FId_C``."""
    d = fun.target
    _expect(d, f, src=fun.ob(c))
    e = fun.id_image(c)
    for g in d.hom(d.dst(f), d.src(f)):
        if d.compose(g, f) == e:
            return g
    return None


def fc_semisplit_epi_witness(fun, c, f):
    """For ``f: D -> FC``, some ``g`` with ``f∘g = FId_C``."""
    d = fun.target
    _expect(d, f, dst=fun.ob(c))
    e = fun.id_image(c)
    for g in d.hom(d.dst(f), d.src(f)):
        if d.compose(f, g) == e:
            return g
    return None


def _cc_setup(fun, c, fun2, c2, f):
    d = fun.target
    if fun2.target != d:
        raise EndpointMismatch("both semifunctors must land in the same category")
    _expect(d, f, src=fun.ob(c), dst=fun2.ob(c2))
    return d, fun.id_image(c), fun2.id_image(c2)


def cc_semisplit_mono(fun, c, fun2, c2, f):
    """For ``f: FC -> F'C'`` with ``f∘FId_C = f``, some ``g`` with
    ``g∘f = FId_C`` and ``g∘F'Id_{C'} = g``."""
    d, e, e2 = _cc_setup(fun, c, fun2, c2, f)
    if d.compose(f, e) != f:
        return None
    for g in d.hom(fun2.ob(c2), fun.ob(c)):
        if d.compose(g, f) == e and d.compose(g, e2) == g:
            return g
    return None


def cc_semisplit_epi(fun, c, fun2, c2, f):
    """For ``f: FC -> F'C'`` with ``F'Id_{C'}∘f = f``, some ``g`` with
    ``f∘g = F'Id_{C'}`` and ``FId_C∘g = g``."""
    d, e, e2 = _cc_setup(fun, c, fun2, c2, f)
    if d.compose(e2, f) != f:
        return None
    for g in d.hom(fun2.ob(c2), fun.ob(c)):
        if d.compose(f, g) == e2 and d.compose(e, g) == g:
            return g
    return None


def cc_semi_inverses(fun, c, fun2, c2, f):
    """All ``g`` with ``g∘f = FId_C``, ``f∘g = F'Id_{C'}`` and ``FId_C∘g = g``."""
    d, e, e2 = _cc_setup(fun, c, fun2, c2, f)
    if d.compose(f, e) != f:
        return []
    return [g for g in d.hom(fun2.ob(c2), fun.ob(c))
            if d.compose(g, f) == e and d.compose(f, g) == e2 and d.compose(e, g) == g]


def cc_semi_isomorphism(fun, c, fun2, c2, f):
    """The normalized semi-inverse ``g∘f∘g`` of ``f: FC -> F'C'``, or ``None``."""
    d, e, e2 = _cc_setup(fun, c, fun2, c2, f)
    if d.compose(f, e) != f:
        return None
    for g in d.hom(fun2.ob(c2), fun.ob(c)):
        if d.compose(g, f) == e and d.compose(f, g) == e2:
            inv = d.compose(g, f, g)
            others = cc_semi_inverses(fun, c, fun2, c2, f)
            if others != [inv]:
                raise InvariantViolation(f"semi-inverse of {f!r} not unique: {others}")
            return inv
    return None

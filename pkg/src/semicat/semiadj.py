"""Semiadjunctions ``F ⊣ₛ G`` presented by unit and counit.

The semitriangular identities are

    Gε∘ηG = GId        (checked at every object D of the target of F)
    εF∘Fη = FId        (checked at every object C of the source of F)
"""

from dataclasses import dataclass

from .errors import (
    EndpointMismatch,
    InvariantViolation,
    NotLeftSemiadjointData,
    NotRightSemiadjointData,
    NotSelfAdjoint,
    NotSeminatural,
    SemitriangularFailure,
    ShapeMismatch,
)
from .morphprop import cc_semi_isomorphism, fc_semisplit_epi_witness, fc_semisplit_mono_witness
from .props import PSolution, normalize_mode, property_report
from .semifunctor import (
    Semifunctor,
    canonical_E,
    compose_semifunctors,
    identity_semifunctor,
    validate_semifunctor,
)
from .kernel import is_epi, is_mono
from .transform import Transformation, is_natural, is_seminatural, search_transformations, validate_transformation

__all__ = [
    "Semiadjunction",
    "validate_semiadjunction",
    "identity_semiadjunction",
    "self_semiadjunction",
    "tau",
    "sigma",
    "compose_semiadjunctions",
    "promote_right_semiadjoint",
    "promote_left_semiadjoint",
    "right_adjoints_semiiso",
    "RafaelWitness",
    "rafael",
    "char_unit_counit",
    "idempotent_from_self_semiadjoint",
    "triple_transfer",
]


class Semiadjunction:
    """``(F, G, η, ε)`` with ``F: C -> D``, ``G: D -> C``, ``η: Id_C -> GF``
    and ``ε: FG -> Id_D``.  Plain data; :func:`validate_semiadjunction`
    checks it."""

    def __init__(self, left, right, unit, counit, name=None):
        self.F = left
        self.G = right
        self.unit = dict(unit.components) if isinstance(unit, Transformation) else dict(unit)
        self.counit = dict(counit.components) if isinstance(counit, Transformation) else dict(counit)
        self.name = name

    @property
    def C(self):
        return self.F.source

    @property
    def D(self):
        return self.F.target

    @property
    def GF(self):
        return compose_semifunctors(self.G, self.F)

    @property
    def FG(self):
        return compose_semifunctors(self.F, self.G)

    def unit_transformation(self):
        return Transformation(identity_semifunctor(self.C), self.GF, self.unit, name="eta")

    def counit_transformation(self):
        return Transformation(self.FG, identity_semifunctor(self.D), self.counit, name="epsilon")

    def __repr__(self):
        return f"<Semiadjunction {self.name or ''} {self.F.name} -| {self.G.name}>"


def _check_shapes(adj):
    f, g = adj.F, adj.G
    if f.source != g.target or f.target != g.source:
        raise ShapeMismatch("F: C -> D and G: D -> C required")
    validate_semifunctor(f)
    validate_semifunctor(g)
    for t in (adj.unit_transformation(), adj.counit_transformation()):
        validate_transformation(t)
        if not is_natural(t):
            raise NotSeminatural(f"{t.name} is not natural")


def _triangle_failures(adj):
    """Objects where each semitriangular identity fails, by side."""
    f, g, c, d = adj.F, adj.G, adj.C, adj.D
    eta, eps = adj.unit, adj.counit
    right = [y for y in d.objects
             if c.compose(g(eps[y]), eta[g.ob(y)]) != g.id_image(y)]
    left = [x for x in c.objects
            if d.compose(eps[f.ob(x)], f(eta[x])) != f.id_image(x)]
    return right, left


def validate_semiadjunction(adj):
    _check_shapes(adj)
    right, left = _triangle_failures(adj)
    if right:
        raise SemitriangularFailure("G", right[0], "Gε∘ηG != GId")
    if left:
        raise SemitriangularFailure("F", left[0], "εF∘Fη != FId")
    return adj


def identity_semiadjunction(cat):
    i = identity_semifunctor(cat)
    ids = {x: cat.id(x) for x in cat.objects}
    return Semiadjunction(i, i, ids, ids, name="Id -| Id")


def self_semiadjunction(e):
    """``Eᵉ ⊣ₛ Eᵉ`` with unit and counit ``e``."""
    ee = canonical_E(e)
    return Semiadjunction(ee, ee, e.components, e.components, name="E^e -| E^e")


def tau(adj, c, d, h):
    """``τ(h) = G(h)∘η_C`` for ``h: FC -> D``."""
    D = adj.D
    if D.src(h) != adj.F.ob(c) or D.dst(h) != d:
        raise EndpointMismatch(f"{h!r} is not FC -> D")
    return adj.C.compose(adj.G(h), adj.unit[c])


def sigma(adj, c, d, g):
    """``σ(g) = ε_D∘F(g)`` for ``g: C -> GD``."""
    C = adj.C
    if C.src(g) != c or C.dst(g) != adj.G.ob(d):
        raise EndpointMismatch(f"{g!r} is not C -> GD")
    return adj.D.compose(adj.counit[d], adj.F(g))


def compose_semiadjunctions(adj1, adj2):
    """``F'F ⊣ₛ GG'`` from ``F ⊣ₛ G`` (C, D) and ``F' ⊣ₛ G'`` (D, E).

    Unit ``Gη'F∘η``, counit ``ε'∘F'εG'``.
    """
    if adj1.D != adj2.C:
        raise ShapeMismatch("the middle categories differ")
    f, g, f2, g2 = adj1.F, adj1.G, adj2.F, adj2.G
    c, e = adj1.C, adj2.D
    unit = {x: c.compose(g(adj2.unit[f.ob(x)]), adj1.unit[x]) for x in c.objects}
    counit = {z: e.compose(adj2.counit[z], f2(adj1.counit[g2.ob(z)])) for z in e.objects}
    return Semiadjunction(compose_semifunctors(f2, f), compose_semifunctors(g, g2), unit, counit,
                          name=f"({adj2.name})∘({adj1.name})")


def promote_right_semiadjoint(f, g, unit, counit):
    """Complete right-semiadjoint data to a semiadjunction ``F' ⊣ₛ G``.

    Only ``Gε∘ηG = GId`` is required.  With ``e = εF∘Fη`` the new left
    adjoint agrees with ``F`` on objects and sends ``f`` to ``Ff∘e_X``.
    """
    adj = Semiadjunction(f, g, unit, counit)
    _check_shapes(adj)
    right, _ = _triangle_failures(adj)
    if right:
        raise NotRightSemiadjointData(f"Gε∘ηG != GId at {right[0]!r}")
    c, d = adj.C, adj.D
    e = {x: d.compose(adj.counit[f.ob(x)], f(adj.unit[x])) for x in c.objects}
    mor = {m.id: d.compose(f(m.id), e[m.src]) for m in c.morphisms}
    f2 = validate_semifunctor(Semifunctor(c, d, f.obj_map, mor, name=f"{f.name}'" if f.name else None))
    return validate_semiadjunction(Semiadjunction(f2, g, adj.unit, adj.counit))


def promote_left_semiadjoint(f, g, unit, counit):
    """Dual of :func:`promote_right_semiadjoint`: only ``εF∘Fη = FId`` is
    required, and ``G'`` sends ``k`` to ``Gk∘e_D`` with ``e = Gε∘ηG``."""
    adj = Semiadjunction(f, g, unit, counit)
    _check_shapes(adj)
    _, left = _triangle_failures(adj)
    if left:
        raise NotLeftSemiadjointData(f"εF∘Fη != FId at {left[0]!r}")
    c, d = adj.C, adj.D
    e = {y: c.compose(g(adj.counit[y]), adj.unit[g.ob(y)]) for y in d.objects}
    mor = {m.id: c.compose(g(m.id), e[m.src]) for m in d.morphisms}
    g2 = validate_semifunctor(Semifunctor(d, c, g.obj_map, mor, name=f"{g.name}'" if g.name else None))
    return validate_semiadjunction(Semiadjunction(f, g2, adj.unit, adj.counit))


def right_adjoints_semiiso(adj1, adj2):
    """For ``F ⊣ₛ G`` and ``F ⊣ₛ G'`` return ``γ = G'ε∘η'G`` and
    ``γ' = Gε'∘ηG'`` after checking they are mutually semi-inverse."""
    if adj1.F != adj2.F:
        raise ShapeMismatch("both semiadjunctions must share the left semiadjoint")
    g, g2, c, d = adj1.G, adj2.G, adj1.C, adj1.D
    gamma = Transformation(g, g2, {y: c.compose(g2(adj1.counit[y]), adj2.unit[g.ob(y)]) for y in d.objects})
    gamma2 = Transformation(g2, g, {y: c.compose(g(adj2.counit[y]), adj1.unit[g2.ob(y)]) for y in d.objects})
    for y in d.objects:
        if c.compose(gamma2[y], gamma[y]) != g.id_image(y) or c.compose(gamma[y], gamma2[y]) != g2.id_image(y):
            raise InvariantViolation(f"γ and γ' are not semi-inverse at {y!r}")
    if not (is_seminatural(gamma) and is_seminatural(gamma2)):
        raise InvariantViolation("γ or γ' is not seminatural")
    return gamma, gamma2


@dataclass
class RafaelWitness:
    """The transformation found by :func:`rafael` and the ``P`` it induces."""

    transformation: Transformation
    solution: PSolution


def _left_ok(adj, mode):
    c = adj.C
    eta, gf = adj.unit, adj.GF
    if mode == "separable":
        return lambda x, v: c.compose(v, eta[x]) == c.id(x)
    if mode == "naturally-semifull":
        return lambda x, v: c.compose(eta[x], v) == gf.id_image(x)
    return lambda x, v: c.compose(eta[x], v, eta[x]) == eta[x]


def _right_ok(adj, mode):
    d = adj.D
    eps, fg = adj.counit, adj.FG
    if mode == "separable":
        return lambda y, v: d.compose(eps[y], v) == d.id(y)
    if mode == "naturally-semifull":
        return lambda y, v: d.compose(v, eps[y]) == fg.id_image(y)
    return lambda y, v: d.compose(eps[y], v, eps[y]) == eps[y]


def rafael(adj, side, mode, threads=1):
    """Search the unit/counit witness for a property of ``F`` (left) or ``G``
    (right).

    Left: a seminatural ``ν: GF -> Id_C`` with ``ν∘η = Id`` (separable),
    ``η∘ν = GFId`` (naturally semifull) or ``η∘ν∘η = η`` (semiseparable);
    it induces ``P_{X,Y}(g) = ν_Y∘Gg∘η_X``.
    Right: a seminatural ``γ: Id_D -> FG`` with ``ε∘γ = Id``, ``γ∘ε = FGId``
    or ``ε∘γ∘ε = ε``; it induces ``P_{A,B}(k) = ε_B∘Fk∘γ_A`` for ``G``.
    Returns a :class:`RafaelWitness` or ``None``.
    """
    mode = normalize_mode(mode)
    f, g, c, d = adj.F, adj.G, adj.C, adj.D
    if side == "left":
        found = search_transformations(adj.GF, identity_semifunctor(c), accept=_left_ok(adj, mode),
                                       first=True, threads=threads)
        if not found:
            return None
        nu = found[0]
        cells = {}
        for x in c.objects:
            for y in c.objects:
                for k in d.hom(f.ob(x), f.ob(y)):
                    cells[(x, y, k)] = c.compose(nu[y], g(k), adj.unit[x])
        return RafaelWitness(nu, PSolution(f, mode, cells))
    if side == "right":
        found = search_transformations(identity_semifunctor(d), adj.FG, accept=_right_ok(adj, mode),
                                       first=True, threads=threads)
        if not found:
            return None
        gamma = found[0]
        cells = {}
        for a in d.objects:
            for b in d.objects:
                for k in c.hom(g.ob(a), g.ob(b)):
                    cells[(a, b, k)] = d.compose(adj.counit[b], f(k), gamma[a])
        return RafaelWitness(gamma, PSolution(g, mode, cells))
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def char_unit_counit(adj):
    """Per-object splitting data of ``η`` and ``ε`` and the verdicts on ``F``
    and ``G`` they imply."""
    c, d = adj.C, adj.D
    gf, fg = adj.GF, adj.FG
    idc, idd = identity_semifunctor(c), identity_semifunctor(d)
    units = {}
    for x in c.objects:
        eta = adj.unit[x]
        units[x] = {
            "mono": is_mono(c, eta),
            "semisplit-epi": fc_semisplit_epi_witness(gf, x, eta) is not None,
            "semi-iso": cc_semi_isomorphism(idc, x, gf, x, eta) is not None,
        }
    counits = {}
    for y in d.objects:
        eps = adj.counit[y]
        counits[y] = {
            "epi": is_epi(d, eps),
            "semisplit-mono": fc_semisplit_mono_witness(fg, y, eps) is not None,
            "semi-iso": cc_semi_isomorphism(fg, y, idd, y, eps) is not None,
        }
    return {
        "unit": units,
        "counit": counits,
        "F": {
            "faithful": all(u["mono"] for u in units.values()),
            "semifull": all(u["semisplit-epi"] for u in units.values()),
            "semifully-faithful": all(u["semi-iso"] for u in units.values()),
        },
        "G": {
            "faithful": all(v["epi"] for v in counits.values()),
            "semifull": all(v["semisplit-mono"] for v in counits.values()),
            "semifully-faithful": all(v["semi-iso"] for v in counits.values()),
        },
    }


def idempotent_from_self_semiadjoint(adj):
    """``e = εE∘Eη: E -> E`` for a self-semiadjunction ``E ⊣ₛ E``."""
    if adj.F != adj.G:
        raise NotSelfAdjoint("left and right semiadjoints differ")
    validate_semiadjunction(adj)
    ee, c = adj.F, adj.C
    e = Transformation(ee, ee, {x: c.compose(adj.counit[ee.ob(x)], ee(adj.unit[x])) for x in c.objects})
    if not is_seminatural(e):
        raise InvariantViolation("εE∘Eη is not seminatural")
    for x in c.objects:
        if c.compose(e[x], e[x]) != e[x]:
            raise InvariantViolation(f"εE∘Eη is not idempotent at {x!r}")
    return e


_TRIPLE_PROPS = ("semiseparable", "separable", "naturally-semifull", "semifully-faithful")


def triple_transfer(adj1, adj2):
    """For ``F ⊣ₛ G ⊣ₛ H`` check that ``F`` and ``H`` share each property."""
    if adj1.G != adj2.F:
        raise ShapeMismatch("the two semiadjunctions must share G")
    rf, rh = property_report(adj1.F), property_report(adj2.G)
    report = {p: (rf[p], rh[p]) for p in _TRIPLE_PROPS}
    for p, (a, b) in report.items():
        if a != b:
            raise AssertionError(f"{p}: F gives {a}, H gives {b}")
    return report

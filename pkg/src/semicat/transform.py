"""Transformations between parallel semifunctors and a backtracking search
for transformations subject to componentwise equations."""

from concurrent.futures import ThreadPoolExecutor
from types import MappingProxyType

from .errors import EndpointMismatch, InvariantViolation, NotSeminatural, ShapeMismatch, UnknownObject
from .semifunctor import compose_semifunctors

__all__ = [
    "Transformation",
    "validate_transformation",
    "identity_transformation",
    "image_identity_transformation",
    "is_natural",
    "is_seminatural",
    "vertical_compose",
    "whisker_left",
    "whisker_right",
    "search_transformations",
    "enumerate_seminatural",
    "find_semi_inverse",
    "semi_inverses",
    "natural_semisplit_mono_witness",
    "natural_semisplit_epi_witness",
    "natural_split_mono_witness",
    "natural_split_epi_witness",
]


class Transformation:
    """A family ``α_X: FX -> F'X`` indexed by the objects of the common source.

    ``src`` and ``dst`` are the semifunctors ``F`` and ``F'``.  Naturality is
    decided by :func:`is_natural`, never assumed.
    """

    def __init__(self, src, dst, components, name=None):
        self.src = src
        self.dst = dst
        self.components = MappingProxyType(dict(components))
        self.name = name

    def __getitem__(self, x):
        return self.components[x]

    @property
    def category(self):
        """The category the components live in."""
        return self.src.target

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and self.components == other.components

    def __hash__(self):
        return hash(tuple(sorted(self.components.items())))

    def __repr__(self):
        return f"Transformation({dict(self.components)})"


def _parallel(f, g):
    return f.source == g.source and f.target == g.target


def validate_transformation(alpha):
    f, g = alpha.src, alpha.dst
    if not _parallel(f, g):
        raise ShapeMismatch("a transformation needs parallel semifunctors")
    d = f.target
    for x in f.source.objects:
        if x not in alpha.components:
            raise UnknownObject(f"no component at {x!r}")
        a = alpha[x]
        if not d.has_morphism(a) or d.src(a) != f.ob(x) or d.dst(a) != g.ob(x):
            raise EndpointMismatch(f"component {a!r} at {x!r} is not F{x} -> F'{x}")
    return alpha


def identity_transformation(f):
    """``Id_F`` with components ``Id_{FX}``."""
    return Transformation(f, f, {x: f.target.id(f.ob(x)) for x in f.source.objects}, name="Id_F")


def image_identity_transformation(f):
    """``FId`` with components ``F(Id_X)``."""
    return Transformation(f, f, {x: f.id_image(x) for x in f.source.objects}, name="FId")


def is_natural(alpha):
    f, g, d = alpha.src, alpha.dst, alpha.category
    comp = d.compose_table
    for m in f.source.morphisms:
        if comp[(alpha[m.dst], f(m.id))] != comp[(g(m.id), alpha[m.src])]:
            return False
    return True


def is_seminatural(alpha):
    d = alpha.category
    return is_natural(alpha) and all(
        d.compose(alpha[x], alpha.src.id_image(x)) == alpha[x] for x in alpha.src.source.objects)


def vertical_compose(beta, alpha):
    """``β∘α`` for ``α: F -> G`` and ``β: G -> H``."""
    if alpha.dst != beta.src:
        raise ShapeMismatch("vertical composition needs cod α == dom β")
    d = alpha.category
    return Transformation(alpha.src, beta.dst,
                          {x: d.compose(beta[x], alpha[x]) for x in alpha.src.source.objects})


def whisker_left(h, alpha):
    """``Hα: HF -> HG``."""
    if alpha.category != h.source:
        raise ShapeMismatch("H must start where the components of α live")
    return Transformation(compose_semifunctors(h, alpha.src), compose_semifunctors(h, alpha.dst),
                          {x: h(a) for x, a in alpha.components.items()})


def whisker_right(alpha, h):
    """``αH: FH -> GH``."""
    if h.target != alpha.src.source:
        raise ShapeMismatch("H must land in the source of α")
    return Transformation(compose_semifunctors(alpha.src, h), compose_semifunctors(alpha.dst, h),
                          {x: alpha[h.ob(x)] for x in h.source.objects})


def search_transformations(f, g, accept=None, seminatural=True, first=False, threads=1):
    """Transformations ``f -> g`` whose components pass ``accept(X, a)``.

    Backtracks over objects ordered by candidate count, checking each
    naturality square as soon as both of its components are assigned.
    Returns a list (at most one element when ``first``).  Results come out
    in a fixed order whatever ``threads`` is.
    """
    if not _parallel(f, g):
        raise ShapeMismatch("a transformation needs parallel semifunctors")
    c, d = f.source, f.target
    comp = d.compose_table
    cands = {}
    for x in c.objects:
        fid = f.id_image(x)
        cs = [a for a in d.hom(f.ob(x), g.ob(x))
              if (not seminatural or comp[(a, fid)] == a) and (accept is None or accept(x, a))]
        if not cs:
            return []
        cands[x] = cs
    order = sorted(c.objects, key=lambda x: len(cands[x]))
    pos = {x: i for i, x in enumerate(order)}
    squares = [[] for _ in order]
    for m in c.morphisms:
        squares[max(pos[m.src], pos[m.dst])].append((m.src, m.dst, f(m.id), g(m.id)))

    def run(start, prefix):
        found = []
        comps = dict(prefix)

        def rec(i):
            if i == len(order):
                found.append(Transformation(f, g, comps))
                return first
            x = order[i]
            for a in cands[x]:
                comps[x] = a
                if all(comp[(comps[y], fm)] == comp[(gm, comps[s])] for s, y, fm, gm in squares[i]):
                    if rec(i + 1):
                        return True
            del comps[x]
            return False

        rec(start)
        return found

    if not order:
        return [Transformation(f, g, {})]
    if threads > 1 and len(cands[order[0]]) > 1:
        x0 = order[0]

        def branch(a):
            if not all(comp[(a, fm)] == comp[(gm, a)] for s, y, fm, gm in squares[0]):
                return []
            return run(1, {x0: a})

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(branch, cands[x0]))
        out = [t for r in results for t in r]
        return out[:1] if first else out
    return run(0, {})


def enumerate_seminatural(f, g):
    return search_transformations(f, g)


def _require_seminatural(alpha):
    validate_transformation(alpha)
    if not is_seminatural(alpha):
        raise NotSeminatural("the transformation is not seminatural")


def semi_inverses(alpha):
    """All seminatural ``β`` with ``α∘β = F'Id`` and ``β∘α = FId``."""
    _require_seminatural(alpha)
    f, g, d = alpha.src, alpha.dst, alpha.category

    def ok(x, b):
        return d.compose(b, alpha[x]) == f.id_image(x) and d.compose(alpha[x], b) == g.id_image(x)

    return search_transformations(g, f, accept=ok)


def find_semi_inverse(alpha):
    """The semi-inverse of ``α``, or ``None`` if ``α`` is not a natural
    semi-isomorphism.  Uniqueness is checked exhaustively."""
    found = semi_inverses(alpha)
    if len(found) > 1:
        raise InvariantViolation(f"{len(found)} distinct semi-inverses found")
    return found[0] if found else None


def natural_semisplit_mono_witness(alpha):
    """A seminatural ``β`` with ``β∘α = FId``, or ``None``."""
    _require_seminatural(alpha)
    f, d = alpha.src, alpha.category
    found = search_transformations(alpha.dst, f, first=True,
                                   accept=lambda x, b: d.compose(b, alpha[x]) == f.id_image(x))
    return found[0] if found else None


def natural_semisplit_epi_witness(alpha):
    """A seminatural ``β`` with ``α∘β = F'Id``, or ``None``."""
    _require_seminatural(alpha)
    g, d = alpha.dst, alpha.category
    found = search_transformations(g, alpha.src, first=True,
                                   accept=lambda x, b: d.compose(alpha[x], b) == g.id_image(x))
    return found[0] if found else None


def natural_split_mono_witness(alpha):
    """A natural ``β`` with ``β∘α = Id_F``, or ``None``."""
    f, d = alpha.src, alpha.category
    found = search_transformations(alpha.dst, f, first=True, seminatural=False,
                                   accept=lambda x, b: d.compose(b, alpha[x]) == d.id(f.ob(x)))
    return found[0] if found else None


def natural_split_epi_witness(alpha):
    """A natural ``β`` with ``α∘β = Id_{F'}``, or ``None``."""
    g, d = alpha.dst, alpha.category
    found = search_transformations(g, alpha.src, first=True, seminatural=False,
                                   accept=lambda x, b: d.compose(alpha[x], b) == d.id(g.ob(x)))
    return found[0] if found else None

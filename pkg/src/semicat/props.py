"""Faithful, full, semifull, separable, naturally semifull and semiseparable
semifunctors.

The last three ask for a natural family ``P_{X,Y}: Hom(FX,FY) -> Hom(X,Y)``
subject to a mode equation.  :func:`solve_P` finds one by constraint
propagation: every cell ``P_{X,Y}(d)`` is a variable, the mode equation
restricts its domain, and naturality

    P_{X,T}(Fl∘k∘Fh) = l∘P_{Y,Z}(k)∘h

is a functional constraint that fixes a target cell as soon as its source
cell is known.
"""

from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import HypothesisNotSatisfied, InvariantViolation, NotSemiseparableSolution
from .morphprop import fc_semisplit_epi_witness, fc_semisplit_mono_witness
from .semifunctor import idem_nat, idempotent_nat_transfs, is_functor

__all__ = [
    "MODES",
    "normalize_mode",
    "Verdict",
    "PSolution",
    "is_faithful",
    "is_full",
    "is_semifull",
    "is_semifully_faithful",
    "is_fully_faithful",
    "solve_P",
    "all_P_solutions",
    "verify_P",
    "is_separable",
    "is_naturally_semifull",
    "is_naturally_full",
    "is_semiseparable",
    "property_report",
    "associated_idempotent",
    "maschke_transfer",
]

MODES = ("separable", "naturally-semifull", "semiseparable")
_ALIASES = {
    "sep": "separable",
    "nat-semifull": "naturally-semifull",
    "naturally_semifull": "naturally-semifull",
    "semisep": "semiseparable",
}


def normalize_mode(mode):
    mode = _ALIASES.get(mode, mode)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


@dataclass
class Verdict:
    """Outcome of a property check; truthy iff the property holds."""

    holds: bool
    witness: object = None
    counterexample: object = None

    def __bool__(self):
        return self.holds


@dataclass(eq=False)
class PSolution:
    """A natural family ``P_{X,Y}(d)`` keyed by ``(X, Y, d)``."""

    functor: object
    mode: str
    assignment: MappingProxyType = field(default_factory=dict)

    def __post_init__(self):
        self.assignment = MappingProxyType(dict(self.assignment))

    def __call__(self, x, y, d):
        return self.assignment[(x, y, d)]

    def __eq__(self, other):
        if not isinstance(other, PSolution):
            return NotImplemented
        return self.functor == other.functor and self.mode == other.mode and self.assignment == other.assignment

    def __repr__(self):
        return f"PSolution({self.mode}, {len(self.assignment)} cells)"


# hom-profile checks


def _cells(fun):
    c, d = fun.source, fun.target
    for x in c.objects:
        for y in c.objects:
            for k in d.hom(fun.ob(x), fun.ob(y)):
                yield x, y, k


def is_faithful(fun):
    c = fun.source
    for x in c.objects:
        for y in c.objects:
            seen = {}
            for f in c.hom(x, y):
                ff = fun(f)
                if ff in seen:
                    return Verdict(False, counterexample={"morphisms": [seen[ff], f], "image": ff})
                seen[ff] = f
    return Verdict(True)


def is_full(fun):
    c = fun.source
    for x in c.objects:
        for y in c.objects:
            image = {fun(f) for f in c.hom(x, y)}
            for k in fun.target.hom(fun.ob(x), fun.ob(y)):
                if k not in image:
                    return Verdict(False, counterexample={"cell": [x, y, k]})
    return Verdict(True)


def is_semifull(fun):
    """Every ``f: FX -> FY`` has ``g`` with ``F(g) = FId_Y∘f∘FId_X``.

    On success the witness maps each cell ``(X, Y, f)`` to one such ``g``.
    """
    c, d = fun.source, fun.target
    witness = {}
    for x, y, k in _cells(fun):
        framed = d.compose(fun.id_image(y), k, fun.id_image(x))
        g = next((g for g in c.hom(x, y) if fun(g) == framed), None)
        if g is None:
            return Verdict(False, counterexample={"cell": [x, y, k], "framed": framed})
        witness[(x, y, k)] = g
    return Verdict(True, witness=witness)


def is_semifully_faithful(fun):
    faithful = is_faithful(fun)
    if not faithful:
        return faithful
    return is_semifull(fun)


def is_fully_faithful(fun):
    faithful = is_faithful(fun)
    if not faithful:
        return faithful
    return is_full(fun)


# the P search


def _domain(fun, mode, x, y, k):
    c, d = fun.source, fun.target
    hom = c.hom(x, y)
    if mode == "naturally-semifull":
        framed = d.compose(fun.id_image(y), k, fun.id_image(x))
        return [g for g in hom if fun(g) == framed]
    pre = [g for g in hom if fun(g) == k]
    if not pre:
        return list(hom)
    if mode == "separable":
        return pre if len(pre) == 1 else []
    return pre


class _Problem:
    def __init__(self, fun, mode):
        self.fun = fun
        self.mode = mode
        c, d = fun.source, fun.target
        self.cells = list(_cells(fun))
        self.index = {cell: i for i, cell in enumerate(self.cells)}
        self.domains = [_domain(fun, mode, *cell) for cell in self.cells]
        self.domsets = [frozenset(dom) for dom in self.domains]
        comp = d.compose_table
        # propagation edges: source cell -> (target cell, h, l)
        into = {y: [(x, h, fun(h)) for x in c.objects for h in c.hom(x, y)] for y in c.objects}
        out_of = {z: [(t, l, fun(l)) for t in c.objects for l in c.hom(z, t)] for z in c.objects}
        self.edges = []
        for y, z, k in self.cells:
            es = []
            for x, h, fh in into[y]:
                kfh = comp[(k, fh)]
                for t, l, fl in out_of[z]:
                    es.append((self.index[(x, t, comp[(fl, kfh)])], h, l))
            self.edges.append(es)

    def solutions(self, first=True):
        comp = self.fun.source.compose_table
        n = len(self.cells)
        values = [None] * n
        trail = []
        domsets, edges = self.domsets, self.edges

        def assign(i, v):
            stack = [(i, v)]
            while stack:
                i, v = stack.pop()
                cur = values[i]
                if cur is not None:
                    if cur != v:
                        return False
                    continue
                if v not in domsets[i]:
                    return False
                values[i] = v
                trail.append(i)
                for j, h, l in edges[i]:
                    stack.append((j, comp[(l, comp[(v, h)])]))
            return True

        def undo(mark):
            while len(trail) > mark:
                values[trail.pop()] = None

        if any(not dom for dom in self.domains):
            return []
        # seed: singleton domains, i.e. cells the mode equation pins down
        for i, dom in enumerate(self.domains):
            if len(dom) == 1 and not assign(i, dom[0]):
                return []
        found = []

        def rec():
            free = [i for i in range(n) if values[i] is None]
            if not free:
                found.append(dict(zip(self.cells, values)))
                return first
            i = min(free, key=lambda j: len(self.domains[j]))
            for v in self.domains[i]:
                mark = len(trail)
                if assign(i, v) and rec():
                    return True
                undo(mark)
            return False

        rec()
        return found


def solve_P(fun, mode):
    """A natural ``P`` satisfying the mode equation, or ``None``.

    The first solution in a fixed search order is returned, so repeated calls
    agree.
    """
    mode = normalize_mode(mode)
    sols = _Problem(fun, mode).solutions(first=True)
    return PSolution(fun, mode, sols[0]) if sols else None


def all_P_solutions(fun, mode):
    mode = normalize_mode(mode)
    return [PSolution(fun, mode, s) for s in _Problem(fun, mode).solutions(first=False)]


def verify_P(fun, assignment, mode):
    """Violations of naturality or of the mode equation, as a list of strings.

    Independent of the search: quantifies over ``h, k, l`` directly.
    """
    mode = normalize_mode(mode)
    c, d = fun.source, fun.target
    p = assignment.assignment if isinstance(assignment, PSolution) else assignment
    bad = []
    for x, y, k in _cells(fun):
        if (x, y, k) not in p:
            bad.append(f"missing cell {(x, y, k)}")
    if bad:
        return bad
    for x in c.objects:
        for y in c.objects:
            for h in c.hom(x, y):
                for z in c.objects:
                    for k in d.hom(fun.ob(y), fun.ob(z)):
                        pk = p[(y, z, k)]
                        for t in c.objects:
                            for l in c.hom(z, t):
                                lhs = p[(x, t, d.compose(fun(l), k, fun(h)))]
                                if lhs != c.compose(l, pk, h):
                                    bad.append(f"naturality fails for h={h}, k={k}, l={l}")
    for x in c.objects:
        for y in c.objects:
            for f in c.hom(x, y):
                if mode == "separable" and p[(x, y, fun(f))] != f:
                    bad.append(f"P(F{f}) != {f}")
                if mode == "semiseparable" and fun(p[(x, y, fun(f))]) != fun(f):
                    bad.append(f"F(P(F{f})) != F{f}")
            if mode == "naturally-semifull":
                for k in d.hom(fun.ob(x), fun.ob(y)):
                    if fun(p[(x, y, k)]) != d.compose(fun.id_image(y), k, fun.id_image(x)):
                        bad.append(f"F(P({k})) != FId∘{k}∘FId")
    return bad


def _mode_verdict(fun, mode):
    sol = solve_P(fun, mode)
    if sol is not None:
        return Verdict(True, witness=sol)
    # explain the failure with the cheapest certificate available
    if mode == "separable":
        faithful = is_faithful(fun)
        if not faithful:
            return Verdict(False, counterexample=faithful.counterexample)
    if mode == "naturally-semifull":
        semifull = is_semifull(fun)
        if not semifull:
            return Verdict(False, counterexample=semifull.counterexample)
    return Verdict(False, counterexample={"reason": "no natural P satisfies the mode equation"})


def is_separable(fun):
    return _mode_verdict(fun, "separable")


def is_naturally_semifull(fun):
    return _mode_verdict(fun, "naturally-semifull")


def is_semiseparable(fun):
    return _mode_verdict(fun, "semiseparable")


def is_naturally_full(fun):
    """For functors only: a natural ``P`` with ``F(P(f)) = f``."""
    if not is_functor(fun):
        return Verdict(False, counterexample={"reason": "not a functor"})
    return is_naturally_semifull(fun)


def property_report(fun):
    """Every semifunctor-level verdict as plain booleans."""
    faithful = bool(is_faithful(fun))
    semifull = bool(is_semifull(fun))
    return {
        "functor": is_functor(fun),
        "faithful": faithful,
        "full": bool(is_full(fun)),
        "semifull": semifull,
        "semifully-faithful": faithful and semifull,
        "separable": bool(is_separable(fun)),
        "naturally-semifull": bool(is_naturally_semifull(fun)),
        "semiseparable": bool(is_semiseparable(fun)),
    }


def _universal(fun, e):
    c = fun.source
    for x in c.objects:
        for y in c.objects:
            hom = c.hom(x, y)
            for f in hom:
                for g in hom:
                    if (fun(f) == fun(g)) != (c.compose(e[y], f) == c.compose(e[y], g)):
                        return False
    return True


def associated_idempotent(fun, p):
    """``e_X = P_{X,X}(FId_X)`` for a semiseparable solution ``P``.

    Checks idempotency, naturality, ``Fe = FId``, the universal property
    ``Ff = Fg ⇔ e_Y∘f = e_Y∘g`` and uniqueness among idempotent natural
    transformations with that universal property.
    """
    if verify_P(fun, p, "semiseparable"):
        raise NotSemiseparableSolution("P is not a natural semiseparability solution")
    c = fun.source
    comps = {x: p(x, x, fun.id_image(x)) for x in c.objects}
    e = idem_nat(c, comps)
    for x in c.objects:
        if fun(e[x]) != fun.id_image(x):
            raise InvariantViolation(f"F(e_{x}) != F(Id_{x})")
    if not _universal(fun, e):
        raise InvariantViolation("universal property Ff = Fg ⇔ e∘f = e∘g fails")
    same = [o for o in idempotent_nat_transfs(c) if _universal(fun, o)]
    if same != [e]:
        raise InvariantViolation(f"associated idempotent not unique: {same}")
    return e


def maschke_transfer(fun, p, f, side="mono"):
    """Lift a semisplitting of ``F(f)`` to a splitting of ``f: C -> C'``.

    ``side="mono"`` returns a retraction ``P_{C',C}(g)`` of ``f``, where
    ``g∘F(f) = FId_C``; ``"epi"`` returns a section ``P_{C',C}(g)`` where
    ``F(f)∘g = FId_{C'}``; ``"iso"`` requires both and returns the inverse.
    """
    if verify_P(fun, p, "separable"):
        raise HypothesisNotSatisfied("P is not a separability solution for F")
    c = fun.source
    src, dst = c.src(f), c.dst(f)
    out = {}
    if side in ("mono", "iso"):
        g = fc_semisplit_mono_witness(fun, src, fun(f))
        if g is None:
            raise HypothesisNotSatisfied(f"F({f}) is not a {src}-semisplit-mono")
        r = p(dst, src, g)
        if c.compose(r, f) != c.id(src):
            raise InvariantViolation(f"P(g)∘{f} != Id for g={g}")
        out["mono"] = r
    if side in ("epi", "iso"):
        g = fc_semisplit_epi_witness(fun, dst, fun(f))
        if g is None:
            raise HypothesisNotSatisfied(f"F({f}) is not a {dst}-semisplit-epi")
        s = p(dst, src, g)
        if c.compose(f, s) != c.id(dst):
            raise InvariantViolation(f"{f}∘P(g) != Id for g={g}")
        out["epi"] = s
    if side == "iso":
        if out["mono"] != out["epi"]:
            raise InvariantViolation("retraction and section of an iso differ")
        return out["mono"]
    if side not in ("mono", "epi"):
        raise ValueError(f"side must be mono, epi or iso, not {side!r}")
    return out[side]

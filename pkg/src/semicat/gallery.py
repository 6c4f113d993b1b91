"""Worked examples with their expected verdicts.

Each entry builds its categories, semifunctors and semiadjunctions and
lists expectations ``(property, expected, check)``.  :func:`run_all` reruns
every check; a mismatch is a failure.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .completion import idempotent_completion, iota, is_idempotent_complete, upsilon
from .coident import coidentifier, coidentifier_semiadjunction
from .errors import ExpectationFailed, UnknownEntry
from .kernel import FinSetObject, full_finset_subcategory, monoid_category, product_category, terminal_category
from .morphprop import cc_semi_isomorphism
from .props import (
    associated_idempotent,
    is_faithful,
    is_full,
    is_naturally_semifull,
    is_semifull,
    is_semifully_faithful,
    is_semiseparable,
    is_separable,
    solve_P,
    verify_P,
)
from .semiadj import Semiadjunction, compose_semiadjunctions, self_semiadjunction, validate_semiadjunction
from .semifunctor import (
    Semifunctor,
    canonical_E,
    compose_semifunctors,
    constant_semifunctor,
    identity_semifunctor,
    idem_nat,
    idempotent_nat_transfs,
    is_functor,
    validate_semifunctor,
)
from .setpoint import pointwise_semiproduct, pointwise_set_square
from .transform import Transformation, find_semi_inverse

__all__ = [
    "m3",
    "walking_idempotent",
    "z2",
    "z2xz2",
    "mat2",
    "f_e",
    "f_e11",
    "product_ring_map",
    "finset_semifunctor",
    "fixpoint_functor",
    "Expectation",
    "GalleryEntry",
    "ENTRIES",
    "entry_names",
    "build",
    "check_entry",
    "run_all",
]


# standard small categories


def m3():
    """``{1, x, e}`` with ``x·x = e``, ``x·e = x``, ``e·e = e``; commutative."""
    table = {}
    for a in "1xe":
        table[("1", a)] = table[(a, "1")] = a
    table.update({("x", "x"): "e", ("x", "e"): "x", ("e", "x"): "x", ("e", "e"): "e"})
    return monoid_category(table, elements=["1", "x", "e"], name="M3")


def walking_idempotent():
    """One object and ``{id, u}`` with ``u∘u = u``."""
    table = {("id", "id"): "id", ("id", "u"): "u", ("u", "id"): "u", ("u", "u"): "u"}
    return monoid_category(table, elements=["id", "u"], name="W")


def z2():
    """Multiplicative monoid of the field with two elements."""
    table = {(str(a), str(b)): str(a * b) for a in (1, 0) for b in (1, 0)}
    return monoid_category(table, elements=["1", "0"], name="Z2")


def z2xz2():
    """Multiplicative monoid of the product ring ``Z2×Z2``."""
    c = product_category(z2(), z2())
    c.name = "Z2xZ2"
    return c


def _mat_name(m):
    (a, b), (c, d) = m
    return f"[{a}{b};{c}{d}]"


def _mat_mul(m, n):
    return tuple(tuple(sum(m[i][k] * n[k][j] for k in range(2)) % 2 for j in range(2)) for i in range(2))


def mat2():
    """Multiplicative monoid of 2×2 matrices over ``Z2``; entries named ``[ab;cd]``."""
    mats = [((a, b), (c, d)) for a, b, c, d in product((0, 1), repeat=4)]
    mats.sort(key=lambda m: m != ((1, 0), (0, 1)))
    table = {(_mat_name(m), _mat_name(n)): _mat_name(_mat_mul(m, n)) for m in mats for n in mats}
    return monoid_category(table, elements=[_mat_name(m) for m in mats], name="Mat2")


def f_e(c=None, cc=None):
    """``f_e: M3 -> M3×M3``, ``b ↦ (e, b)``."""
    c = c or m3()
    cc = cc or product_category(c, c)
    return Semifunctor(c, cc, {"*": "(*,*)"}, {b: f"(e,{b})" for b in c.morphism_ids}, name="f_e")


def f_e11(src=None, tgt=None):
    """``Z2 -> Mat2``, ``m ↦ m·E11``."""
    src, tgt = src or z2(), tgt or mat2()
    return Semifunctor(src, tgt, {"*": "*"}, {"1": "[10;00]", "0": "[00;00]"}, name="f_E11")


def product_ring_map(c=None):
    """``Z2×Z2 -> Z2×Z2``, ``(x, y) ↦ (0, y)``, i.e. multiplication by ``z = (0,1)``."""
    c = c or z2xz2()
    mor = {}
    for m in c.morphism_ids:
        _, y = c.meta["factors"][m]
        mor[m] = f"(0,{y})"
    return Semifunctor(c, c, {x: x for x in c.objects}, mor, name="f_z")


# finite-set valued semifunctors and the fixpoint functor


def finset_semifunctor(cat, sets, maps, extra_sets=()):
    """A semifunctor ``cat -> FinSet`` from ``X ↦ labels`` and ``f ↦ {a: b}``.

    The target is the full subcategory on the image sets plus ``extra_sets``.
    """
    objs = []
    for s in list(sets.values()) + list(extra_sets):
        o = FinSetObject(tuple(s))
        if o not in objs:
            objs.append(o)
    target = full_finset_subcategory(objs, name="FinSet")
    by_graph = target.meta["by_graph"]
    obj_map = {x: FinSetObject(tuple(sets[x])).name for x in cat.objects}
    mor_map = {}
    for m in cat.morphisms:
        a, b = FinSetObject(tuple(sets[m.src])), FinSetObject(tuple(sets[m.dst]))
        images = tuple(str(maps[m.id][x]) for x in a.elements)
        mor_map[m.id] = by_graph[(a.name, b.name, images)]
    return validate_semifunctor(Semifunctor(cat, target, obj_map, mor_map, name="F"))


def fixpoint_functor(fun):
    """``F̄X = {x ∈ FX | F(Id_X)(x) = x}`` with ``α: F -> F̄`` and ``β: F̄ -> F``.

    ``fun`` must land in a category built by :func:`full_finset_subcategory`;
    the target is enlarged with the fixpoint sets.  Returns ``(F', F̄', α, β)``
    where ``F'`` is ``fun`` re-targeted at the enlarged category.
    """
    cat, tgt = fun.source, fun.target
    fns, sets = tgt.meta["functions"], tgt.meta["sets"]
    fixed = {}
    for x in cat.objects:
        fx = sets[fun.ob(x)]
        e = fns[fun.id_image(x)]
        fixed[x] = tuple(a for a in fx.elements if e[a] == a)
    labels = {x: sets[fun.ob(x)].elements for x in cat.objects}
    maps = {m.id: fns[fun(m.id)] for m in cat.morphisms}
    big = finset_semifunctor(cat, labels, maps, extra_sets=list(sets[o].elements for o in tgt.objects) + list(fixed.values()))
    target = big.target
    by_graph = target.meta["by_graph"]
    fbar_mor = {}
    for m in cat.morphisms:
        a, b = fixed[m.src], fixed[m.dst]
        fbar_mor[m.id] = by_graph[(FinSetObject(a).name, FinSetObject(b).name, tuple(maps[m.id][p] for p in a))]
    fbar = validate_semifunctor(Semifunctor(cat, target, {x: FinSetObject(fixed[x]).name for x in cat.objects},
                                            fbar_mor, name="Fbar"))
    alpha, beta = {}, {}
    for x in cat.objects:
        fx, e = labels[x], fns[fun.id_image(x)]
        nfx, nbar = FinSetObject(fx).name, FinSetObject(fixed[x]).name
        alpha[x] = by_graph[(nfx, nbar, tuple(e[p] for p in fx))]
        beta[x] = by_graph[(nbar, nfx, fixed[x])]
    return big, fbar, Transformation(big, fbar, alpha, name="alpha"), Transformation(fbar, big, beta, name="beta")


# entries


@dataclass
class Expectation:
    prop: str
    expected: object
    check: Callable[[], object]
    note: str = ""


@dataclass
class GalleryEntry:
    name: str
    description: str
    categories: dict = field(default_factory=dict)
    semifunctors: dict = field(default_factory=dict)
    adjunctions: dict = field(default_factory=dict)
    transformations: dict = field(default_factory=dict)
    expectations: list = field(default_factory=list)

    def expect(self, prop, expected, check, note=""):
        self.expectations.append(Expectation(prop, expected, check, note))


def _monoid_fe(**_):
    c = m3()
    cc = product_category(c, c)
    fe = validate_semifunctor(f_e(c, cc))
    ent = GalleryEntry("monoid-fe", "f_e: M3 -> M3×M3, b ↦ (e,b)",
                       categories={"M3": c, "M3xM3": cc}, semifunctors={"f_e": fe})
    p_second = {("*", "*", d): cc.meta["factors"][d][1] for d in cc.morphism_ids}
    ent.expect("functor", False, lambda: is_functor(fe), "f_e(1) = (e,1) is not the identity (1,1)")
    ent.expect("image of identity", "(e,1)", lambda: fe.id_image("*"))
    ent.expect("faithful", True, lambda: bool(is_faithful(fe)))
    ent.expect("separable", True, lambda: bool(is_separable(fe)))
    ent.expect("P((m,n)) = n is a separability solution", True,
               lambda: not verify_P(fe, p_second, "separable"))
    ent.expect("solver returns P((m,n)) = n", True,
               lambda: dict(solve_P(fe, "separable").assignment) == p_second)
    ent.expect("semifull", False, lambda: bool(is_semifull(fe)), "e·x·e = x differs from e")
    ent.expect("semifull counterexample frames to (x,1)", "(x,1)",
               lambda: is_semifull(fe).counterexample["framed"])
    ent.expect("naturally-semifull", False, lambda: bool(is_naturally_semifull(fe)))
    ent.expect("semiseparable", True, lambda: bool(is_semiseparable(fe)))
    return ent


def _matrix_e11(**_):
    src, tgt = z2(), mat2()
    f = validate_semifunctor(f_e11(src, tgt))
    ent = GalleryEntry("matrix-E11", "Z2 -> Mat2(Z2), m ↦ m·E11",
                       categories={"Z2": src, "Mat2": tgt}, semifunctors={"f_E11": f})
    ent.expect("Mat2 has 16 morphisms", 16, lambda: len(tgt))
    ent.expect("functor", False, lambda: is_functor(f))
    ent.expect("semifull", True, lambda: bool(is_semifull(f)), "E11·A·E11 = a11·E11")
    ent.expect("semifully-faithful", True, lambda: bool(is_semifully_faithful(f)))
    ent.expect("separable", True, lambda: bool(is_separable(f)))
    ent.expect("naturally-semifull", True, lambda: bool(is_naturally_semifull(f)))
    ent.expect("full", False, lambda: bool(is_full(f)))
    return ent


def _product_ring(**_):
    c = z2xz2()
    f = validate_semifunctor(product_ring_map(c))
    ent = GalleryEntry("product-ring-z", "Z2×Z2 -> Z2×Z2, (x,y) ↦ (0,y)",
                       categories={"Z2xZ2": c}, semifunctors={"f_z": f})
    ent.expect("naturally-semifull", True, lambda: bool(is_naturally_semifull(f)))
    ent.expect("faithful", False, lambda: bool(is_faithful(f)))
    ent.expect("separable", False, lambda: bool(is_separable(f)))
    ent.expect("semiseparable", True, lambda: bool(is_semiseparable(f)))
    return ent


def _constant(**_):
    one, c, w = terminal_category(), m3(), walking_idempotent()
    fe = validate_semifunctor(constant_semifunctor("e", one, c))
    k = validate_semifunctor(constant_semifunctor("u", c, w))
    ent = GalleryEntry("constant-Fe", "F^e: 1 -> M3 picking e, and K: M3 -> W collapsing onto u",
                       categories={"1": one, "M3": c, "W": w}, semifunctors={"F^e": fe, "K": k})
    ent.expect("F^e(Id_1)", "e", lambda: fe.id_image("*"))
    ent.expect("F^e separable", True, lambda: bool(is_separable(fe)))
    ent.expect("F^e semifull", False, lambda: bool(is_semifull(fe)), "e∘x∘e = x differs from e")
    ent.expect("F^e semifull counterexample frames to x", "x",
               lambda: is_semifull(fe).counterexample["framed"])
    ent.expect("F^e naturally-semifull", False, lambda: bool(is_naturally_semifull(fe)))
    ent.expect("K faithful", False, lambda: bool(is_faithful(k)))
    ent.expect("K full", False, lambda: bool(is_full(k)))
    return ent


def _ee(name, cat, **_):
    ent = GalleryEntry(name, f"E^e on {cat.name} for every idempotent natural e", categories={cat.name: cat})
    for e in idempotent_nat_transfs(cat):
        tag = ",".join(e.components.values())
        ee = validate_semifunctor(canonical_E(e))
        adj = validate_semiadjunction(self_semiadjunction(e))
        ent.semifunctors[f"E^{tag}"] = ee
        ent.adjunctions[f"E^{tag} -| E^{tag}"] = adj
        ent.expect(f"E^{tag} naturally-semifull", True, lambda ee=ee: bool(is_naturally_semifull(ee)))
        ent.expect(f"E^{tag} separable", e.is_identity(), lambda ee=ee: bool(is_separable(ee)),
                   "separable exactly when e is the identity")
        ent.expect(f"E^{tag} functor", e.is_identity(), lambda ee=ee: is_functor(ee))
        ent.expect(f"E^{tag} associated idempotent", dict(e.components),
                   lambda ee=ee: dict(associated_idempotent(ee, solve_P(ee, "semiseparable")).components))
    return ent


def _ee_w(**kw):
    return _ee("Ee-on-W", walking_idempotent(), **kw)


def _ee_m3(**kw):
    return _ee("Ee-on-M3", m3(), **kw)


def _forgetful(**_):
    ent = GalleryEntry("forgetful-upsilon", "υ: C♮ -> C and ι: C -> C♮ on W and M3")
    for cat in (walking_idempotent(), m3()):
        n = cat.name
        cn = idempotent_completion(cat)
        up, io = validate_semifunctor(upsilon(cat)), validate_semifunctor(iota(cat))
        ent.categories.update({n: cat, f"{n}♮": cn})
        ent.semifunctors.update({f"upsilon_{n}": up, f"iota_{n}": io})
        # υ ⊣ ι: unit (C,c) -> (C,Id) given by c, counit Id
        unit = {a: f"{x_e[1]}:{a}->{io.ob(x_e[0])}" for a, x_e in cn.meta["pairs"].items()}
        counit = {x: cat.id(x) for x in cat.objects}
        ui = Semiadjunction(up, io, unit, counit, name=f"upsilon -| iota ({n})")
        # ι ⊣ υ: unit Id, counit (C,Id) -> (C,c) given by c
        unit2 = {x: cat.id(x) for x in cat.objects}
        counit2 = {a: f"{x_e[1]}:{io.ob(x_e[0])}->{a}" for a, x_e in cn.meta["pairs"].items()}
        iu = Semiadjunction(io, up, unit2, counit2, name=f"iota -| upsilon ({n})")
        ent.adjunctions[ui.name] = ui
        ent.adjunctions[iu.name] = iu
        ent.expect(f"υ_{n} semifully-faithful", True, lambda up=up: bool(is_semifully_faithful(up)))
        ent.expect(f"υ_{n} naturally-semifull", True, lambda up=up: bool(is_naturally_semifull(up)))
        ent.expect(f"υ_{n} separable", True, lambda up=up: bool(is_separable(up)))
        ent.expect(f"υ_{n} functor", False, lambda up=up: is_functor(up))
        ent.expect(f"ι_{n} fully faithful", True, lambda io=io: bool(is_faithful(io)) and bool(is_full(io)))
        ent.expect(f"υ_{n}∘ι_{n} = Id", True, lambda up=up, io=io, cat=cat:
                   compose_semifunctors(up, io) == identity_semifunctor(cat))
        ent.expect(f"υ_{n} -| ι_{n} validates", True, lambda a=ui: validate_semiadjunction(a) is a)
        ent.expect(f"ι_{n} -| υ_{n} validates", True, lambda a=iu: validate_semiadjunction(a) is a)
        ent.expect(f"{n}♮ idempotent complete", True, lambda cn=cn: is_idempotent_complete(cn))
    w = walking_idempotent()
    ent.expect("W idempotent complete", False, lambda: is_idempotent_complete(w))
    ent.expect("W♮ objects", ["*#id", "*#u"], lambda: list(idempotent_completion(w).objects))
    # FEᵉ ⊣ EᵉG from Eᵘ ⊣ Eᵘ followed by ι ⊣ υ on W
    e = idem_nat(w, {"*": "u"})
    iu_w = ent.adjunctions["iota -| upsilon (W)"]
    comp = compose_semiadjunctions(self_semiadjunction(e), iu_w)
    comp.name = "iota E^u -| E^u upsilon (W)"
    ent.adjunctions[comp.name] = comp
    ent.semifunctors["iota E^u"] = comp.F
    ent.semifunctors["E^u upsilon"] = comp.G
    ent.expect("ι E^u -| E^u υ validates", True, lambda: validate_semiadjunction(comp) is comp)
    ent.expect("ι E^u separable", False, lambda: bool(is_separable(comp.F)), "e is not the identity")
    return ent


def _coident(**_):
    ent = GalleryEntry("coidentifier-LH", "C_e, H: C -> C_e and L: C_e -> C on (W, u) and (M3, e)")
    for cat, comps, size in ((walking_idempotent(), {"*": "u"}, 1), (m3(), {"*": "e"}, 2)):
        n = cat.name
        e = idem_nat(cat, comps)
        q, h, l = coidentifier(cat, e)
        adj = coidentifier_semiadjunction(cat, e)
        ent.categories.update({n: cat, f"{n}_e": q})
        ent.semifunctors.update({f"H_{n}": h, f"L_{n}": l})
        ent.adjunctions[f"L -| H ({n})"] = adj
        ent.expect(f"{n}_e morphisms", size, lambda q=q: len(q))
        ent.expect(f"H_{n} functor", True, lambda h=h: is_functor(validate_semifunctor(h)))
        ent.expect(f"H_{n}∘L_{n} = Id", True, lambda h=h, l=l, q=q:
                   compose_semifunctors(h, l) == identity_semifunctor(q))
        ent.expect(f"L_{n}∘H_{n} = E^e", True, lambda h=h, l=l, e=e:
                   compose_semifunctors(l, h) == canonical_E(e))
        ent.expect(f"L_{n} separable", True, lambda l=l: bool(is_separable(l)))
        ent.expect(f"L_{n} naturally-semifull", True, lambda l=l: bool(is_naturally_semifull(l)))
        ent.expect(f"L_{n} semifully-faithful", True, lambda l=l: bool(is_semifully_faithful(l)))
        ent.expect(f"L -| H ({n}) validates", True, lambda a=adj: validate_semiadjunction(a) is a)
    return ent


def _sfe(**_):
    ent = GalleryEntry("SFe-composite", "S = F∘E^e for (f_e, M3, e) and (f_E11, Z2, 0)")
    c = m3()
    s1 = compose_semifunctors(f_e(c), canonical_E(idem_nat(c, {"*": "e"})))
    z = z2()
    s2 = compose_semifunctors(f_e11(z), canonical_E(idem_nat(z, {"*": "0"})))
    ent.semifunctors.update({"S(f_e, e)": s1, "S(f_E11, 0)": s2})
    ent.expect("S(f_e, e) maps b to (e, b·e)", True, lambda: all(
        s1(b) == f"(e,{c.compose(b, 'e')})" for b in c.morphism_ids))
    for name, s in ent.semifunctors.items():
        ent.expect(f"{name} faithful", False, lambda s=s: bool(is_faithful(s)))
        ent.expect(f"{name} separable", False, lambda s=s: bool(is_separable(s)))
    ent.expect("S(f_E11, 0) naturally-semifull", True, lambda: bool(is_naturally_semifull(s2)),
               "f_E11 is naturally semifull")
    return ent


def _fixpoint(**_):
    w = walking_idempotent()
    f = finset_semifunctor(w, {"*": ["a", "b"]}, {"id": {"a": "a", "b": "a"}, "u": {"a": "a", "b": "a"}})
    big, fbar, alpha, beta = fixpoint_functor(f)
    ent = GalleryEntry("fixpoint-W", "F: W -> FinSet with F(*) = {a,b} and F(id) = F(u) = const a",
                       categories={"W": w, "FinSet": big.target},
                       semifunctors={"F": big, "Fbar": fbar},
                       transformations={"alpha": alpha, "beta": beta})
    ent.expect("Fbar(*)", "{a}", lambda: fbar.ob("*"))
    ent.expect("Fbar functor", True, lambda: is_functor(fbar))
    ent.expect("semi-inverse of alpha is beta", True, lambda: find_semi_inverse(alpha) == beta)
    ent.expect("alpha_* semi-inverse is beta_*", beta["*"],
               lambda: cc_semi_isomorphism(big, "*", fbar, "*", alpha["*"]))
    for mode, check in (("separable", is_separable), ("naturally-semifull", is_naturally_semifull),
                        ("semiseparable", is_semiseparable)):
        ent.expect(f"{mode} agrees on F and Fbar", True,
                   lambda check=check: bool(check(big)) == bool(check(fbar)))
    return ent


def _set_square(max_set_size=2, **_):
    ent = GalleryEntry("set-square", "F(A) = A×A, F(f)(a,a') = (f a, f a) on sample finite sets")
    ent.expect("P(g) = ψ∘g∘Δ passes all pointwise identities", True,
               lambda: pointwise_set_square(max_set_size=max_set_size)["checks"]["naturality"] > 0)
    return ent


def _semiproduct(max_set_size=2, **_):
    ent = GalleryEntry("semiproduct", "Δ -| × on sample finite sets")
    report = {}

    def run():
        if not report:
            report.update(pointwise_semiproduct(max_set_size=max_set_size))
        return report

    ent.expect("semitriangular identities hold", True, lambda: run()["checks"] > 0)
    ent.expect("π_B: ∅×B -> B not epi", max_set_size >= 2, lambda: run()["projection_not_epi"] is not None)
    ent.expect("γ₂: B -> ∅ missing", max_set_size >= 1, lambda: run()["gamma2_missing"] is not None)
    return ent


ENTRIES = {
    "monoid-fe": _monoid_fe,
    "matrix-E11": _matrix_e11,
    "product-ring-z": _product_ring,
    "constant-Fe": _constant,
    "Ee-on-W": _ee_w,
    "Ee-on-M3": _ee_m3,
    "forgetful-upsilon": _forgetful,
    "coidentifier-LH": _coident,
    "SFe-composite": _sfe,
    "fixpoint-W": _fixpoint,
    "set-square": _set_square,
    "semiproduct": _semiproduct,
}


def entry_names():
    return list(ENTRIES)


def build(name, max_set_size=2):
    try:
        builder = ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"no gallery entry named {name!r}") from None
    return builder(max_set_size=max_set_size)


def check_entry(entry):
    """``(prop, expected, actual, ok)`` for each expectation of ``entry``."""
    rows = []
    for ex in entry.expectations:
        try:
            actual = ex.check()
        except Exception as err:  # a crash is a failed expectation
            actual = f"error: {type(err).__name__}: {err}"
        rows.append((ex.prop, ex.expected, actual, actual == ex.expected))
    return rows


def run_all(names=None, max_set_size=2, strict=False):
    """Check every expectation of the selected entries.

    Returns ``{entry: rows}``.  With ``strict`` the first failure raises
    :class:`ExpectationFailed`.
    """
    names = entry_names() if names is None else list(names)
    report = {}
    for name in names:
        rows = check_entry(build(name, max_set_size=max_set_size))
        report[name] = rows
        if strict:
            for prop, expected, actual, ok in rows:
                if not ok:
                    raise ExpectationFailed(name, prop, f"expected {expected!r}, got {actual!r}")
    return report


def failures(report):
    return [(name, prop, expected, actual) for name, rows in report.items()
            for prop, expected, actual, ok in rows if not ok]

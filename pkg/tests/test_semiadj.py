import pytest
from hypothesis import given, settings, strategies as st

import corpus
from semicat.errors import (
    NotLeftSemiadjointData,
    NotRightSemiadjointData,
    NotSelfAdjoint,
    SemitriangularFailure,
    ShapeMismatch,
)
from semicat.props import MODES, is_separable, property_report, verify_P
from semicat.semiadj import (
    Semiadjunction,
    char_unit_counit,
    compose_semiadjunctions,
    identity_semiadjunction,
    idempotent_from_self_semiadjoint,
    promote_left_semiadjoint,
    promote_right_semiadjoint,
    rafael,
    right_adjoints_semiiso,
    self_semiadjunction,
    sigma,
    tau,
    triple_transfer,
    validate_semiadjunction,
)
from semicat.semifunctor import canonical_E, compose_semifunctors, idem_nat, idempotent_nat_transfs
from semicat.transform import search_transformations

ADJS = corpus.adjunctions()
IDS = [n for n, _ in ADJS]


def check_rafael(adj):
    f, g = adj.F, adj.G
    rf, rg = property_report(f), property_report(g)
    for mode in MODES:
        w = rafael(adj, "left", mode)
        assert (w is not None) == rf[mode], ("left", mode)
        if w is not None:
            nu = w.transformation
            assert verify_P(f, w.solution, mode) == []
            for x in adj.C.objects:
                assert w.solution(adj.GF.ob(x), x, adj.counit[f.ob(x)]) == nu[x]
            if mode == "semiseparable":
                for x in adj.C.objects:
                    assert adj.D.compose(f(nu[x]), f(adj.unit[x])) == f.id_image(x)
        w = rafael(adj, "right", mode)
        assert (w is not None) == rg[mode], ("right", mode)
        if w is not None:
            gamma = w.transformation
            assert verify_P(g, w.solution, mode) == []
            for a in adj.D.objects:
                assert w.solution(a, adj.FG.ob(a), adj.unit[g.ob(a)]) == gamma[a]


def check_semisep_equivalence(adj):
    """η∘ν∘η = η ⇔ Fν∘Fη = FId over every seminatural ν: GF -> Id."""
    from semicat.semifunctor import identity_semifunctor
    c, d, f = adj.C, adj.D, adj.F
    for nu in search_transformations(adj.GF, identity_semifunctor(c)):
        a = all(c.compose(adj.unit[x], nu[x], adj.unit[x]) == adj.unit[x] for x in c.objects)
        b = all(d.compose(f(nu[x]), f(adj.unit[x])) == f.id_image(x) for x in c.objects)
        assert a == b


def check_tau_sigma(adj):
    c, d, f, g = adj.C, adj.D, adj.F, adj.G
    for x in c.objects:
        for y in d.objects:
            for h in d.hom(f.ob(x), y):
                assert sigma(adj, x, y, tau(adj, x, y, h)) == d.compose(h, f.id_image(x))
            for k in c.hom(x, g.ob(y)):
                assert tau(adj, x, y, sigma(adj, x, y, k)) == c.compose(g.id_image(y), k)


def check_char(adj):
    r = char_unit_counit(adj)
    rf, rg = property_report(adj.F), property_report(adj.G)
    for side, rep in (("F", rf), ("G", rg)):
        for k in ("faithful", "semifull", "semifully-faithful"):
            assert r[side][k] == rep[k], (side, k)


@pytest.mark.parametrize("name,adj", ADJS, ids=IDS)
def test_gallery_adjunction(name, adj):
    assert validate_semiadjunction(adj) is adj
    check_rafael(adj)
    check_semisep_equivalence(adj)
    check_tau_sigma(adj)
    check_char(adj)


def test_self_adjunction_idempotent(W, M3):
    for cat in (W, M3):
        for e in idempotent_nat_transfs(cat):
            adj = self_semiadjunction(e)
            validate_semiadjunction(adj)
            assert dict(idempotent_from_self_semiadjoint(adj).components) == dict(e.components)


def test_not_self_adjoint():
    adj = corpus.gallery()["forgetful-upsilon"].adjunctions["upsilon -| iota (W)"]
    with pytest.raises(NotSelfAdjoint):
        idempotent_from_self_semiadjoint(adj)


def test_broken_triangle(W):
    ee = canonical_E(idem_nat(W, {"*": "u"}))
    idw = identity_semiadjunction(W).F
    with pytest.raises(SemitriangularFailure):
        validate_semiadjunction(Semiadjunction(idw, ee, {"*": "u"}, {"*": "u"}))


def test_compose_shape_mismatch(W, M3):
    with pytest.raises(ShapeMismatch):
        compose_semiadjunctions(identity_semiadjunction(W), identity_semiadjunction(M3))


def test_compose_gallery():
    adjs = [a for _, a in ADJS]
    count = 0
    for a in adjs:
        for b in adjs:
            if a.D == b.C:
                validate_semiadjunction(compose_semiadjunctions(a, b))
                count += 1
    assert count > 0


def test_twisted_by_idempotent_separability():
    for name, adj in ADJS:
        for e in idempotent_nat_transfs(adj.C):
            comp = compose_semiadjunctions(self_semiadjunction(e), adj)
            validate_semiadjunction(comp)
            ident = all(e[x] == adj.C.id(x) for x in adj.C.objects)
            if not ident:
                assert not is_separable(comp.F), name
            if is_separable(comp.G):
                assert is_separable(adj.G), name


def test_promote_keeps_valid_data():
    for _, adj in ADJS:
        p = promote_right_semiadjoint(adj.F, adj.G, adj.unit, adj.counit)
        assert p.F.mor_map == adj.F.mor_map
        q = promote_left_semiadjoint(adj.F, adj.G, adj.unit, adj.counit)
        assert q.G.mor_map == adj.G.mor_map


def test_promote_rejects(W):
    ee = canonical_E(idem_nat(W, {"*": "u"}))
    idw = identity_semiadjunction(W).F
    u = {"*": "u"}
    # F = Id, G = E^u, η = ε = u: Gε∘ηG = u = GId holds, εF∘Fη = u != Id fails
    p = promote_right_semiadjoint(idw, ee, u, u)
    assert p.F.mor_map == {"id": "u", "u": "u"}
    with pytest.raises(NotLeftSemiadjointData):
        promote_left_semiadjoint(idw, ee, u, u)
    q = promote_left_semiadjoint(ee, idw, u, u)
    assert q.G.mor_map == {"id": "u", "u": "u"}
    with pytest.raises(NotRightSemiadjointData):
        promote_right_semiadjoint(ee, idw, u, u)


def test_triples():
    g = corpus.gallery()
    l_h = g["coidentifier-LH"].adjunctions
    for _, adj in ADJS:
        for _, adj2 in ADJS:
            if adj.G == adj2.F:
                triple_transfer(adj, adj2)
    with pytest.raises(ShapeMismatch):
        triple_transfer(l_h["L -| H (W)"], l_h["L -| H (M3)"])


# exhaustive semiadjunctions on small random categories


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**7))
def test_random_semiadjunctions(seed):
    adjs = corpus.random_semiadjunctions(seed)
    for adj in adjs:
        check_rafael(adj)
        check_semisep_equivalence(adj)
        check_tau_sigma(adj)
        check_char(adj)
    # right semiadjoints of one F are semi-isomorphic; F ⊣ G ⊣ H transfers
    for a in adjs:
        for b in adjs:
            if a.F == b.F:
                right_adjoints_semiiso(a, b)
            if a.G == b.F:
                triple_transfer(a, b)
            if a.D == b.C:
                validate_semiadjunction(compose_semiadjunctions(a, b))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**7))
def test_random_promotion(seed):
    import random
    from semicat.fuzz import random_category
    from semicat.semifunctor import enumerate_semifunctors, identity_semifunctor
    rng = random.Random(seed)
    c = random_category(rng, max_morphisms=4)
    for f in enumerate_semifunctors(c, c):
        for g in enumerate_semifunctors(c, c):
            units = search_transformations(identity_semifunctor(c), compose_semifunctors(g, f))
            counits = search_transformations(compose_semifunctors(f, g), identity_semifunctor(c))
            for u in units:
                for v in counits:
                    adj = Semiadjunction(f, g, u, v)
                    try:
                        p = promote_right_semiadjoint(f, g, u, v)
                    except NotRightSemiadjointData:
                        assert any(c.compose(g(v[y]), u[g.ob(y)]) != g.id_image(y) for y in c.objects)
                        continue
                    assert p.F.obj_map == f.obj_map
                    try:
                        validate_semiadjunction(adj)
                        assert p.F.mor_map == f.mor_map
                    except SemitriangularFailure:
                        pass

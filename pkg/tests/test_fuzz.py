import pytest

import invariants
from semicat import props
from semicat.fuzz import instances, random_category, random_instance
from semicat.kernel import validate_category
from semicat.semifunctor import is_functor

COUNT = 500


@pytest.fixture(scope="module")
def corpus():
    return instances(COUNT, seed=0)


def test_instances_are_deterministic():
    a, b = random_instance(17), random_instance(17)
    assert a.category == b.category and a.functor.mor_map == b.functor.mor_map
    assert a.idem.components == b.idem.components


def test_instance_shape(corpus):
    for inst in corpus:
        for cat in (inst.category, inst.target):
            validate_category(cat)
            assert len(cat.objects) <= 2 and len(cat.morphisms) <= 6
    # the corpus is not dominated by trivial cases
    assert sum(not is_functor(i.functor) for i in corpus) >= COUNT // 5
    assert sum(not i.idem.is_identity() for i in corpus) >= COUNT // 10
    assert sum(i.category is i.target for i in corpus) >= COUNT // 4


def test_random_category_respects_bounds():
    import random
    rng = random.Random(3)
    for _ in range(50):
        c = random_category(rng, max_objects=1, max_morphisms=3)
        assert len(c.objects) == 1 and len(c.morphisms) <= 3


def test_no_invariant_violated(corpus):
    bad = [(i.seed, v) for i in corpus for v in invariants.violations(i)]
    assert bad == []


def test_harness_detects_a_wrong_verdict(monkeypatch, corpus):
    # negative control: a separability checker that always says yes
    monkeypatch.setattr(props, "is_separable", lambda fun: props.Verdict(True))
    monkeypatch.setattr(invariants, "is_separable", props.is_separable)
    monkeypatch.setattr(props, "property_report", _always_separable(props.property_report))
    monkeypatch.setattr(invariants, "property_report", props.property_report)
    found = [v for i in corpus[:100] for v in invariants.violations(i, modules={"props"})]
    assert found


def _always_separable(real):
    def report(fun):
        r = real(fun)
        r["separable"] = True
        return r
    return report


def test_harness_detects_a_crash(monkeypatch, corpus):
    monkeypatch.setattr(invariants, "coidentifier", lambda c, e: (_ for _ in ()).throw(RuntimeError("boom")))
    v = invariants.violations(corpus[0], modules={"coident"})
    assert v and v[0][0] == "coident" and "boom" in v[0][1]

import pytest

from semicat.errors import IdentityFailure
from semicat.setpoint import functions, pointwise_semiproduct, pointwise_set_square, sample_sets


def test_samples():
    assert sample_sets(2) == [(), ("a",), ("b",), ("a", "b")]
    assert len(functions(("a", "b"), ("a", "b", "c"))) == 9
    assert functions((), ()) == [()]
    assert functions(("a",), ()) == []


def test_square_counts():
    r = pointwise_set_square(max_set_size=2)
    assert r["sets"] == ["{}", "{a}", "{b}", "{a,b}"]
    # f: A -> B over all pairs of samples
    assert r["checks"]["separability"] == sum(len(b) ** len(a) for a in sample_sets(2) for b in sample_sets(2))
    assert r["checks"]["naturality"] > 0


def test_square_sampling_is_seeded():
    sets = [(), ("a",), ("a", "b", "c")]
    a = pointwise_set_square(samples=sets, limit=32, seed=1)
    b = pointwise_set_square(samples=sets, limit=32, seed=1)
    assert a == b


def test_semiproduct_witnesses():
    r = pointwise_semiproduct(max_set_size=2)
    assert r["projection_not_epi"] is not None
    assert r["gamma2_missing"] is not None
    r0 = pointwise_semiproduct(samples=[()])
    assert r0["projection_not_epi"] is None


def test_wrong_p_is_caught(monkeypatch):
    import semicat.setpoint as sp
    orig = sp._sq_map
    # a non-diagonal square map breaks separability
    monkeypatch.setattr(sp, "_sq_map", lambda f, a, b: tuple((sp._apply(f, a, x), sp._apply(f, a, y))
                                                              for x, y in sp._square(a)))
    with pytest.raises(IdentityFailure):
        pointwise_set_square(max_set_size=2)
    monkeypatch.setattr(sp, "_sq_map", orig)

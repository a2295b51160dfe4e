import pytest
from hypothesis import given, strategies as st

from codata.lazy import (
    EQ, PairValue, Thunk, compose, eq_setoid, force, identity, pairing, phi_inv, phi_pair, pr1, pr2,
)


def test_force_constant():
    assert force(Thunk(lambda: 7)) == 7


def test_memoized_producer_runs_once():
    calls = []

    def producer():
        calls.append(1)
        return "value"

    t = Thunk(producer)
    assert not t.is_forced
    assert [force(t) for _ in range(3)] == ["value"] * 3
    assert len(calls) == 1
    assert t.is_forced


def test_failing_producer_leaves_cache_empty_and_retries():
    attempts = []

    def flaky():
        attempts.append(1)
        if len(attempts) < 3:
            raise RuntimeError("not yet")
        return 42

    t = Thunk(flaky)
    for _ in range(2):
        with pytest.raises(RuntimeError):
            force(t)
        assert not t.is_forced
    assert force(t) == 42
    assert force(t) == 42
    assert len(attempts) == 3


def test_ready_thunk():
    t = Thunk.ready(5)
    assert t.is_forced and force(t) == 5


@given(st.integers(min_value=1, max_value=20))
def test_producer_count_is_one_after_n_forces(n):
    calls = []
    t = Thunk(lambda: calls.append(1) or len(calls))
    for _ in range(n):
        assert force(t) == 1
    assert len(calls) == 1


values = st.one_of(st.integers(), st.tuples(st.integers(), st.integers()), st.text(max_size=3))


@given(values, values, values)
def test_eq_setoid_is_an_equivalence(x, y, z):
    eq = eq_setoid()
    assert eq(x, x)
    assert eq(x, y) == eq(y, x)
    if eq(x, y) and eq(y, z):
        assert eq(x, z)


def test_eq_setoid_on_pairs_is_componentwise():
    assert EQ((1, 2), (1, 2))
    assert not EQ((1, 2), (1, 3))
    assert EQ(PairValue(1, 2), PairValue(1, 2))


def test_custom_equality_setoid():
    mod3 = eq_setoid("mod3", lambda a, b: a % 3 == b % 3)
    assert mod3(1, 4) and not mod3(1, 5)


def test_phi_on_example():
    assert phi_pair((3, "x")) == PairValue(3, "x")
    assert isinstance(phi_pair((3, "x")), PairValue)


@given(st.tuples(st.integers(), st.integers()))
def test_phi_roundtrip_from_pairs(p):
    assert phi_inv(phi_pair(p)) == p


@given(st.integers(), st.integers())
def test_phi_roundtrip_from_pair_values(a, b):
    q = PairValue(a, b)
    assert phi_pair(phi_inv(q)) == q
    assert pr1(q) == a and pr2(q) == b


def test_pairing_and_compose():
    f = pairing(lambda x: x + 1, lambda x: x * 2)
    assert f(3) == PairValue(4, 6)
    assert compose(lambda x: x + 1, lambda x: x * 10)(2) == 30
    assert compose()(9) == 9
    assert identity("a") == "a"

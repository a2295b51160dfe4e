"""Lazy evaluation substrate: memoized thunks, setoids, products and the Eq functor."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, NamedTuple, TypeVar

V = TypeVar("V")

_EMPTY = object()


class Thunk(Generic[V]):
    """A deferred value, computed at most once.

    If the producer raises, the cache stays empty and the next `force`
    runs the producer again.
    """

    __slots__ = ("_producer", "_value")

    def __init__(self, producer: Callable[[], V]):
        self._producer = producer
        self._value: Any = _EMPTY

    @classmethod
    def ready(cls, value: V) -> "Thunk[V]":
        t = cls.__new__(cls)
        t._producer = None
        t._value = value
        return t

    @property
    def is_forced(self) -> bool:
        return self._value is not _EMPTY

    def force(self) -> V:
        if self._value is _EMPTY:
            value = self._producer()
            self._value = value
            # drop the closure so whatever it captured can be collected
            self._producer = None
        return self._value

    def __repr__(self):
        if self.is_forced:
            return f"Thunk({self._value!r})"
        return "Thunk(<pending>)"


def force(t: Thunk[V]) -> V:
    return t.force()


@dataclass(frozen=True)
class Setoid(Generic[V]):
    """A carrier described by name together with an executable equivalence."""

    name: str
    equiv: Callable[[V, V], bool]

    def __call__(self, x: V, y: V) -> bool:
        return bool(self.equiv(x, y))


def eq_setoid(name: str = "Eq", equality: Callable[[Any, Any], bool] = operator.eq) -> Setoid:
    """Image of a plain type under the Eq functor: structural equality."""
    return Setoid(name, equality)


EQ = eq_setoid()


class PairValue(NamedTuple):
    """Binary product value. pr1/pr2 are the two projections."""

    first: Any
    second: Any


def pr1(p: PairValue):
    return p.first


def pr2(p: PairValue):
    return p.second


def pairing(f: Callable, g: Callable) -> Callable:
    """The induced map <f, g> into the product."""
    return lambda x: PairValue(f(x), g(x))


def phi_pair(p) -> PairValue:
    """Eq(A×B) -> Eq A × Eq B, i.e. <Eq pr1, Eq pr2>. Componentwise identity."""
    first, second = p
    return PairValue(first, second)


def phi_inv(q) -> PairValue:
    """Inverse of `phi_pair`."""
    first, second = q
    return PairValue(first, second)


def compose(*fs: Callable) -> Callable:
    """Diagrammatic composition: compose(f, g)(x) == g(f(x))."""

    def composite(x):
        for f in fs:
            x = f(x)
        return x

    return composite


def identity(x):
    return x

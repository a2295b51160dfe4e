"""Sample generators for law checks.

Test functions TA -> B are drawn from a small closed grammar: a weighted sum
(mod 97) of the first integers observed in a carrier value. They depend on a
finite observation only, so they respect bisimilarity by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .lazy import PairValue
from .stream import Stream, from_function, stream_corec
from .tri import Layer, Tri, TriCoalgSeed, constant_tri, position_matrix, tri_corec, ttail

MOD = 97


def flatten_ints(obj) -> list:
    """Leaves of nested pairs, layers, triangles and lists, in order."""
    out = []
    stack = [obj]
    while stack:
        item = stack.pop()
        if isinstance(item, Layer):
            stack.append(item.core)
            stack.extend(reversed(item.prefix))
        elif isinstance(item, (list, tuple)):
            stack.extend(reversed(item))
        elif hasattr(item, "layers"):
            stack.extend(reversed(item.layers))
        else:
            out.append(item)
    return out


def map_leaves(g: Callable, v):
    if isinstance(v, PairValue):
        return PairValue(map_leaves(g, v.first), map_leaves(g, v.second))
    return g(v)


@dataclass(frozen=True)
class Observation:
    """x -> (offset + sum(w_i * n_i)) mod 97 over the first observed integers of x."""

    window: int
    weights: tuple
    offset: int
    observe: Callable[[Any, int], Any] = field(repr=False, compare=False, default=None)

    def __call__(self, x) -> int:
        ints = flatten_ints(self.observe(x, self.window))
        total = self.offset
        for w, n in zip(self.weights, ints):
            total += w * n
        return total % MOD

    @property
    def label(self) -> str:
        return f"obs(window={self.window}, weights={list(self.weights)}, offset={self.offset})"

    def __repr__(self):
        return self.label


@dataclass(frozen=True)
class ValueMap:
    """A plain function A -> B acting on integer leaves: n -> (scale*n + shift) mod 97."""

    scale: int
    shift: int

    def __call__(self, v):
        return map_leaves(lambda n: (self.scale * n + self.shift) % MOD, v)

    @property
    def label(self) -> str:
        return f"map({self.scale}*n+{self.shift} mod {MOD})"

    def __repr__(self):
        return self.label


@dataclass
class SampleGen:
    """Generators for one carrier.

    `value(rng)` samples the carrier at a base object, `pair_value(rng)` at E×A
    (needed by cut laws), `observe(x, k)` exposes a finite window used by test
    functions and counterexample payloads.
    """

    name: str
    value: Callable[[random.Random], Any]
    observe: Callable[[Any, int], Any]
    pair_value: Optional[Callable[[random.Random], Any]] = None
    max_window: int = 3

    def function(self, rng: random.Random) -> Observation:
        window = rng.randint(1, self.max_window)
        n_weights = rng.randint(1, 4)
        weights = tuple(rng.randint(1, 9) for _ in range(n_weights))
        return Observation(window, weights, rng.randrange(MOD), self.observe)


def random_value_map(rng: random.Random) -> ValueMap:
    return ValueMap(rng.randint(1, 9), rng.randrange(MOD))


def is_verified(fn) -> bool:
    return isinstance(fn, (Observation, ValueMap))


# streams


def random_stream(rng: random.Random) -> Stream:
    kind = rng.randrange(3)
    if kind == 0:
        a, b = rng.randrange(MOD), rng.randrange(1, 7)
        return from_function(lambda i: (a + b * i) % MOD)
    if kind == 1:
        period = [rng.randrange(MOD) for _ in range(rng.randint(1, 4))]
        return from_function(lambda i: period[i % len(period)])
    a, b, c = rng.randrange(1, 5), rng.randrange(MOD), rng.randrange(MOD)
    return stream_corec(lambda s: s, lambda s: (a * s + b) % MOD, c)


def random_pair_stream(rng: random.Random) -> Stream:
    es, as_ = random_stream(rng), random_stream(rng)
    return stream_corec(
        lambda st: PairValue(st[0].head_cell.force(), st[1].head_cell.force()),
        lambda st: (st[0].tail_cell.force(), st[1].tail_cell.force()),
        (es, as_),
    )


# triangular matrices


def affine_tri(a: int, b: int, c: int, d: int, wrap_count: int = 0) -> Tri:
    """Layer j (absolute wrap tag w+j): prefix entries (a*j + b*i + c) mod 97, core (d*j + c) mod 97."""
    return tri_corec(TriCoalgSeed(
        0, wrap_count,
        lambda j, tag: Layer(tuple((a * j + b * i + c) % MOD for i in range(tag)), (d * j + c) % MOD),
        lambda j: j + 1,
    ))


def random_tri(rng: random.Random):
    kind = rng.randrange(4)
    if kind == 0:
        return constant_tri(rng.randrange(MOD), rng.randrange(MOD))
    if kind == 1:
        return position_matrix()
    return affine_tri(rng.randrange(1, 9), rng.randrange(1, 9), rng.randrange(MOD), rng.randrange(1, 9))


def random_pair_tri(rng: random.Random):
    if rng.random() < 0.5:
        return ttail(random_tri(rng))
    return affine_tri(rng.randrange(1, 9), rng.randrange(1, 9), rng.randrange(MOD), rng.randrange(1, 9), 1)


def random_int(rng: random.Random) -> int:
    return rng.randrange(MOD)


def random_pair(rng: random.Random) -> PairValue:
    return PairValue(rng.randrange(MOD), rng.randrange(MOD))


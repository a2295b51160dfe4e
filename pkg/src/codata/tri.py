"""Infinite triangular matrices.

A matrix `t : Tri A` has a diagonal head of type A and a tail of type
Tri(E×A): the remaining diagonal entries bundled with the off-diagonal
entries above them. Nested pair values E×(E×(…×A)) are stored flattened as
a `Layer`: the outermost pair component first in `prefix`, the innermost
diagonal value as `core`. Hence pr1 is ``prefix[0]`` and pr2 drops it.

`wrap_count` records how many E-wraps the head of a node carries; it is
known up front for corecursively seeded matrices and read off the head
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

from .lazy import EQ, PairValue, Setoid, Thunk
from .report import LawReport, check_samples
from .stream import Stream, stream_corec


@dataclass(frozen=True)
class Layer:
    prefix: tuple
    core: Any

    def __post_init__(self):
        if not isinstance(self.prefix, tuple):
            object.__setattr__(self, "prefix", tuple(self.prefix))

    @property
    def wraps(self) -> int:
        return len(self.prefix)

    def value(self):
        """Refold into the nested pair value this layer stands for."""
        v = self.core
        for e in reversed(self.prefix):
            v = PairValue(e, v)
        return v

    def pr1(self):
        if not self.prefix:
            raise ValueError("pr1 of a layer without E-wraps")
        return self.prefix[0]

    def pr2(self) -> "Layer":
        if not self.prefix:
            raise ValueError("pr2 of a layer without E-wraps")
        return Layer(self.prefix[1:], self.core)

    def to_json(self):
        return {"prefix": list(self.prefix), "core": self.core}

    def __repr__(self):
        return f"Layer({list(self.prefix)!r}, {self.core!r})"


def as_layer(v) -> Layer:
    """Flatten a diagonal value: PairValue(e, x) puts e in front of x's prefix."""
    if isinstance(v, Layer):
        return v
    prefix = []
    while isinstance(v, PairValue):
        prefix.append(v.first)
        v = v.second
    if isinstance(v, Layer):
        return Layer(tuple(prefix) + v.prefix, v.core)
    return Layer(tuple(prefix), v)


class Tri:
    __slots__ = ("head_cell", "tail_cell", "_wrap")

    def __init__(self, head_cell: Thunk, tail_cell: Thunk, wrap_count: Optional[int] = None):
        self.head_cell = head_cell
        self.tail_cell = tail_cell
        self._wrap = wrap_count

    @property
    def wrap_count(self) -> int:
        if self._wrap is None:
            self._wrap = thead(self).wraps
        return self._wrap

    def __repr__(self):
        return f"Tri(wrap_count={self._wrap}, layers={truncate(3, self).layers!r}...)"

    def to_json(self, n: int = 4):
        return truncate(n, self).to_json()


@dataclass(frozen=True)
class FiniteTriangle:
    layers: tuple

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))

    def __len__(self):
        return len(self.layers)

    @property
    def cores(self) -> list:
        return [layer.core for layer in self.layers]

    def to_json(self):
        return {"layers": [layer.to_json() for layer in self.layers]}


@dataclass(frozen=True)
class TriCoalgSeed:
    """A coalgebra seed: `hd(state, depth_tag)` yields the layer at this node
    (prefix length `depth_tag`), `tl` advances the state."""

    state: Any
    depth_tag: Optional[int]
    hd: Callable[[Any, Optional[int]], Any]
    tl: Callable[[Any], Any]

    def advance(self) -> "TriCoalgSeed":
        tag = None if self.depth_tag is None else self.depth_tag + 1
        return TriCoalgSeed(self.tl(self.state), tag, self.hd, self.tl)


def thead(t: Tri) -> Layer:
    return t.head_cell.force()


def ttail(t: Tri) -> Tri:
    return t.tail_cell.force()


def counit(t: Tri):
    """The diagonal head as a value (nested pairs when wrapped)."""
    return thead(t).value()


def tri_corec(c: TriCoalgSeed) -> Tri:
    def head():
        layer = as_layer(c.hd(c.state, c.depth_tag))
        if c.depth_tag is not None and layer.wraps != c.depth_tag:
            raise ValueError(
                f"coalgebra head has {layer.wraps} E-wraps, expected {c.depth_tag}"
            )
        return layer

    return Tri(Thunk(head), Thunk(lambda: tri_corec(c.advance())), c.depth_tag)


def tri_unfold(hd: Callable, tl: Callable, state, wrap_count: Optional[int] = None) -> Tri:
    """`tri_corec` for a head function of the state alone."""
    return tri_corec(TriCoalgSeed(state, wrap_count, lambda s, _tag: hd(s), tl))


def _dec(w):
    return None if w is None else w - 1


def cut(t: Tri) -> Tri:
    """Tri(E×A) -> Tri A: drop the newest E entry from every layer."""
    if t._wrap == 0:
        raise ValueError("cut needs a matrix over E×A (wrap_count >= 1)")

    def head():
        layer = thead(t)
        if not layer.prefix:
            raise ValueError("cut needs a matrix over E×A (wrap_count >= 1)")
        return layer.pr2()

    return Tri(Thunk(head), Thunk(lambda: cut(ttail(t))), _dec(t._wrap))


def extend(f: Callable[[Tri], Any]) -> Callable[[Tri], PairValue]:
    """Turn an observation of Tri A into one of Tri(E×A): <head;pr1, cut;f>."""

    def extended(t: Tri) -> PairValue:
        return PairValue(thead(t).pr1(), f(cut(t)))

    extended.__name__ = f"extend({getattr(f, '__name__', 'f')})"
    return extended


def redec(f: Callable[[Tri], Any], t: Tri) -> Tri:
    """Redecoration: head is f(t), tail redecorates tail(t) with extend(f)."""
    return tri_unfold(
        lambda st: st[0](st[1]),
        lambda st: (extend(st[0]), ttail(st[1])),
        (f, t),
    )


def truncate(n: int, t: Tri) -> FiniteTriangle:
    if n < 0:
        raise ValueError("truncate: n must be >= 0")
    layers = []
    for j in range(n):
        layers.append(thead(t))
        if j + 1 < n:
            t = ttail(t)
    return FiniteTriangle(layers)


def tdrop(n: int, t: Tri) -> Tri:
    for _ in range(n):
        t = ttail(t)
    return t


def layers_equiv(eqE: Setoid, eqA: Setoid, x: Layer, y: Layer) -> bool:
    if len(x.prefix) != len(y.prefix):
        return False
    return all(eqE(a, b) for a, b in zip(x.prefix, y.prefix)) and eqA(x.core, y.core)


def tri_bisim_depth(n: int, eqE: Setoid, eqA: Setoid, s: Tri, t: Tri) -> bool:
    """Layer-wise agreement of the first `n` layers (prefixes under eqE, cores under eqA)."""
    if n < 0:
        raise ValueError("depth must be >= 0")
    if n == 0:
        return True
    if s.wrap_count != t.wrap_count:
        raise ValueError(f"wrap_count mismatch: {s.wrap_count} vs {t.wrap_count}")
    for j in range(n):
        if not layers_equiv(eqE, eqA, thead(s), thead(t)):
            return False
        if j + 1 < n:
            s, t = ttail(s), ttail(t)
    return True


def tri_coinduction_check(R, eqE: Setoid, eqA: Setoid, samples: Iterable, n: int,
                          instance_id: str = "tri") -> LawReport:
    """Premises of the Tri coinduction rule on sampled R-related pairs."""
    related = [(s, t) for s, t in samples if R(s, t)]
    failure = {}

    def premises_hold(pair):
        s, t = pair
        for step in range(n):
            if not layers_equiv(eqE, eqA, thead(s), thead(t)):
                failure[id(pair)] = {"step": step, "premise": "head"}
                return False
            s, t = ttail(s), ttail(t)
            if not R(s, t):
                failure[id(pair)] = {"step": step, "premise": "tail"}
                return False
        return True

    def describe(pair):
        s, t = pair
        return {"s": truncate(n, s).to_json(), "t": truncate(n, t).to_json(), **failure.get(id(pair), {})}

    report = LawReport()
    report.add(check_samples("tri.coinduction", instance_id, n, related, premises_hold, describe))
    return report


def diag(t: Tri) -> Stream:
    """The diagonal: shead = head, stail = diag(cut(tail t))."""
    return stream_corec(counit, lambda u: cut(ttail(u)), t)


# fixtures


def from_layers(layer_at: Callable[[int], Any], wrap_count: int = 0, start: int = 0) -> Tri:
    """Matrix whose node at unfolding depth j has head `layer_at(start + j)`."""
    return tri_corec(TriCoalgSeed(start, wrap_count, lambda j, _tag: layer_at(j), lambda j: j + 1))


def constant_tri(a0=0, e0=1, wrap_count: int = 0) -> Tri:
    """Diagonal entries a0, off-diagonal entries e0."""
    return tri_corec(TriCoalgSeed(None, wrap_count, lambda _s, tag: Layer((e0,) * tag, a0), lambda s: s))


def enc(j: int, i: int) -> int:
    return 100 * j + i


def position_matrix() -> Tri:
    """Layer j has core j and prefix enc(j, 1), …, enc(j, j); all entries distinct."""
    return from_layers(lambda j: Layer(tuple(enc(j, i) for i in range(1, j + 1)), j))


__all__ = [
    "Layer", "Tri", "FiniteTriangle", "TriCoalgSeed", "as_layer", "thead", "ttail", "counit",
    "tri_corec", "tri_unfold", "cut", "extend", "redec", "truncate", "tdrop", "layers_equiv",
    "tri_bisim_depth", "tri_coinduction_check", "diag", "from_layers", "constant_tri",
    "enc", "position_matrix", "EQ",
]

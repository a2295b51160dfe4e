"""Streams: the homogeneous codata type with destructors shead/stail."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .lazy import EQ, Setoid, Thunk
from .report import LawReport, check_samples


class Stream:
    __slots__ = ("head_cell", "tail_cell")

    def __init__(self, head_cell: Thunk, tail_cell: Thunk):
        self.head_cell = head_cell
        self.tail_cell = tail_cell

    def __repr__(self):
        return f"Stream({stake(5, self)!r}...)"

    def to_json(self, n: int = 10):
        return {"stream": list(stake(n, self))}


@dataclass(frozen=True)
class StreamFun:
    """An observation Stream A -> B with a label for reports."""

    apply: Callable[[Stream], Any]
    description: str = "<fn>"

    def __call__(self, s):
        return self.apply(s)

    def __repr__(self):
        return self.description


def shead(s: Stream):
    return s.head_cell.force()


def stail(s: Stream) -> Stream:
    return s.tail_cell.force()


def stream_corec(hd: Callable, tl: Callable, seed) -> Stream:
    """The unique stream with shead = hd(seed) and stail = stream_corec(hd, tl, tl(seed))."""
    return Stream(
        Thunk(lambda: hd(seed)),
        Thunk(lambda: stream_corec(hd, tl, tl(seed))),
    )


def scons(head, tail_producer: Callable[[], Stream]) -> Stream:
    return Stream(Thunk.ready(head), Thunk(tail_producer))


def stake(n: int, s: Stream) -> list:
    if n < 0:
        raise ValueError("stake: n must be >= 0")
    out = []
    for _ in range(n):
        out.append(shead(s))
        if len(out) < n:
            s = stail(s)
    return out


def sdrop(n: int, s: Stream) -> Stream:
    for _ in range(n):
        s = stail(s)
    return s


def sredec(f: Callable[[Stream], Any], s: Stream) -> Stream:
    """Cosubstitution: replace every suffix of `s` by its observation under `f`."""
    return stream_corec(f, stail, s)


def smap(g: Callable, s: Stream) -> Stream:
    """Pointwise map; independent of `sredec`, used as an oracle."""
    return stream_corec(lambda u: g(shead(u)), stail, s)


def stream_bisim_depth(n: int, eqA: Setoid, s: Stream, t: Stream) -> bool:
    """Agreement of the first `n` heads under `eqA`."""
    if n < 0:
        raise ValueError("depth must be >= 0")
    for i in range(n):
        if not eqA(shead(s), shead(t)):
            return False
        if i + 1 < n:
            s, t = stail(s), stail(t)
    return True


def stream_coinduction_check(R, eqA: Setoid, samples: Iterable, n: int,
                             instance_id: str = "stream") -> LawReport:
    """Check the premises of the coinduction rule on sampled R-related pairs.

    For each pair with R(s, t), unfolds `n` steps and requires equal heads
    and R-related tails at every step. Unrelated pairs are skipped.
    """
    related = [(s, t) for s, t in samples if R(s, t)]
    failure = {}

    def premises_hold(pair):
        s, t = pair
        for step in range(n):
            if not eqA(shead(s), shead(t)):
                failure[id(pair)] = {"step": step, "premise": "head"}
                return False
            s, t = stail(s), stail(t)
            if not R(s, t):
                failure[id(pair)] = {"step": step, "premise": "tail"}
                return False
        return True

    def describe(pair):
        s, t = pair
        return {"s": stake(n, s), "t": stake(n, t), **failure.get(id(pair), {})}

    report = LawReport()
    report.add(check_samples("stream.coinduction", instance_id, n, related, premises_hold, describe))
    return report


# fixtures


def nats(start: int = 0) -> Stream:
    return stream_corec(lambda k: k, lambda k: k + 1, start)


def constant(c) -> Stream:
    return stream_corec(lambda _: c, lambda u: u, None)


def from_function(g: Callable[[int], Any], start: int = 0) -> Stream:
    """The stream g(start), g(start + 1), ..."""
    return stream_corec(g, lambda k: k + 1, start)


def every_other(s: Stream) -> Stream:
    """Heads at even positions of `s`."""
    return stream_corec(shead, lambda u: stail(stail(u)), s)


__all__ = [
    "Stream", "StreamFun", "shead", "stail", "stream_corec", "scons", "stake", "sdrop",
    "sredec", "smap", "stream_bisim_depth", "stream_coinduction_check",
    "nats", "constant", "from_function", "every_other", "EQ",
]

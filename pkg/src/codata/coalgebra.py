"""Coalgebras for streams and for triangular matrices, and their terminal maps.

A stream coalgebra is a comonad S with a comodule endomorphism `step` of its
tautological comodule; (stream, stail) is terminal. A Tri coalgebra is a
comonad with cut T with a comodule morphism `tail : T -> T(E×_)` compatible
with cut; (Tri, tail) is terminal. The terminal maps are built by
corecursion: heads from the counit, tails from the coalgebra's step.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import comonad as C
from . import comodule as M
from . import stream as S
from . import tri as T
from .lazy import Thunk
from .report import FAIL, PASS, VACUOUS, LawEntry, LawReport, check_samples
from .sampling import SampleGen


@dataclass(frozen=True)
class StreamCoalgebra:
    comonad: C.RelativeComonad
    step: M.ComoduleMorphism
    name: str = "coalg"


@dataclass(frozen=True)
class TriCoalgebra:
    comonad_with_cut: C.RelComonadWithCut
    tail_morphism: M.ComoduleMorphism
    name: str = "coalg"

    @property
    def comonad(self) -> C.RelComonadWithCut:
        return self.comonad_with_cut


@dataclass
class CoalgMorphismReport(LawReport):
    depth: int = 0
    samples: int = 0
    warnings: list = field(default_factory=list)


def stream_coalgebra(Sc: C.RelativeComonad, step: Callable, name: str) -> StreamCoalgebra:
    taut = M.tautological(Sc)
    return StreamCoalgebra(Sc, M.ComoduleMorphism(taut, taut, step, f"step[{name}]"), name)


def tri_coalgebra(Tc: C.RelComonadWithCut, tail: Callable, name: str) -> TriCoalgebra:
    taut = M.tautological(Tc)
    return TriCoalgebra(
        Tc, M.ComoduleMorphism(taut, M.precompose_product(Tc, taut), tail, f"tail[{name}]"), name
    )


# the standard coalgebras


def terminal_stream_coalgebra() -> StreamCoalgebra:
    return stream_coalgebra(C.stream_comonad(), S.stail, "stream")


def tri_diagonal_coalgebra() -> StreamCoalgebra:
    """Tri as a stream coalgebra with step tail;cut."""
    return stream_coalgebra(C.tri_comonad(), lambda t: T.cut(T.ttail(t)), "tri,tail;cut")


def terminal_tri_coalgebra() -> TriCoalgebra:
    return tri_coalgebra(C.tri_comonad(), T.ttail, "tri")


def product_tri_coalgebra() -> TriCoalgebra:
    """Tri(E×_) with tail and cut taken at the shifted index."""
    Pc = C.product_comonad(C.tri_comonad())
    return tri_coalgebra(C.with_cut(Pc, T.cut, Pc.name), T.ttail, "product(tri)")


def canonical_cut_tri_coalgebra() -> TriCoalgebra:
    """(Tri, tail) with the canonical cut in place of Tri's own cut."""
    return tri_coalgebra(C.canonical_cut(C.tri_comonad()), T.ttail, "tri[canonical cut]")


# terminal maps


def terminal_to_stream(C_: StreamCoalgebra, x) -> S.Stream:
    """shead = counit^S x, stail = terminal_to_stream(C, step x)."""
    return S.stream_corec(C_.comonad.counit, C_.step.component, x)


def terminal_to_tri(C_: TriCoalgebra, x) -> T.Tri:
    """head = counit^T x, tail = terminal_to_tri(C, tail^T x)."""
    return T.tri_unfold(C_.comonad.counit, C_.tail_morphism.component, x)


def terminal_stream_morphism(C_: StreamCoalgebra) -> C.RelComonadMorphism:
    return C.RelComonadMorphism(C_.comonad, C.stream_comonad(),
                                lambda x: terminal_to_stream(C_, x), f"terminal[{C_.name}]")


def terminal_tri_morphism(C_: TriCoalgebra) -> C.RelComonadMorphism:
    return C.RelComonadMorphism(C_.comonad, C.tri_comonad(),
                                lambda x: terminal_to_tri(C_, x), f"terminal[{C_.name}]")


# checks


def _coalg_report(report: LawReport, depth: int, k: int) -> CoalgMorphismReport:
    return CoalgMorphismReport(entries=list(report.entries), depth=depth, samples=k)


def coalg_check_stream(C_: StreamCoalgebra, gen: SampleGen, depth: int = 8, k: int = 50,
                       seed: int = 0) -> CoalgMorphismReport:
    """Comonad laws of S and the comodule square of its step."""
    iid = f"coalg[{C_.name}]"
    report = C.comonad_law_check(C_.comonad, gen, depth, k, seed, iid)
    report.extend(M.comodule_morphism_check(C_.step, gen, gen, depth, k, seed, iid))
    return _coalg_report(report, depth, k)


def coalg_check_tri(C_: TriCoalgebra, gen: SampleGen, depth: int = 8, k: int = 50,
                    seed: int = 0) -> CoalgMorphismReport:
    """Comonad and cut laws, the tail square, and cut;tail = tail;cut."""
    iid = f"coalg[{C_.name}]"
    Tc = C_.comonad_with_cut
    tail = C_.tail_morphism.component
    report = C.comonad_law_check(Tc, gen, depth, k, seed, iid)
    report.extend(C.cut_law_check(Tc, gen, depth, k, seed, iid))
    report.extend(M.comodule_morphism_check(C_.tail_morphism, gen, gen, depth, k, seed, iid))
    eq = Tc.equality_at(depth)
    samples = C._sample(k, seed + 2, gen.pair_value)
    report.add(check_samples(
        "coalgebra.cut_tail", iid, depth, samples,
        lambda y: eq(tail(Tc.cut(y)), Tc.cut(tail(y))),
        lambda y: {"y": Tc.describe(y, depth)},
    ))
    return _coalg_report(report, depth, k)


def coalg_morphism_check(tau: C.RelComonadMorphism, source, target, source_gen: SampleGen,
                         target_gen: SampleGen, depth: int = 8, k: int = 50,
                         seed: int = 0) -> CoalgMorphismReport:
    """Comonad-morphism laws, cut compatibility (Tri case) and the coalgebra square.

    For stream coalgebras the square is tau(step x) = step'(tau x); for Tri
    coalgebras it is tau(tail^T x) = tail^S(tau x).
    """
    iid = tau.name
    is_tri = isinstance(source, TriCoalgebra)
    if is_tri:
        report = C.cut_morphism_law_check(tau, source_gen, target_gen, depth, k, seed, iid)
        step_s, step_t = source.tail_morphism.component, target.tail_morphism.component
    else:
        report = C.morphism_law_check(tau, source_gen, target_gen, depth, k, seed, iid)
        step_s, step_t = source.step.component, target.step.component
    eq = target.comonad.equality_at(depth)
    samples = C._sample(k, seed + 3, source_gen.value)
    report.add(check_samples(
        "coalgebra.morphism_square", iid, depth, samples,
        lambda x: eq(tau(step_s(x)), step_t(tau(x))),
        lambda x: {"x": source.comonad.describe(x, depth)},
    ))
    return _coalg_report(report, depth, k)


def uniqueness_check(C_, tau1: C.RelComonadMorphism, tau2: C.RelComonadMorphism,
                     source_gen: SampleGen, target_gen: SampleGen, depth: int = 10,
                     k: int = 50, seed: int = 0) -> LawReport:
    """Both candidates must be coalgebra morphisms into the terminal object; then they agree.

    A candidate failing its morphism laws is reported as a failed
    precondition; agreement is checked only when both pass.
    """
    target = terminal_tri_coalgebra() if isinstance(C_, TriCoalgebra) else terminal_stream_coalgebra()
    report = LawReport()
    iid = f"{tau1.name}|{tau2.name}"
    pre_ok = True
    for label, tau in (("tau1", tau1), ("tau2", tau2)):
        sub = coalg_morphism_check(tau, C_, target, source_gen, target_gen, depth, k, seed)
        if all(e.status == VACUOUS for e in sub.entries):
            report.add(LawEntry("uniqueness.precondition", f"{iid}:{label}", VACUOUS, depth, 0,
                                notes=["no samples"]))
        elif sub.ok:
            report.add(LawEntry("uniqueness.precondition", f"{iid}:{label}", PASS, depth, k))
        else:
            pre_ok = False
            bad = sub.failures[0]
            report.add(LawEntry("uniqueness.precondition", f"{iid}:{label}", FAIL, depth, k,
                                {"candidate": tau.name, "failed_law": bad.law_id,
                                 "failed_laws": sorted({e.law_id for e in sub.failures}),
                                 "detail": bad.counterexample}))
    if pre_ok:
        eq = target.comonad.equality_at(depth)
        samples = C._sample(k, seed + 4, source_gen.value)
        report.add(check_samples(
            "uniqueness.agree", iid, depth, samples,
            lambda x: eq(tau1(x), tau2(x)),
            lambda x: {"x": C_.comonad.describe(x, depth)},
        ))
    return report


def checked_terminal_to_stream(C_: StreamCoalgebra, x, gen: SampleGen, depth: int = 8, k: int = 20):
    """`terminal_to_stream`, warning (not refusing) when the coalgebra fails its own laws."""
    report = coalg_check_stream(C_, gen, depth, k)
    if not report.ok:
        warnings.warn(f"coalgebra {C_.name} fails {report.failures[0].law_id}", stacklevel=2)
        report.warnings.append(report.failures[0].law_id)
    return terminal_to_stream(C_, x), report


def checked_terminal_to_tri(C_: TriCoalgebra, x, gen: SampleGen, depth: int = 8, k: int = 20):
    report = coalg_check_tri(C_, gen, depth, k)
    if not report.ok:
        warnings.warn(f"coalgebra {C_.name} fails {report.failures[0].law_id}", stacklevel=2)
        report.warnings.append(report.failures[0].law_id)
    return terminal_to_tri(C_, x), report


# documented sabotages


def spurious_prepend(tau: C.RelComonadMorphism) -> C.RelComonadMorphism:
    """Candidate that repeats the head once before continuing with tau."""

    def component(x):
        s = tau(x)
        return S.Stream(Thunk(lambda: S.shead(s)), Thunk.ready(s))

    return C.RelComonadMorphism(tau.source, tau.target, component, f"{tau.name}[prepend]")


def spurious_tri_prepend(tau: C.RelComonadMorphism) -> C.RelComonadMorphism:
    """Tri candidate whose first tail layer repeats the head diagonal entry."""

    def component(x):
        t = tau(x)
        return T.Tri(t.head_cell, Thunk(lambda: _lagged_tail(t)))

    return C.RelComonadMorphism(tau.source, tau.target, component, f"{tau.name}[lag]")


def _lagged_tail(t: T.Tri) -> T.Tri:
    inner = T.ttail(t)
    return T.Tri(
        Thunk(lambda: T.Layer((T.thead(inner).prefix[0],) + T.thead(t).prefix, T.thead(t).core)),
        Thunk(lambda: T.ttail(inner)),
    )

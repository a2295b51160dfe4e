"""Comodules over relative comonads and the constructions on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import stream as S
from . import tri as T
from .comonad import (
    Equality,
    RelativeComonad,
    RelComonadMorphism,
    RelComonadWithCut,
    _describe_value,
    _notes_for,
    _sample,
)
from .lazy import PairValue, compose, identity
from .report import LawReport, check_samples
from .sampling import SampleGen, random_value_map


@dataclass(frozen=True)
class Comodule:
    name: str
    over: RelativeComonad
    mcobind: Callable[[Callable], Callable]
    equality_at: Equality
    describe: Callable[[Any, int], Any] = field(default=_describe_value, repr=False)

    def mlift(self, f: Callable) -> Callable:
        return mlift(self, f)


@dataclass(frozen=True)
class ComoduleMorphism:
    source: Comodule
    target: Comodule
    component: Callable[[Any], Any]
    name: str = "alpha"

    def __call__(self, x):
        return self.component(x)


def tautological(Tc: RelativeComonad) -> Comodule:
    return Comodule(f"taut({Tc.name})", Tc, Tc.cobind, Tc.equality_at, Tc.describe)


def mlift(M: Comodule, f: Callable) -> Callable:
    """mlift(f) = mcobind(counit ; f)."""
    return M.mcobind(compose(M.over.counit, f))


def pushforward(tau: RelComonadMorphism, M: Comodule) -> Comodule:
    """tau_* M over the target comonad: same carrier, mcobind(f) = mcobind^M(tau ; f)."""
    return Comodule(
        f"{tau.name}_*({M.name})", tau.target,
        lambda f: M.mcobind(compose(tau.component, f)),
        M.equality_at, M.describe,
    )


def pushforward_morphism(tau: RelComonadMorphism, alpha: ComoduleMorphism) -> ComoduleMorphism:
    return ComoduleMorphism(pushforward(tau, alpha.source), pushforward(tau, alpha.target),
                            alpha.component, f"{tau.name}_*({alpha.name})")


def induced(tau: RelComonadMorphism) -> ComoduleMorphism:
    """The morphism tau_* T -> S whose components are tau's."""
    return ComoduleMorphism(pushforward(tau, tautological(tau.source)), tautological(tau.target),
                            tau.component, f"induced({tau.name})")


def precompose_product(Tc: RelComonadWithCut, M: Comodule) -> Comodule:
    """M(E×_) over Tc: mcobind(f) = mcobind^M(extend f)."""
    return Comodule(f"{M.name}(E×_)", Tc, lambda f: M.mcobind(Tc.extend(f)), M.equality_at, M.describe)


def product_morphism(Tc: RelComonadWithCut, alpha: ComoduleMorphism) -> ComoduleMorphism:
    """alpha(E×_) : M(E×_) -> N(E×_), same components."""
    return ComoduleMorphism(precompose_product(Tc, alpha.source), precompose_product(Tc, alpha.target),
                            alpha.component, f"{alpha.name}(E×_)")


def identity_comodule_morphism(M: Comodule) -> ComoduleMorphism:
    return ComoduleMorphism(M, M, identity, f"id[{M.name}]")


# the destructors as comodule morphisms


def stail_morphism(Tc: RelativeComonad) -> ComoduleMorphism:
    M = tautological(Tc)
    return ComoduleMorphism(M, M, S.stail, "stail")


def tail_morphism(Tc: RelComonadWithCut) -> ComoduleMorphism:
    M = tautological(Tc)
    return ComoduleMorphism(M, precompose_product(Tc, M), T.ttail, "tail")


def cut_morphism(Tc: RelComonadWithCut) -> ComoduleMorphism:
    """cut : T(E×_) -> T."""
    M = tautological(Tc)
    return ComoduleMorphism(precompose_product(Tc, M), M, Tc.cut_op, f"cut[{Tc.name}]")


# law checks


def comodule_law_check(M: Comodule, carrier_gen: SampleGen, base_gen: SampleGen,
                       depth: int = 8, k: int = 50, seed: int = 0,
                       instance_id: Optional[str] = None) -> LawReport:
    """mcobind(counit) = id and mcobind(f);mcobind(g) = mcobind(cobind(f);g), plus mlift functoriality.

    `carrier_gen` samples values of M, `base_gen` supplies test functions on
    the base comonad's carrier.
    """
    iid = instance_id or M.name
    Tc = M.over
    eq = M.equality_at(depth)
    samples = _sample(k, seed, lambda rng: (carrier_gen.value(rng), base_gen.function(rng),
                                            base_gen.function(rng), random_value_map(rng),
                                            random_value_map(rng)))

    def describe(sample):
        x, f, g, h1, h2 = sample
        return {"x": M.describe(x, depth), "f": repr(f), "g": repr(g), "h1": repr(h1), "h2": repr(h2)}

    def ax_unit(sample):
        x = sample[0]
        return eq(M.mcobind(Tc.counit)(x), x)

    def ax_assoc(sample):
        x, f, g, *_ = sample
        return eq(M.mcobind(g)(M.mcobind(f)(x)), M.mcobind(compose(Tc.cobind(f), g))(x))

    def lift_identity(sample):
        x = sample[0]
        return eq(mlift(M, identity)(x), x)

    def lift_compose(sample):
        x, _, _, h1, h2 = sample
        return eq(mlift(M, compose(h1, h2))(x), mlift(M, h2)(mlift(M, h1)(x)))

    notes = _notes_for(*[fn for s in samples for fn in s[1:]])
    report = LawReport()
    for law_id, pred in [
        ("comodule.mcobind_of_counit", ax_unit),
        ("comodule.mcobind_assoc", ax_assoc),
        ("comodule.mlift_identity", lift_identity),
        ("comodule.mlift_compose", lift_compose),
    ]:
        report.add(check_samples(law_id, iid, depth, samples, pred, describe, notes))
    return report


def comodule_morphism_check(alpha: ComoduleMorphism, carrier_gen: SampleGen, base_gen: SampleGen,
                            depth: int = 8, k: int = 50, seed: int = 0,
                            instance_id: Optional[str] = None) -> LawReport:
    """The square mcobind^M(f);alpha = alpha;mcobind^N(f) and naturality w.r.t. mlift."""
    iid = instance_id or alpha.name
    M, N = alpha.source, alpha.target
    eq = N.equality_at(depth)
    samples = _sample(k, seed, lambda rng: (carrier_gen.value(rng), base_gen.function(rng),
                                            random_value_map(rng)))

    def describe(sample):
        x, f, h = sample
        return {"x": M.describe(x, depth), "f": repr(f), "h": repr(h)}

    def square(sample):
        x, f, _ = sample
        return eq(alpha(M.mcobind(f)(x)), N.mcobind(f)(alpha(x)))

    def naturality(sample):
        x, _, h = sample
        return eq(alpha(mlift(M, h)(x)), mlift(N, h)(alpha(x)))

    notes = _notes_for(*[fn for s in samples for fn in s[1:]])
    report = LawReport()
    report.add(check_samples("comodule_morphism.square", iid, depth, samples, square, describe, notes))
    report.add(check_samples("comodule_morphism.naturality", iid, depth, samples, naturality, describe, notes))
    return report


def pushforward_product_commute_check(tau: RelComonadMorphism, M: Comodule, carrier_gen: SampleGen,
                                      target_gen: SampleGen, depth: int = 8, k: int = 50,
                                      seed: int = 0, instance_id: Optional[str] = None,
                                      target_extend: Optional[Callable] = None) -> LawReport:
    """tau_*(M(E×_)) and (tau_*M)(E×_) have pointwise equal mcobind.

    Both tau.source and tau.target must carry a cut. `carrier_gen` samples
    M(E×A); test functions come from `target_gen`. `target_extend` replaces
    the target's extend (used to exercise the check with a broken extend).
    """
    iid = instance_id or f"{tau.name}/{M.name}"
    extend_s = target_extend or tau.target.extend
    left = pushforward(tau, precompose_product(tau.source, M))
    pushed = pushforward(tau, M)
    eq = M.equality_at(depth)
    samples = _sample(k, seed, lambda rng: (carrier_gen.pair_value(rng), target_gen.function(rng)))

    def describe(sample):
        y, f = sample
        return {"y": M.describe(y, depth), "f": repr(f)}

    def agree(sample):
        y, f = sample
        return eq(left.mcobind(f)(y), pushed.mcobind(extend_s(f))(y))

    report = LawReport()
    report.add(check_samples("comodule.pushforward_product_commute", iid, depth, samples, agree,
                             describe, _notes_for(*[s[1] for s in samples])))
    return report


# documented sabotages


def sabotaged_stail_morphism(Tc: RelativeComonad) -> ComoduleMorphism:
    """A tail that keeps every other element of the suffix."""
    M = tautological(Tc)
    return ComoduleMorphism(M, M, lambda s: S.every_other(S.stail(s)), "stail[double-step]")


def _reverse_prefixes(t):
    return T.tri_unfold(lambda u: T.Layer(tuple(reversed(T.thead(u).prefix)), T.thead(u).core),
                        T.ttail, t)


def sabotaged_tail_morphism(Tc: RelComonadWithCut) -> ComoduleMorphism:
    """tail whose layers carry their E entries in reversed order."""
    M = tautological(Tc)
    return ComoduleMorphism(M, precompose_product(Tc, M),
                            lambda t: _reverse_prefixes(T.ttail(t)), "tail[reversed]")


def sabotaged_extend(Tc: RelComonadWithCut) -> Callable:
    """extend that observes the uncut argument."""
    lift_pr1 = Tc.lift(lambda p: p.first)

    def bad(f):
        return lambda y: PairValue(Tc.counit(lift_pr1(y)), f(y))

    return bad

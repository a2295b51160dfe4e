"""Relative comonads over the Eq functor, their morphisms and the cut refinement.

A comonad here is a bundle of plain functions: `counit : TA -> A`,
`cobind : (TA -> B) -> (TA -> TB)` and a depth-parametric equivalence on
carrier values. Because the base functor is Eq, values of A are compared
structurally and functions need no translation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Optional

from . import stream as S
from . import tri as T
from .lazy import EQ, PairValue, Thunk, compose, identity, phi_inv, pr1, pr2
from .report import LawReport, check_samples
from .sampling import SampleGen, is_verified, random_value_map

Equality = Callable[[int], Callable[[Any, Any], bool]]


def structural_equality(_depth: int):
    return lambda x, y: x == y


def _describe_value(x, _depth):
    return x


@dataclass(frozen=True)
class RelativeComonad:
    name: str
    counit: Callable[[Any], Any]
    cobind: Callable[[Callable], Callable]
    equality_at: Equality = structural_equality
    describe: Callable[[Any, int], Any] = field(default=_describe_value, repr=False)

    def equal(self, depth: int, x, y) -> bool:
        return self.equality_at(depth)(x, y)

    def lift(self, f: Callable) -> Callable:
        return lift(self, f)


@dataclass(frozen=True)
class RelComonadWithCut(RelativeComonad):
    """A relative comonad with `cut_op : T(E×A) -> TA`."""

    cut_op: Callable[[Any], Any] = None
    entry_domain: str = "E"

    @property
    def base(self) -> RelativeComonad:
        return RelativeComonad(self.name, self.counit, self.cobind, self.equality_at, self.describe)

    def cut(self, y):
        return self.cut_op(y)

    def extend(self, f: Callable) -> Callable:
        """extend(f) = <T(pr1);counit_E, cut;f> ; phi^-1."""
        lift_pr1 = lift(self, pr1)
        counit, cut_op = self.counit, self.cut_op

        def extended(y):
            return phi_inv(PairValue(counit(lift_pr1(y)), f(cut_op(y))))

        return extended


@dataclass(frozen=True)
class RelComonadMorphism:
    source: RelativeComonad
    target: RelativeComonad
    component: Callable[[Any], Any]
    name: str = "tau"

    def __call__(self, x):
        return self.component(x)


def with_cut(T: RelativeComonad, cut_op: Callable, name: Optional[str] = None,
             entry_domain: str = "E") -> RelComonadWithCut:
    return RelComonadWithCut(
        name or T.name, T.counit, T.cobind, T.equality_at, T.describe,
        cut_op=cut_op, entry_domain=entry_domain,
    )


def lift(T: RelativeComonad, f: Callable) -> Callable:
    """Functorial action: lift(f) = cobind(counit ; f)."""
    return T.cobind(compose(T.counit, f))


def identity_morphism(T: RelativeComonad) -> RelComonadMorphism:
    return RelComonadMorphism(T, T, identity, f"id[{T.name}]")


def compose_morphisms(m1: RelComonadMorphism, m2: RelComonadMorphism) -> RelComonadMorphism:
    return RelComonadMorphism(m1.source, m2.target, compose(m1.component, m2.component),
                              f"{m1.name};{m2.name}")


# instances


def _stream_equality(depth):
    return lambda s, t: S.stream_bisim_depth(depth, EQ, s, t)


def _tri_equality(depth):
    def equal(s, t):
        try:
            return T.tri_bisim_depth(depth, EQ, EQ, s, t)
        except ValueError:
            return False

    return equal


def _stream_describe(s, depth):
    return S.stake(depth, s)


def _tri_describe(t, depth):
    return T.truncate(depth, t).to_json()


def stream_comonad() -> RelativeComonad:
    return RelativeComonad(
        "stream", S.shead, lambda f: (lambda s: S.sredec(f, s)), _stream_equality, _stream_describe
    )


def tri_comonad(E: str = "int") -> RelComonadWithCut:
    """Triangular matrices with redecoration and their own (non-canonical) cut."""
    return RelComonadWithCut(
        "tri", T.counit, lambda f: (lambda t: T.redec(f, t)), _tri_equality, _tri_describe,
        cut_op=T.cut, entry_domain=E,
    )


def from_ordinary_comonad(counit: Callable, cobind: Callable, name: str,
                          equality_at: Equality = structural_equality,
                          describe=_describe_value) -> RelativeComonad:
    """Relative comonad Eq∘M from a comonad M on plain types.

    Eq is fully faithful and acts as the identity on functions, so counit
    and cobind carry over unchanged.
    """
    return RelativeComonad(name, counit, cobind, equality_at, describe)


def identity_comonad() -> RelativeComonad:
    return from_ordinary_comonad(identity, lambda f: f, "identity")


def env_comonad() -> RelativeComonad:
    """The environment comonad MA = E0×A: counit pr2, cobind f keeps the environment."""
    return from_ordinary_comonad(
        pr2, lambda f: (lambda p: PairValue(p.first, f(p))), "env"
    )


def product_comonad(T_: RelativeComonad, name: Optional[str] = None) -> RelativeComonad:
    """A -> T(E×A) with counit lift(pr2);counit and cobind(f) = cobind^T(<T(pr1);counit_E, f>;phi^-1)."""
    lift_pr1, lift_pr2 = lift(T_, pr1), lift(T_, pr2)
    counit = compose(lift_pr2, T_.counit)

    def extend_prime(f):
        return lambda y: phi_inv(PairValue(T_.counit(lift_pr1(y)), f(y)))

    return RelativeComonad(
        name or f"product({T_.name})", counit,
        lambda f: T_.cobind(extend_prime(f)),
        T_.equality_at, T_.describe,
    )


def canonical_cut(T_: RelativeComonad, E: str = "E") -> RelComonadWithCut:
    """Equip any comonad with ccut = lift(pr2)."""
    return with_cut(T_, lift(T_, pr2), f"ccut({T_.name})", E)


def diag_morphism(source: Optional[RelativeComonad] = None,
                  target: Optional[RelativeComonad] = None) -> RelComonadMorphism:
    return RelComonadMorphism(source or tri_comonad(), target or stream_comonad(), T.diag, "diag")


# law checks


def _notes_for(*fns):
    if all(is_verified(f) for f in fns):
        return []
    return ["unverified setoid morphism"]


def _sample(k: int, seed: int, make):
    rng = random.Random(seed)
    return [make(rng) for _ in range(k)]


def comonad_law_check(Tc: RelativeComonad, gen: SampleGen, depth: int = 8, k: int = 50,
                      seed: int = 0, instance_id: Optional[str] = None) -> LawReport:
    """The three relative-comonad axioms plus functoriality of `lift`, on k samples each."""
    iid = instance_id or Tc.name
    eq = Tc.equality_at(depth)
    samples = _sample(k, seed, lambda rng: (gen.value(rng), gen.function(rng), gen.function(rng),
                                            random_value_map(rng), random_value_map(rng)))

    def describe(sample):
        x, f, g, h1, h2 = sample
        return {"x": Tc.describe(x, depth), "f": repr(f), "g": repr(g), "h1": repr(h1), "h2": repr(h2)}

    def ax_counit(sample):
        x, f, *_ = sample
        return Tc.counit(Tc.cobind(f)(x)) == f(x)

    def ax_unit(sample):
        x = sample[0]
        return eq(Tc.cobind(Tc.counit)(x), x)

    def ax_assoc(sample):
        x, f, g, *_ = sample
        cf = Tc.cobind(f)
        return eq(Tc.cobind(g)(cf(x)), Tc.cobind(compose(cf, g))(x))

    def lift_identity(sample):
        x = sample[0]
        return eq(lift(Tc, identity)(x), x)

    def lift_compose(sample):
        x, _, _, h1, h2 = sample
        return eq(lift(Tc, compose(h1, h2))(x), lift(Tc, h2)(lift(Tc, h1)(x)))

    notes = _notes_for(*[fn for s in samples for fn in s[1:]])
    report = LawReport()
    for law_id, pred in [
        ("comonad.cobind_counit", ax_counit),
        ("comonad.cobind_of_counit", ax_unit),
        ("comonad.cobind_assoc", ax_assoc),
        ("comonad.lift_identity", lift_identity),
        ("comonad.lift_compose", lift_compose),
    ]:
        report.add(check_samples(law_id, iid, depth, samples, pred, describe, notes))
    return report


def cut_law_check(Tc: RelComonadWithCut, gen: SampleGen, depth: int = 8, k: int = 50,
                  seed: int = 0, instance_id: Optional[str] = None) -> LawReport:
    """The two axioms of a comonad with cut, on carrier samples at E×A."""
    iid = instance_id or Tc.name
    eq = Tc.equality_at(depth)
    samples = _sample(k, seed, lambda rng: (gen.pair_value(rng), gen.function(rng)))
    lift_pr2 = lift(Tc, pr2)

    def describe(sample):
        y, f = sample
        return {"y": Tc.describe(y, depth), "f": repr(f)}

    def ax_counit(sample):
        y = sample[0]
        return Tc.counit(Tc.cut(y)) == Tc.counit(lift_pr2(y))

    def ax_cobind(sample):
        y, f = sample
        return eq(Tc.cobind(f)(Tc.cut(y)), Tc.cut(Tc.cobind(Tc.extend(f))(y)))

    notes = _notes_for(*[s[1] for s in samples])
    report = LawReport()
    report.add(check_samples("cut.counit", iid, depth, samples, ax_counit, describe, notes))
    report.add(check_samples("cut.cobind", iid, depth, samples, ax_cobind, describe, notes))
    return report


def morphism_law_check(m: RelComonadMorphism, source_gen: SampleGen, target_gen: SampleGen,
                       depth: int = 8, k: int = 50, seed: int = 0,
                       instance_id: Optional[str] = None) -> LawReport:
    """Counit and cobind compatibility of a comonad morphism, plus naturality w.r.t. lift."""
    iid = instance_id or m.name
    src, tgt = m.source, m.target
    eq = tgt.equality_at(depth)
    samples = _sample(k, seed, lambda rng: (source_gen.value(rng), target_gen.function(rng),
                                            random_value_map(rng)))

    def describe(sample):
        x, f, h = sample
        return {"x": src.describe(x, depth), "f": repr(f), "h": repr(h)}

    def counit_law(sample):
        x = sample[0]
        return src.counit(x) == tgt.counit(m(x))

    def cobind_law(sample):
        x, f, _ = sample
        return eq(m(src.cobind(compose(m.component, f))(x)), tgt.cobind(f)(m(x)))

    def naturality(sample):
        x, _, h = sample
        return eq(m(lift(src, h)(x)), lift(tgt, h)(m(x)))

    notes = _notes_for(*[fn for s in samples for fn in s[1:]])
    report = LawReport()
    report.add(check_samples("morphism.counit", iid, depth, samples, counit_law, describe, notes))
    report.add(check_samples("morphism.cobind", iid, depth, samples, cobind_law, describe, notes))
    report.add(check_samples("morphism.naturality", iid, depth, samples, naturality, describe, notes))
    return report


def cut_morphism_law_check(m: RelComonadMorphism, source_gen: SampleGen, target_gen: SampleGen,
                           depth: int = 8, k: int = 50, seed: int = 0,
                           instance_id: Optional[str] = None) -> LawReport:
    """Comonad-morphism laws plus tau_{E×A} ; cut^S = cut^T ; tau_A."""
    iid = instance_id or m.name
    report = morphism_law_check(m, source_gen, target_gen, depth, k, seed, iid)
    src, tgt = m.source, m.target
    eq = tgt.equality_at(depth)
    samples = _sample(k, seed + 1, source_gen.pair_value)

    def cut_law(y):
        return eq(tgt.cut(m(y)), m(src.cut(y)))

    report.add(check_samples("morphism.cut", iid, depth, samples, cut_law,
                             lambda y: {"y": src.describe(y, depth)}))
    return report


# documented sabotages


def sabotaged_stream_comonad() -> RelativeComonad:
    """cobind that skips one tail before redecorating."""
    return replace(stream_comonad(), name="stream[skip-tail cobind]",
                   cobind=lambda f: (lambda s: S.sredec(f, S.stail(s))))


def sabotaged_cut(y):
    """Drops the second-newest E entry of each layer instead of the newest."""

    def head():
        layer = T.thead(y)
        if len(layer.prefix) < 2:
            return layer.pr2()
        return T.Layer(layer.prefix[:1] + layer.prefix[2:], layer.core)

    return T.Tri(Thunk(head), Thunk(lambda: sabotaged_cut(T.ttail(y))))


def sabotaged_tri_comonad() -> RelComonadWithCut:
    return replace(tri_comonad(), name="tri[drop-second cut]", cut_op=sabotaged_cut)


def sabotaged_diag() -> RelComonadMorphism:
    """Diagonal that starts one step late."""
    return RelComonadMorphism(tri_comonad(), stream_comonad(),
                              lambda t: T.diag(T.cut(T.ttail(t))), "diag[late]")

"""Registered instances and the consolidated law-suite runner."""

from __future__ import annotations

import json
import os
import random
import zlib
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from . import coalgebra as K
from . import comodule as M
from . import comonad as C
from . import sampling as G
from . import stream as S
from . import tri as T
from .lazy import PairValue
from .report import FAIL, PASS, VACUOUS, LawEntry, LawReport

DEFAULT_SEED = 0xC0DA7A


def default_seed() -> int:
    env = os.environ.get("CODATA_SEED")
    return int(env, 0) if env else DEFAULT_SEED


@dataclass
class GenConfig:
    depth: int = 10
    samples: int = 100
    seed: int = field(default_factory=default_seed)
    mutations: bool = False


# generators


def _stake(s, k):
    return S.stake(k, s)


def _truncate(t, k):
    return T.truncate(k, t)


def _value(x, _k):
    return x


def _ttail_pair_tri(rng):
    return T.ttail(G.random_pair_tri(rng))


def _nested_pair_stream(rng):
    es = G.random_stream(rng)
    return S.stream_corec(
        lambda st: PairValue(S.shead(st[0]), S.shead(st[1])),
        lambda st: (S.stail(st[0]), S.stail(st[1])),
        (es, G.random_pair_stream(rng)),
    )


GENS = {
    "stream": G.SampleGen("stream", G.random_stream, _stake, G.random_pair_stream, 4),
    "pair_stream": G.SampleGen("pair_stream", G.random_pair_stream, _stake, _nested_pair_stream, 4),
    "tri": G.SampleGen("tri", G.random_tri, _truncate, G.random_pair_tri, 3),
    "pair_tri": G.SampleGen("pair_tri", G.random_pair_tri, _truncate, _ttail_pair_tri, 3),
    "int": G.SampleGen("int", G.random_int, _value, G.random_pair, 1),
    "env": G.SampleGen("env", G.random_pair, _value, None, 1),
}


# registry


@dataclass(frozen=True)
class Check:
    group: str
    instance_id: str
    run: Callable[[int, int, int], LawReport]
    mutant: bool = False


def _seed_for(seed: int, instance_id: str) -> int:
    return (seed ^ zlib.crc32(instance_id.encode())) & 0xFFFFFFFF


def _coinduction_samples(k, seed):
    rng = random.Random(seed)
    return [(S.sdrop(n, S.nats()), S.sdrop(n, S.nats())) for n in (rng.randrange(20) for _ in range(k))]


def _tri_coinduction_samples(k, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(k):
        a, e = rng.randrange(G.MOD), rng.randrange(G.MOD)
        out.append((T.constant_tri(a, e), T.constant_tri(a, e)))
    return out


def _same_shift(s, t):
    return S.shead(s) == S.shead(t)


def _same_constant(s, t):
    return T.thead(s) == T.thead(t) and s.wrap_count == t.wrap_count


def registry() -> list:
    gs, gps, gt, gpt = GENS["stream"], GENS["pair_stream"], GENS["tri"], GENS["pair_tri"]
    st, tr = C.stream_comonad(), C.tri_comonad()
    cst, ctr = C.canonical_cut(st), C.canonical_cut(tr)
    diag = C.diag_morphism(tr, st)
    diag_c = C.diag_morphism(tr, cst)
    taut_st, taut_tr = M.tautological(st), M.tautological(tr)
    tail = M.tail_morphism(tr)

    coalg_stream = K.terminal_stream_coalgebra()
    coalg_diag = K.tri_diagonal_coalgebra()
    coalg_tri = K.terminal_tri_coalgebra()
    coalg_prod = K.product_tri_coalgebra()
    term_stream = K.terminal_stream_morphism(coalg_stream)
    term_diag = K.terminal_stream_morphism(coalg_diag)
    term_tri = K.terminal_tri_morphism(coalg_tri)
    term_prod = K.terminal_tri_morphism(coalg_prod)
    id_stream = C.RelComonadMorphism(st, st, lambda x: x, "id[stream]")
    id_tri = C.RelComonadMorphism(tr, tr, lambda x: x, "id[tri]")

    def comonad(T_, g, iid=None, mutant=False):
        iid = iid or T_.name
        return Check("comonad", iid, lambda d, k, s: C.comonad_law_check(T_, g, d, k, s, iid), mutant)

    def cut(T_, g, iid=None, mutant=False):
        iid = iid or T_.name
        return Check("cut", iid, lambda d, k, s: C.cut_law_check(T_, g, d, k, s, iid), mutant)

    def morphism(m, sg, tg, with_cut=False, mutant=False):
        fn = C.cut_morphism_law_check if with_cut else C.morphism_law_check
        iid = m.name + ("+cut" if with_cut else "")
        return Check("morphism", iid, lambda d, k, s: fn(m, sg, tg, d, k, s, iid), mutant)

    def comodule(Mc, cg, bg, mutant=False):
        return Check("comodule", Mc.name, lambda d, k, s: M.comodule_law_check(Mc, cg, bg, d, k, s), mutant)

    def comod_morphism(a, cg, bg, mutant=False):
        return Check("comodule_morphism", a.name,
                     lambda d, k, s: M.comodule_morphism_check(a, cg, bg, d, k, s), mutant)

    def commute(tau, Mc, cg, tg, iid, mutant=False, target_extend=None):
        return Check("comodule", iid, lambda d, k, s: M.pushforward_product_commute_check(
            tau, Mc, cg, tg, d, k, s, iid, target_extend), mutant)

    def coalg(Cc, g, mutant=False):
        fn = K.coalg_check_tri if isinstance(Cc, K.TriCoalgebra) else K.coalg_check_stream
        return Check("coalgebra", f"coalg[{Cc.name}]", lambda d, k, s: fn(Cc, g, d, k, s), mutant)

    def coalg_morphism(tau, src, tgt, sg, tg, mutant=False):
        return Check("coalgebra_morphism", tau.name,
                     lambda d, k, s: K.coalg_morphism_check(tau, src, tgt, sg, tg, d, k, s), mutant)

    def unique(Cc, t1, t2, sg, tg, mutant=False):
        return Check("uniqueness", f"{t1.name}|{t2.name}",
                     lambda d, k, s: K.uniqueness_check(Cc, t1, t2, sg, tg, d, k, s), mutant)

    checks = [
        Check("coinduction", "stream[same shift of nats]",
              lambda d, k, s: S.stream_coinduction_check(_same_shift, S.EQ, _coinduction_samples(k, s), d,
                                                         "stream[same shift of nats]")),
        Check("coinduction", "tri[same constant]",
              lambda d, k, s: T.tri_coinduction_check(_same_constant, T.EQ, T.EQ,
                                                      _tri_coinduction_samples(k, s), d, "tri[same constant]")),
        comonad(st, gs),
        comonad(tr, gt),
        comonad(C.product_comonad(tr), gpt),
        comonad(C.product_comonad(st), gps),
        comonad(C.identity_comonad(), GENS["int"]),
        comonad(C.env_comonad(), GENS["env"]),
        cut(tr, gt),
        cut(cst, gs),
        cut(ctr, gt),
        cut(coalg_prod.comonad_with_cut, gpt),
        morphism(diag, gt, gs),
        morphism(diag_c, gt, gs, with_cut=True),
        morphism(id_stream, gs, gs),
        morphism(id_tri, gt, gt, with_cut=True),
        comodule(taut_st, gs, gs),
        comodule(taut_tr, gt, gt),
        comodule(M.precompose_product(tr, taut_tr), gpt, gt),
        comodule(M.precompose_product(cst, M.tautological(cst)), gps, gs),
        comodule(M.pushforward(diag, taut_tr), gt, gs),
        comodule(M.pushforward(id_tri, taut_tr), gt, gt),
        comod_morphism(M.stail_morphism(st), gs, gs),
        comod_morphism(tail, gt, gt),
        comod_morphism(M.cut_morphism(tr), gpt, gt),
        comod_morphism(M.induced(diag), gt, gs),
        comod_morphism(M.induced(id_tri), gt, gt),
        comod_morphism(M.pushforward_morphism(diag, tail), gt, gs),
        comod_morphism(M.product_morphism(tr, tail), gpt, gt),
        commute(id_tri, taut_tr, gt, gt, "id[tri]/taut(tri)"),
        commute(diag_c, taut_tr, gt, gs, "diag/taut(tri)"),
        coalg(coalg_stream, gs),
        coalg(coalg_diag, gt),
        coalg(coalg_tri, gt),
        coalg(coalg_prod, gpt),
        coalg_morphism(term_stream, coalg_stream, coalg_stream, gs, gs),
        coalg_morphism(term_diag, coalg_diag, coalg_stream, gt, gs),
        coalg_morphism(term_tri, coalg_tri, coalg_tri, gt, gt),
        coalg_morphism(term_prod, coalg_prod, coalg_tri, gpt, gt),
        unique(coalg_diag, term_diag, diag, gt, gs),
        unique(coalg_stream, term_stream, id_stream, gs, gs),
        unique(coalg_tri, term_tri, id_tri, gt, gt),
    ]

    mutants = [
        comonad(C.sabotaged_stream_comonad(), gs, mutant=True),
        cut(C.sabotaged_tri_comonad(), gt, mutant=True),
        morphism(C.sabotaged_diag(), gt, gs, mutant=True),
        comod_morphism(M.sabotaged_stail_morphism(st), gs, gs, mutant=True),
        comod_morphism(M.sabotaged_tail_morphism(tr), gt, gt, mutant=True),
        commute(diag_c, taut_tr, gt, gs, "diag/taut(tri)[broken extend]", mutant=True,
                target_extend=M.sabotaged_extend(cst)),
        coalg(K.canonical_cut_tri_coalgebra(), gt, mutant=True),
        coalg_morphism(K.spurious_prepend(term_diag), coalg_diag, coalg_stream, gt, gs, mutant=True),
        coalg_morphism(K.spurious_tri_prepend(term_tri), coalg_tri, coalg_tri, gt, gt, mutant=True),
        unique(coalg_diag, term_diag, K.spurious_prepend(term_diag), gt, gs, mutant=True),
    ]
    return checks + mutants


def run_check(check: Check, cfg: GenConfig) -> LawReport:
    report = check.run(cfg.depth, cfg.samples, _seed_for(cfg.seed, check.instance_id))
    if check.mutant:
        for e in report.entries:
            e.instance_id = f"mutant:{e.instance_id}"
    return report


def run_all_laws(cfg: GenConfig = None) -> LawReport:
    """Every registered (law, instance) pair; mutants only when `cfg.mutations` is set."""
    cfg = cfg or GenConfig()
    report = LawReport()
    for check in registry():
        if check.mutant and not cfg.mutations:
            continue
        report.extend(run_check(check, cfg))
    return report


def law_catalog() -> dict:
    return json.loads(resources.files("codata").joinpath("laws.json").read_text())


__all__ = ["GenConfig", "GENS", "Check", "registry", "run_check", "run_all_laws", "law_catalog",
           "DEFAULT_SEED", "default_seed", "PASS", "FAIL", "VACUOUS", "LawEntry"]

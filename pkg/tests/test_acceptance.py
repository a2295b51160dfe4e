"""Acceptance criteria, each at its stated depth, sample count and tolerance.

A summary with one PASS/FAIL line per criterion is printed at the end of the
pytest run.
"""

import random
import subprocess
import sys

import pytest

from codata import coalgebra as K
from codata import comodule as M
from codata import comonad as C
from codata import stream as S
from codata import tri as T
from codata.harness import GENS
from codata.lazy import EQ

gs, gps, gt, gpt = GENS["stream"], GENS["pair_stream"], GENS["tri"], GENS["pair_tri"]
SEED = 0xC0DA7A


def assert_ok(report, label):
    assert report.ok, f"{label}: {[(e.law_id, e.instance_id) for e in report.failures]}"
    assert all(e.samples > 0 for e in report.entries), f"{label}: vacuous entries"


def assert_fails(report, label):
    assert not report.ok, f"{label} should fail"


@pytest.mark.criterion(1, "computation rules, 100 corec inputs each, depth 10, exact")
def test_computation_rules():
    rng = random.Random(SEED)
    for _ in range(100):
        a, b, c = rng.randrange(-9, 10), rng.randrange(1, 6), rng.randrange(97)
        hd = lambda x, a=a, c=c: (a * x + c) % 97
        tl = lambda x, b=b: x + b
        seed = rng.randrange(1000)
        s, state = S.stream_corec(hd, tl, seed), seed
        for _ in range(10):
            assert S.shead(s) == hd(state)
            s, state = S.stail(s), tl(state)

    for _ in range(100):
        a, b, c = rng.randrange(1, 9), rng.randrange(1, 6), rng.randrange(97)
        hd = lambda x, tag, a=a, c=c: T.Layer(tuple((a * x + i) % 97 for i in range(tag)), (x + c) % 97)
        tl = lambda x, b=b: x + b
        seed = T.TriCoalgSeed(rng.randrange(1000), rng.randrange(3), hd, tl)
        t = T.tri_corec(seed)
        for _ in range(10):
            assert T.thead(t) == seed.hd(seed.state, seed.depth_tag)
            t, seed = T.ttail(t), seed.advance()


@pytest.mark.criterion(2, "relative-comonad law suite at depth 8, 50 samples; mutations fail")
def test_comonad_suite():
    for Tc, gen in [
        (C.stream_comonad(), gs),
        (C.tri_comonad(), gt),
        (C.product_comonad(C.tri_comonad()), gpt),
        (C.identity_comonad(), GENS["int"]),
        (C.env_comonad(), GENS["env"]),
    ]:
        assert_ok(C.comonad_law_check(Tc, gen, 8, 50, SEED), Tc.name)
    assert_fails(C.comonad_law_check(C.sabotaged_stream_comonad(), gs, 8, 50, SEED), "skip-tail cobind")
    assert_fails(C.cut_law_check(C.sabotaged_tri_comonad(), gt, 8, 50, SEED), "drop-second cut")
    assert_fails(C.morphism_law_check(C.sabotaged_diag(), gt, gs, 8, 50, SEED), "late diag")


@pytest.mark.criterion(3, "with-cut laws and cut;tail = tail;cut for Tri at depth 8")
def test_cut_laws():
    report = K.coalg_check_tri(K.terminal_tri_coalgebra(), gt, 8, 50, SEED)
    assert_ok(report, "(tri, tail, cut)")
    assert report.status_of("cut.counit") == "pass"
    assert report.status_of("cut.cobind") == "pass"
    assert report.status_of("coalgebra.cut_tail") == "pass"


@pytest.mark.criterion(4, "comodule suite at depth 8, 50 samples")
def test_comodule_suite():
    tr, st_ = C.tri_comonad(), C.stream_comonad()
    diag = C.diag_morphism(tr, st_)
    taut_tr = M.tautological(tr)
    for comod, cg, bg in [
        (M.tautological(st_), gs, gs),
        (taut_tr, gt, gt),
        (M.precompose_product(tr, taut_tr), gpt, gt),
        (M.pushforward(diag, taut_tr), gt, gs),
        (M.pushforward(C.identity_morphism(tr), taut_tr), gt, gt),
    ]:
        assert_ok(M.comodule_law_check(comod, cg, bg, 8, 50, SEED), comod.name)
    for alpha, cg, bg in [
        (M.induced(diag), gt, gs),
        (M.induced(C.identity_morphism(tr)), gt, gt),
        (M.stail_morphism(st_), gs, gs),
        (M.tail_morphism(tr), gt, gt),
        (M.cut_morphism(tr), gpt, gt),
    ]:
        assert_ok(M.comodule_morphism_check(alpha, cg, bg, 8, 50, SEED), alpha.name)


def _position_and_constant_samples(k):
    rng = random.Random(SEED)
    out = []
    for i in range(k):
        if i % 2 == 0:
            out.append(T.position_matrix())
        else:
            out.append(T.constant_tri(rng.randrange(97), rng.randrange(97)))
    return out


@pytest.mark.criterion(5, "stream terminality: identity at depth 15, diag at depth 10 on 50 samples")
def test_stream_terminality():
    term = K.terminal_stream_coalgebra()
    rng = random.Random(SEED)
    for s in [S.nats()] + [gs.value(rng) for _ in range(49)]:
        assert S.stream_bisim_depth(15, EQ, K.terminal_to_stream(term, s), s)
    diag_coalg = K.tri_diagonal_coalgebra()
    for t in _position_and_constant_samples(50):
        assert S.stream_bisim_depth(10, EQ, K.terminal_to_stream(diag_coalg, t), T.diag(t))


@pytest.mark.criterion(6, "Tri terminality: identity and cut at depth 10; morphism check passes")
def test_tri_terminality():
    term, prod = K.terminal_tri_coalgebra(), K.product_tri_coalgebra()
    rng = random.Random(SEED)
    for t in [T.position_matrix()] + [gt.value(rng) for _ in range(49)]:
        assert T.tri_bisim_depth(10, EQ, EQ, K.terminal_to_tri(term, t), t)
    for y in [T.ttail(T.position_matrix())] + [gpt.value(rng) for _ in range(49)]:
        assert T.tri_bisim_depth(10, EQ, EQ, K.terminal_to_tri(prod, y), T.cut(y))
    assert_ok(K.coalg_morphism_check(K.terminal_tri_morphism(term), term, term, gt, gt, 10, 50, SEED),
              "terminal[tri]")
    assert_ok(K.coalg_morphism_check(K.terminal_tri_morphism(prod), prod, term, gpt, gt, 10, 50, SEED),
              "terminal[product(tri)]")


@pytest.mark.criterion(7, "uniqueness against diag at depth 10, 50 samples; sabotages fail the square")
def test_uniqueness():
    diag_coalg, s_term = K.tri_diagonal_coalgebra(), K.terminal_stream_coalgebra()
    tri_term = K.terminal_tri_coalgebra()
    constructed = K.terminal_stream_morphism(diag_coalg)
    diag = C.diag_morphism(C.tri_comonad(), C.stream_comonad())
    report = K.uniqueness_check(diag_coalg, constructed, diag, gt, gs, 10, 50, SEED)
    assert_ok(report, "terminal vs diag")
    assert report.status_of("uniqueness.agree") == "pass"
    for t in _position_and_constant_samples(50):
        assert S.stream_bisim_depth(10, EQ, constructed(t), diag(t))

    for bad, src, tgt, sg, tg in [
        (K.spurious_prepend(constructed), diag_coalg, s_term, gt, gs),
        (K.spurious_tri_prepend(K.terminal_tri_morphism(tri_term)), tri_term, tri_term, gt, gt),
    ]:
        report = K.coalg_morphism_check(bad, src, tgt, sg, tg, 10, 50, SEED)
        assert report.status_of("coalgebra.morphism_square") == "fail", bad.name
    sabotaged = K.uniqueness_check(diag_coalg, constructed, K.spurious_prepend(constructed), gt, gs, 10, 50, SEED)
    assert sabotaged.status_of("uniqueness.precondition") == "fail"


@pytest.mark.criterion(8, "two runs of `codata laws --json` with the same seed are byte-identical")
def test_determinism():
    cmd = [sys.executable, "-m", "codata.cli", "laws", "--depth", "10", "--samples", "100",
           "--seed", str(SEED), "--json"]
    procs = [subprocess.Popen(cmd, stdout=subprocess.PIPE, stderr=subprocess.PIPE) for _ in range(2)]
    outputs = [p.communicate(timeout=300) for p in procs]
    for p, (out, err) in zip(procs, outputs):
        assert p.returncode == 0, err.decode()
    assert outputs[0][0] == outputs[1][0]
    assert outputs[0][0].startswith(b"{")

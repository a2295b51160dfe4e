import random

from codata import comodule as M
from codata import comonad as C
from codata import stream as S
from codata import tri as T
from codata.harness import GENS
from codata.lazy import EQ, PairValue
from codata.report import FAIL

D, K = 6, 20
gs, gps, gt, gpt = GENS["stream"], GENS["pair_stream"], GENS["tri"], GENS["pair_tri"]


def law_ids(report):
    return {e.law_id for e in report.entries}


def test_tautological_basics():
    st_ = C.stream_comonad()
    taut = M.tautological(st_)
    assert taut.over is st_ and taut.mcobind is st_.cobind
    assert S.stream_bisim_depth(10, EQ, taut.mcobind(S.shead)(S.nats()), S.nats())


def test_mlift_matches_comonad_lift():
    st_ = C.stream_comonad()
    succ = lambda x: x + 1
    assert S.stake(5, M.mlift(M.tautological(st_), succ)(S.nats())) == S.stake(5, st_.lift(succ)(S.nats()))


def test_comodule_laws_pass():
    tr, st_ = C.tri_comonad(), C.stream_comonad()
    cst = C.canonical_cut(st_)
    diag = C.diag_morphism(tr, st_)
    cases = [
        (M.tautological(st_), gs, gs),
        (M.tautological(tr), gt, gt),
        (M.precompose_product(tr, M.tautological(tr)), gpt, gt),
        (M.precompose_product(cst, M.tautological(cst)), gps, gs),
        (M.pushforward(diag, M.tautological(tr)), gt, gs),
    ]
    for comod, cg, bg in cases:
        report = M.comodule_law_check(comod, cg, bg, D, K, seed=5)
        assert report.ok, (comod.name, report.failures)
        assert law_ids(report) == {"comodule.mcobind_of_counit", "comodule.mcobind_assoc",
                                   "comodule.mlift_identity", "comodule.mlift_compose"}


def test_pushforward_along_identity_is_the_same_comodule():
    tr = C.tri_comonad()
    taut = M.tautological(tr)
    pushed = M.pushforward(C.identity_morphism(tr), taut)
    rng = random.Random(1)
    for _ in range(10):
        t, f = gt.value(rng), gt.function(rng)
        assert T.tri_bisim_depth(6, EQ, EQ, pushed.mcobind(f)(t), taut.mcobind(f)(t))


def test_functoriality_keeps_components():
    tr = C.tri_comonad()
    tail = M.tail_morphism(tr)
    diag = C.diag_morphism(tr, C.stream_comonad())
    assert M.pushforward_morphism(diag, tail).component is tail.component
    assert M.product_morphism(tr, tail).component is tail.component
    assert M.induced(diag).component is diag.component


def test_induced_identity_is_identity():
    tr = C.tri_comonad()
    ind = M.induced(C.identity_morphism(tr))
    p = T.position_matrix()
    assert ind(p) is p
    assert M.comodule_morphism_check(ind, gt, gt, D, K).ok


def test_induced_diag_square():
    diag = C.diag_morphism(C.tri_comonad(), C.stream_comonad())
    assert M.comodule_morphism_check(M.induced(diag), gt, gs, D, K).ok


def test_precompose_product_reproduces_redec_of_extend():
    tr = C.tri_comonad()
    comod = M.precompose_product(tr, M.tautological(tr))
    rng = random.Random(2)
    for _ in range(20):
        y, f = gpt.value(rng), gt.function(rng)
        assert T.tri_bisim_depth(8, EQ, EQ, comod.mcobind(f)(y), T.redec(T.extend(f), y))


def test_identity_lifts_to_identity():
    tr = C.tri_comonad()
    ident = M.identity_comodule_morphism(M.tautological(tr))
    lifted = M.product_morphism(tr, ident)
    p = T.ttail(T.position_matrix())
    assert lifted(p) is p
    assert M.comodule_morphism_check(lifted, gpt, gt, D, K).ok


def test_destructor_morphisms_pass():
    st_, tr = C.stream_comonad(), C.tri_comonad()
    for alpha, cg, bg in [
        (M.stail_morphism(st_), gs, gs),
        (M.tail_morphism(tr), gt, gt),
        (M.cut_morphism(tr), gpt, gt),
    ]:
        report = M.comodule_morphism_check(alpha, cg, bg, D, K, seed=9)
        assert report.ok, (alpha.name, report.failures)
        assert law_ids(report) == {"comodule_morphism.square", "comodule_morphism.naturality"}


def test_sabotaged_tails_fail_the_square():
    st_, tr = C.stream_comonad(), C.tri_comonad()
    for alpha, g in [(M.sabotaged_stail_morphism(st_), gs), (M.sabotaged_tail_morphism(tr), gt)]:
        report = M.comodule_morphism_check(alpha, g, g, D, K)
        square = next(e for e in report.entries if e.law_id == "comodule_morphism.square")
        assert square.status == FAIL and square.counterexample


def test_pushforward_product_commute():
    tr, st_ = C.tri_comonad(), C.stream_comonad()
    cst = C.canonical_cut(st_)
    taut = M.tautological(tr)
    diag_c = C.diag_morphism(tr, cst)
    assert M.pushforward_product_commute_check(C.identity_morphism(tr), taut, gt, gt, D, K).ok
    assert M.pushforward_product_commute_check(diag_c, taut, gt, gs, D, K).ok
    broken = M.pushforward_product_commute_check(diag_c, taut, gt, gs, D, K,
                                                 target_extend=M.sabotaged_extend(cst))
    assert not broken.ok


def test_sabotaged_extend_differs_from_extend():
    cst = C.canonical_cut(C.stream_comonad())
    pairs = S.from_function(lambda i: PairValue(i, i + 50))
    f = lambda s: S.shead(s)
    assert cst.extend(f)(pairs) == PairValue(0, 50)
    assert M.sabotaged_extend(cst)(f)(pairs) == PairValue(0, PairValue(0, 50))

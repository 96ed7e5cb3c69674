"""范畴族模型测试：纤维、项的实现、编码、等式检查与内涵性"""

import pytest

from arena.moves import QUESTION, RankedMove
from core.errors import GameShapeError
from engine.oracle import ResponseStatus
from games.constructions import implication
from games.game import nat_game
from games.strategy_table import strategies_on
from models.bounds import Bounds
from predicative.registry import GameRegistry, game_key

from cwf.games import PiHatGame
from cwf.intensionality import IntensionalityChecks, lazy_zero, strict_zero
from cwf.judgements import normalize_tm, normalize_ty, type_of
from cwf.laws import LawSuite
from cwf.model import Model, fs_game
from cwf.operations import (app, comprehension, el, en, equiv, eval_dependent, first_proj, fsn_code, identity,
                            lambda_, lambda_inv, r_nat_at, r_unit, refl_inv, subst_tm, subst_ty, succ, succ_m,
                            underline_id, underline_pi, underline_sigma)
from cwf.syntax import (EMPTY_TY, N, UNIT, Code, ElOf, Extension, Family, FirstProj, Identity, IdTy, Lambda,
                        Numeral, PiTy, ReflInv, SigmaTy, Star, SubstTm, SubstTy, SuccM, Univ, Var)

from conftest import pos

Q = QUESTION
C1 = (N,)
C2 = (N, N)
R_Q = pos((Q.tagged("R"), None))


@pytest.fixture
def model():
    return Model(GameRegistry(), Bounds(alphabet=3, depth=8))


@pytest.fixture
def small_model():
    return Model(GameRegistry(), Bounds(alphabet=2, depth=8))


def answered(*moves):
    """R.q 之后依次给出 P 的询问与 O 的回答，指针分别指向 R.q 与上一个询问"""
    pairs = [(Q.tagged("R"), None)]
    for question, answer in moves:
        pairs.append((question, 0))
        pairs.append((answer, len(pairs) - 1))
    return pos(*pairs)


# ---- 纤维 ----

def test_constant_fiber_is_nat(model):
    assert eval_dependent(model, C1, N) == nat_game()


def test_fsn_fiber_at_one_is_a_renamed_nat(model):
    game = model.fiber(C1, Family("FSN"), (RankedMove(1),))
    assert game.registry_key == "FS(1)"
    assert game.arena == nat_game().arena
    assert game_key(game) != game_key(nat_game())


def test_fsn_fiber_at_two_is_a_tensor(model):
    game = model.fiber(C1, Family("FSN"), (RankedMove(2),))
    assert game == fs_game(2)
    assert game.admits(pos((Q.tagged("L"), None), (Q.tagged("R"), None)))


def test_endo_fiber_is_an_implication(model):
    entry = model.registry.register(nat_game())
    game = model.fiber((Univ(0),), Family("ENDO", 0), (entry.name,))
    assert game.registry_key == f"ENDO({entry.key})"
    assert game.arena == implication(nat_game(), nat_game(), model.thread_bound).arena


def test_pi_hat_matches_the_observed_index(model):
    game = model.fiber((), PiTy(N, Family("FSN")), ())
    assert isinstance(game, PiHatGame)
    opening = [(Q.tagged("R", "L"), None), (Q.tagged("L", "!"), 0)]
    two = pos(*opening, (RankedMove(2).tagged("L", "!"), 1), (RankedMove(3).tagged("R", "L"), 0))
    one = pos(*opening, (RankedMove(1).tagged("L", "!"), 1))
    assert game.admits(two)
    assert not game.admits(one)


def test_identity_game_on_numerals(model):
    def proofs(m, n):
        game = model.fiber((), IdTy(N, Numeral((), m), Numeral((), n)), ()).materialize(8, 0)
        return sum(1 for t in strategies_on(game) if t.is_total())

    assert proofs(1, 1) == 1
    assert proofs(1, 2) == 0


# ---- 项的实现 ----

def test_variable_asks_its_component(model):
    reply = model.realize(Var(C2, 1)).respond(R_Q)
    assert (reply.move, reply.justifier) == (Q.tagged("L", "!", "L", "R"), 0)
    s = answered((Q.tagged("L", "!", "L", "R"), RankedMove(7).tagged("L", "!", "L", "R")))
    assert model.realize(Var(C2, 1)).respond(s).move == RankedMove(7).tagged("R")


def test_numeral_answers_immediately(model):
    reply = model.realize(Numeral(C2, 4)).respond(R_Q)
    assert (reply.move, reply.justifier) == (RankedMove(4).tagged("R"), 0)


def test_successor_of_a_variable(model):
    term = succ(Var(C1, 0))
    first = model.realize(term).respond(R_Q)
    assert (first.move, first.justifier) == (Q.tagged("L", "!", "R"), 0)
    s = answered((Q.tagged("L", "!", "R"), RankedMove(4).tagged("L", "!", "R")))
    reply = model.realize(term).respond(s)
    assert (reply.move, reply.justifier) == (RankedMove(5).tagged("R"), 0)


def test_application_of_a_lambda(model):
    term = app(Lambda(succ(Var(C1, 0))), Numeral((), 4))
    assert model.evaluate(term) == RankedMove(5)


@pytest.mark.parametrize("n", range(11))
def test_double_by_recursion(model, n):
    double = r_nat_at((), N, Numeral((), 0), succ(succ(Var(C2, 0))), Numeral((), n))
    assert model.evaluate(double) == RankedMove(2 * n)


def test_recursion_with_budget_zero_diverges(model):
    term = r_nat_at((), N, Numeral((), 0), Var(C2, 0), Numeral((), 0), budget=0)
    assert model.realize(term).respond(R_Q).status is ResponseStatus.DIVERGED
    assert model.evaluate(term) is None


def test_recursion_beyond_budget_diverges(model):
    term = r_nat_at((), N, Numeral((), 0), succ(Var(C2, 0)), Numeral((), 5), budget=3)
    assert model.realize(term).respond(R_Q).status is ResponseStatus.DIVERGED


def test_lazy_and_strict_zero(model):
    result = equiv(model, lazy_zero(), strict_zero())
    assert not result
    assert result.witness == pos((Q.tagged("R", "R"), None))
    assert result.left.move == RankedMove(0).tagged("R", "R")
    assert result.right.move == Q.tagged("R", "L", "!")


def test_unit_eliminator_requires_star():
    assert r_unit(Var(C1, 0), Star(C1)) == Var(C1, 0)
    with pytest.raises(GameShapeError):
        r_unit(Var(C1, 0), Numeral(C1, 0))


# ---- 编码 ----

def test_code_of_nat_is_registered(model):
    name = model.evaluate(Code((), N, 0))
    assert name == model.registry.find(game_key(nat_game())).name
    assert name.rank == 1


def test_code_of_a_pi_type_decodes_to_its_game(model):
    name = model.evaluate(Code((), PiTy(N, N), 0))
    entry = model.registry.decode(name)
    assert isinstance(model.registry.game_of(entry.number), PiHatGame)


def test_universe_has_no_code_in_itself(model):
    assert model.evaluate(Code((), Univ(0), 0)) is None


def test_dependent_code_asks_its_index(model):
    code = Code(C1, Family("FSN"), 0)
    first = model.realize(code).respond(R_Q)
    assert (first.move, first.justifier) == (Q.tagged("L", "!", "R"), 0)
    s = answered((Q.tagged("L", "!", "R"), RankedMove(2).tagged("L", "!", "R")))
    reply = model.realize(code).respond(s)
    assert model.registry.decode(reply.move.untagged()).key == "FS(2)"


def test_fsn_code_applied_to_one(model):
    name = model.evaluate(app(fsn_code(), Numeral((), 1)))
    assert model.registry.decode(name).key == "FS(1)"


def test_en_and_el():
    code = en((), PiTy(N, N))
    assert isinstance(code, Code)
    assert normalize_ty(el(code)) == PiTy(N, N)
    mu = Var((Univ(0),), 0)
    assert en((Univ(0),), ElOf(mu, 0)) == mu
    assert el(code).level == 0


def test_el_rejects_non_codes():
    with pytest.raises(GameShapeError):
        el(Numeral((), 0))


def test_underlined_formers_code_the_matching_types():
    nat = en((), N)
    family = Code((ElOf(nat, 0),), N, 0)
    assert underline_pi(nat, family, 0) == Code((), PiTy(ElOf(nat, 0), ElOf(family, 0)), 0)
    assert underline_sigma(nat, family, 0) == Code((), SigmaTy(ElOf(nat, 0), ElOf(family, 0)), 0)
    one, two = Numeral((), 1), Numeral((), 2)
    assert underline_id(nat, one, two, 0) == Code((), IdTy(ElOf(nat, 0), one, two), 0)


# ---- 规范化 ----

def test_lambda_round_trip_is_syntactic():
    mu = lambda_(Var(C2, 0))
    assert normalize_tm(lambda_(lambda_inv(mu))) == normalize_tm(mu)
    assert normalize_tm(lambda_inv(mu)) == Var(C2, 0)


def test_cons_id_normalizes_to_identity():
    assert normalize_tm(Extension(FirstProj(C2), Var(C2, 0), N)) == Identity(C2)


def test_variable_through_composed_projections():
    weakened = type_of(Var((Univ(0), N, N, N), 3))
    assert normalize_ty(SubstTy(ElOf(Var((Univ(0),), 0), 0), Identity((Univ(0),)))) == ElOf(Var((Univ(0),), 0), 0)
    assert normalize_ty(weakened) == Univ(0)
    nested = SubstTm(Var(C1, 0), SubstTm(FirstProj(C2), FirstProj((N, N, N))))
    assert normalize_tm(nested) == Var((N, N, N), 2)


def test_substitution_into_constants():
    assert comprehension(C1, N) == C2
    assert normalize_ty(subst_ty(N, first_proj(C1, N))) == N
    assert normalize_tm(subst_tm(Numeral(C1, 3), identity(C1))) == Numeral(C1, 3)
    assert succ_m(C1) == SuccM(C2)
    assert refl_inv(C1, N) == ReflInv(C1, N)
    assert normalize_ty(SubstTy(UNIT, FirstProj(C2))) == UNIT
    assert normalize_tm(SubstTm(Star(C1), FirstProj(C2))) == Star(C2)
    assert normalize_ty(SubstTy(EMPTY_TY, Identity(C1))) == EMPTY_TY


# ---- 等式检查 ----

def test_cwf_equations_hold(model):
    report = LawSuite(model, depth=8, bound=1).cwf()
    assert report.failures == []
    assert len(report.laws) == 8
    assert report.to_dict()["laws_passed"] == 8
    assert report.summary().startswith("cwf: 8/8")


@pytest.mark.slow
def test_type_former_laws_hold(small_model):
    report = LawSuite(small_model, depth=8, bound=1).formers()
    assert report.failures == []
    assert {"Π-Comp", "Σ-Comp", "Id-Comp", "N-CompZero", "N-CompSucc", "R^𝟘-Subst"} <= set(report.laws)


def test_identity_game_soundness(model):
    report = LawSuite(model).id_soundness()
    assert report.failures == []
    assert report.total == 4 + 9 + 16


def test_single_law_reports_witness(model):
    suite = LawSuite(model, depth=4, bound=2)
    check = suite.behaves("succ ≠ id", "v0", succ(Var(C1, 0)), Var(C1, 0))
    assert not check.holds
    assert check.witness is not None and len(check.witness) == 3


# ---- 内涵性 ----

@pytest.fixture
def checks(small_model):
    return IntensionalityChecks(small_model, depth=6)


def test_equality_reflection_fails(checks):
    report = checks.equality_reflection()
    assert report.confirmed
    assert not report.principle_holds
    assert report.evidence["proof_total"]
    assert len(report.evidence["distinguishing"]) == 3


def test_function_extensionality_fails(checks):
    report = checks.function_extensionality()
    assert report.confirmed
    assert not report.principle_holds
    assert report.evidence["pointwise_equal"] == list(range(17))


@pytest.mark.slow
def test_uip_holds(checks):
    report = checks.uip()
    assert report.confirmed and report.principle_holds
    assert set(report.evidence["total_proofs"].values()) == {1}


def test_streicher_criteria(checks):
    first, second, third = checks.streicher()
    assert all(r.confirmed and r.principle_holds for r in (first, second, third))
    proofs = {(c["left"], c["right"]): c["proofs"] for c in third.evidence["cases"]}
    assert proofs[("1", "2")] == 0
    assert proofs[("2", "2")] == 1


def test_univalence_fails(checks):
    report = checks.univalence()
    assert report.confirmed
    assert not report.principle_holds
    assert report.to_dict()["principle_holds"] is False
    first, second = report.evidence["numbers"]
    assert first != second

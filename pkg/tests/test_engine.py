"""策略引擎测试：复合、copy-cat、构造、四个约束与行为等价"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arena.moves import QUESTION, RankedMove
from arena.position import EMPTY
from arena.views import p_view_indices
from core.errors import DivergenceError, StrategyError
from engine.basic import double, lazy_constant, numeral, strict_constant, successor, unary
from engine.checks import (NoetherianVerdict, check_all, check_innocent, check_noetherian, check_total,
                           check_well_bracketed, equiv_at_depth, explore, oracle_plays)
from engine.combinators import ThreadPolicy, promotion
from engine.composite import compose
from engine.copycat import copy_cat, dereliction
from engine.oracle import BoundedMemo, FunctionOracle, ResponseStatus, table_from_oracle
from engine.theorems import check_interaction_theorem
from games.constructions import BangGame, LollipopGame
from games.game import nat_game
from games.strategy_table import tree_form

from conftest import FF, TT, pos

Q = QUESTION
R_Q = pos((Q.tagged("R"), None))


def ask_then_answer(n: int):
    return pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (RankedMove(n).tagged("L"), 1))


@pytest.mark.parametrize("n", range(11))
def test_succ_then_double(n):
    composite = compose(successor(), double())
    first = composite.respond(R_Q)
    assert (first.move, first.justifier) == (Q.tagged("L"), 0)
    reply = composite.respond(ask_then_answer(n))
    assert (reply.move, reply.justifier) == (RankedMove(2 * (n + 1)).tagged("R"), 0)


def test_interaction_trace_marks_hidden_moves():
    composite = compose(successor(), double())
    trace = composite.interaction(ask_then_answer(3))
    hidden = [e for e in trace.events if e.hidden]
    assert [e.component for e in hidden] == ["B2", "B1", "B1", "B2"]
    assert [e.component for e in trace.visible()] == ["C", "A", "A", "C"]
    assert trace.visible()[-1].move["ident"] == 8


def test_divergence_is_reported_as_a_value():
    outcome = compose(successor(), double(), budget=1).respond(R_Q)
    assert outcome.status is ResponseStatus.DIVERGED


def test_respond_rejects_even_positions():
    with pytest.raises(StrategyError):
        successor().respond(EMPTY)


def test_copy_cat_is_a_unit():
    for sigma in (successor(), double(), lazy_constant(2)):
        assert equiv_at_depth(compose(copy_cat(nat_game()), sigma), sigma, 6, 3)
        assert equiv_at_depth(compose(sigma, copy_cat(nat_game())), sigma, 6, 3)


def test_dereliction_copies_into_a_thread():
    der = dereliction(nat_game())
    reply = der.respond(R_Q)
    assert (reply.move, reply.justifier) == (Q.tagged("L", "!"), 0)
    s = pos((Q.tagged("R"), None), (Q.tagged("L", "!"), 0), (RankedMove(4).tagged("L", "!"), 1))
    assert der.respond(s).move == RankedMove(4).tagged("R")


def test_lazy_and_strict_zero_differ_at_depth_two():
    result = equiv_at_depth(lazy_constant(0), strict_constant(0), 2, 3)
    assert not result
    assert result.witness == R_Q
    assert result.left.move == RankedMove(0).tagged("R")
    assert result.right.move == Q.tagged("L")


def test_elementary_strategies_satisfy_all_constraints():
    results = check_all(compose(successor(), double()), 6, 3)
    assert all(r.holds for r in results.values())
    assert results["noetherian"].verdict is NoetherianVerdict.HOLDS


def test_indexed_promotion_is_not_innocent():
    family = [lazy_constant(0), lazy_constant(1)]
    indexed = promotion(lazy_constant(0), ThreadPolicy.INDEXED, family, thread_bound=2)
    result = check_innocent(indexed, 4, 2)
    assert not result
    assert len(result.witness) == 2
    uniform = promotion(lazy_constant(0), thread_bound=2)
    assert check_innocent(uniform, 4, 2)


def test_answer_to_a_stale_question_is_not_well_bracketed():
    nat = nat_game()
    game = LollipopGame(LollipopGame(nat, nat), nat)
    inner_ask = Q.tagged("L", "L")

    def reply(s):
        if len(s) == 1:
            return Q.tagged("L", "R"), 0
        if len(s) == 3 and s.last == inner_ask:
            return RankedMove(5).tagged("R"), 0
        return None

    result = check_well_bracketed(FunctionOracle(game, reply, "stale"), 4, 1)
    assert not result


def test_totality_and_noetherian_verdicts():
    silent = FunctionOracle(nat_game(), lambda s: None, "⊥")
    assert not check_total(silent, 2, 2)
    assert check_total(numeral(3), 2, 2)

    def chatter(s):
        raise DivergenceError("无穷的内部交互", 7)

    refuted = check_noetherian(FunctionOracle(nat_game(), chatter, "chatter"), 2, 2)
    assert not refuted
    assert refuted.verdict is NoetherianVerdict.REFUTED


def test_unary_silent_when_function_undefined():
    partial = unary(lambda n: None if n == 0 else n - 1, "pred")
    assert partial.respond(ask_then_answer(0)).status is ResponseStatus.NO_RESPONSE
    assert partial.respond(ask_then_answer(3)).move == RankedMove(2).tagged("R")


def test_interaction_theorem_on_bool(bool_arrow, bool_finite):
    cp = table_from_oracle(copy_cat(bool_finite), bool_arrow)
    neg = tree_form([
        EMPTY,
        pos((Q.tagged("R"), None), (Q.tagged("L"), 0)),
        pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (TT.tagged("L"), 1), (FF.tagged("R"), 0)),
        pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (FF.tagged("L"), 1), (TT.tagged("R"), 0)),
    ], bool_arrow)
    const = tree_form([EMPTY, pos((Q.tagged("R"), None), (TT.tagged("R"), 0))], bool_arrow)
    reports = check_interaction_theorem(cp, neg, neg, cp, cp, const, depth=6)
    for name, report in reports.items():
        assert report.holds, (name, report.to_dict())


def test_oracle_plays_of_copy_cat(bool_arrow, bool_finite):
    cp = copy_cat(bool_finite)
    plays = oracle_plays(cp, 4, 0, bool_arrow)
    assert table_from_oracle(cp, bool_arrow).plays == frozenset(plays)


def test_copy_cat_p_views_repeat_each_move():
    for game, bound in ((nat_game(), 3), (BangGame(nat_game(), 2), 1)):
        cp = copy_cat(game)
        for odd, outcome in explore(cp, 7, bound):
            view = [odd.moves[i] for i in p_view_indices(odd, cp.game.arena)]
            assert len(view) % 2 == 1
            for opponent, player in zip(view[0::2], view[1::2]):
                assert opponent.untagged() == player.untagged()
            assert outcome.responded
            assert outcome.move.untagged() == view[-1].untagged()


def test_promotion_of_dereliction_is_copy_cat():
    result = equiv_at_depth(promotion(dereliction(nat_game())), copy_cat(BangGame(nat_game())), 6, 2)
    assert result, result.to_dict()
    assert result.checked > 0


@pytest.mark.parametrize("make", [successor, double])
def test_promotion_then_dereliction_gives_back_the_strategy(make):
    sigma = compose(dereliction(nat_game()), make())
    result = equiv_at_depth(compose(promotion(sigma), dereliction(nat_game())), sigma, 6, 2)
    assert result, result.to_dict()


@pytest.mark.parametrize("depth", [4, 6, 8])
def test_total_composites_stay_within_quadratic_budget(depth):
    pairs = [
        (successor(), double()),
        (copy_cat(nat_game()), successor()),
        (double(), strict_constant(1)),
        (dereliction(nat_game()), successor()),
    ]
    for left, right in pairs:
        composite = compose(left, right, budget=4 * depth ** 2)
        for odd, outcome in explore(composite, depth, 3):
            assert outcome.status is not ResponseStatus.DIVERGED, (composite.name, odd)


def test_successor_satisfies_all_constraints_at_depth_twelve():
    results = check_all(successor(), 12, 8)
    assert all(r.holds for r in results.values()), {k: r.to_dict() for k, r in results.items()}


def test_bound_exceeded_is_not_a_pass():
    bounded = check_noetherian(copy_cat(nat_game()), 4, 2)
    assert bounded.verdict is NoetherianVerdict.BOUND_EXCEEDED
    assert not bounded
    assert check_noetherian(copy_cat(nat_game()), 6, 2).verdict is NoetherianVerdict.HOLDS


def test_memo_tables_are_bounded():
    memo = BoundedMemo(2)
    memo["a"] = 1
    memo["b"] = 2
    assert memo.get("a") == 1
    memo["c"] = 3
    assert list(memo) == ["a", "c"]
    assert memo.get("b") is None
    composite = compose(successor(), double())
    composite._memo.limit = 2
    for n in [0, 1, 2, 3, 0]:
        assert composite.respond(ask_then_answer(n)).move == RankedMove(2 * (n + 1)).tagged("R")
    assert len(composite._memo) == 2


def affine(a: int, b: int):
    return unary(lambda n: a * n + b, f"{a}n+{b}")


# 平坦 N 上随机的初等策略：仿射函数、惰性常数与严格常数
ELEMENTARY = st.one_of(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).map(lambda p: affine(*p)),
    st.integers(0, 3).map(lazy_constant),
    st.integers(0, 3).map(strict_constant),
)


class TestCompositionLaws:
    @settings(max_examples=40, deadline=None)
    @given(ELEMENTARY, ELEMENTARY, ELEMENTARY)
    def test_associativity(self, f, g, h):
        left = compose(compose(f, g), h)
        right = compose(f, compose(g, h))
        assert equiv_at_depth(left, right, 9, 3)

    @settings(max_examples=20, deadline=None)
    @given(ELEMENTARY)
    def test_identity(self, f):
        assert equiv_at_depth(compose(copy_cat(nat_game()), f), f, 9, 3)
        assert equiv_at_depth(compose(f, copy_cat(nat_game())), f, 9, 3)

    @settings(max_examples=30, deadline=None)
    @given(ELEMENTARY, ELEMENTARY)
    def test_constraints_preserved(self, f, g):
        results = check_all(compose(f, g), 8, 3)
        assert all(r.holds for r in results.values())

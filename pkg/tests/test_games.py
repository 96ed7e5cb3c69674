"""游戏层测试：构造、物化、子游戏、树形式策略与策略集合"""

import json
from pathlib import Path

import pytest

from arena.arena import LollipopArena, SumArena, nat_flat_arena
from arena.moves import QUESTION, MoveLabel, RankedMove
from arena.position import EMPTY
from arena.views import is_legal
from core.errors import StrategyError
from games.composition import SideArena, in_copy_relation, restrict_external, restrict_left, restrict_right
from games.constructions import BangGame, LollipopGame, ProductGame, TensorGame, bang, product, tensor
from games.enumeration import check_correspondence, enumerate_small_games
from games.game import FiniteGame, TerminalGame, bool_game, empty_game, flat_game, nat_game, unit_game
from games.strategy_table import is_complete, is_consistent, strategies_on, tree_form, union_game
from games.validation import is_subgame, validate_game

from conftest import FF, TT, pos

Q = QUESTION
GOLDEN = Path(__file__).parent / "golden" / "games"


def test_flat_game_positions(nat):
    assert nat.admits(pos((Q, None), (RankedMove(3), 0)))
    assert not nat.admits(pos((Q, None), (RankedMove(3), 0), (Q, None)))
    assert len(bool_game().materialize(4, 0).position_set) == 4
    assert len(empty_game().materialize(4, 0).position_set) == 2


def test_terminal_game():
    game = TerminalGame()
    assert game.admits(EMPTY)
    assert game.rank() == 1
    assert game.positions(4, 4) == [EMPTY]


def test_strategies_on_bool_arrow(bool_arrow):
    assert len(strategies_on(bool_arrow)) == 12


def test_product_and_tensor(bool_finite):
    assert len(product(bool_finite, bool_finite).position_set) == 7
    both = tensor(bool_finite, bool_finite)
    s = pos((Q.tagged("L"), None), (TT.tagged("L"), 0), (Q.tagged("R"), None))
    assert s in both.position_set
    only_left = ProductGame(bool_game(), bool_game())
    assert not only_left.admits(pos((Q.tagged("L"), None), (TT.tagged("L"), 0), (Q.tagged("R"), None)))


def test_bang_bounds_threads(bool_finite):
    game = BangGame(bool_game(), thread_bound=2)
    three = pos((Q.tagged("!"), None), (TT.tagged("!"), 0), (Q.tagged("!"), None), (FF.tagged("!"), 2),
                (Q.tagged("!"), None))
    assert game.admits(three.prefix(4))
    assert not game.admits(three)
    assert all(len(s.initial_indices()) <= 2 for s in bang(bool_finite, 2).position_set)


def test_lollipop_restricts_both_sides(nat):
    game = LollipopGame(nat, nat)
    good = pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (RankedMove(1).tagged("L"), 1))
    assert game.admits(good)
    assert not game.admits(good.extend(Q.tagged("L"), 0))


def test_rank_of_constructions(nat):
    assert TensorGame(nat, unit_game()).rank() == 1
    assert LollipopGame(BangGame(nat), nat).rank() == 1


@pytest.mark.parametrize("game", [nat_game(), bool_game(), unit_game(), TerminalGame()])
def test_validate_basic_games(game):
    report = validate_game(game, 4, 3)
    assert report.all_hold, report.to_dict()


def test_validate_reports_non_economical():
    base = bool_game().materialize(4, 0)
    trimmed = FiniteGame(base.arena, frozenset({EMPTY, pos((Q, None))}))
    report = validate_game(trimmed)
    assert not report["economical"]


def test_subgames(bool_finite):
    only_tt = flat_game("B", [TT]).materialize(4, 0)
    assert is_subgame(only_tt, bool_finite)
    assert not is_subgame(bool_finite, only_tt)


def test_tree_form_rejects_nondeterminism(bool_finite):
    with pytest.raises(StrategyError):
        tree_form([EMPTY, pos((Q, None), (TT, 0)), pos((Q, None), (FF, 0))], bool_finite)
    with pytest.raises(StrategyError):
        tree_form([pos((Q, None), (TT, 0))], bool_finite)


def test_tree_form_adds_opponent_moves(bool_finite):
    table = tree_form([EMPTY, pos((Q, None), (TT, 0))], bool_finite)
    assert pos((Q, None)) in table.plays
    assert table.respond(pos((Q, None))) == (TT, 0)
    assert table.is_total()


def test_union_of_all_strategies_is_the_game(bool_arrow):
    strategies = strategies_on(bool_arrow)
    assert is_consistent(strategies)
    assert union_game(strategies) == bool_arrow
    assert is_complete(strategies)


def test_incomplete_strategy_set(bool_finite):
    tables = strategies_on(bool_finite)
    answering = [t for t in tables if t.is_total()]
    assert len(answering) == 2
    assert not is_complete(answering)


def test_copy_relation():
    middle = pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (TT.tagged("L"), 1), (TT.tagged("R"), 0))
    assert in_copy_relation(middle, bool_game().arena)
    wrong = pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (TT.tagged("L"), 1), (FF.tagged("R"), 0))
    assert not in_copy_relation(wrong, bool_game().arena)


def test_restrict_external_chases_hidden_pointers():
    u = pos((Q.tagged("R"), None), (Q.tagged("L", "R"), 0), (Q.tagged("L", "L", "R"), 1),
            (Q.tagged("L", "L", "L"), 2))
    external = restrict_external(u)
    assert external.moves == (Q.tagged("R"), Q.tagged("L"))
    assert external.justifiers == (None, 0)


def test_restrictions_to_the_component_games():
    three = RankedMove(3)
    u = pos((Q.tagged("R"), None), (Q.tagged("L", "R"), 0), (Q.tagged("L", "L", "R"), 1),
            (Q.tagged("L", "L", "L"), 2), (three.tagged("L", "L", "L"), 3), (three.tagged("L", "L", "R"), 2),
            (three.tagged("L", "R"), 1))
    right = restrict_right(u)
    assert right.moves == (Q.tagged("R"), Q.tagged("L"), three.tagged("L"))
    assert right.justifiers == (None, 0, 1)
    assert is_legal(LollipopArena(nat_flat_arena(), nat_flat_arena()), right)
    left = restrict_left(u)
    assert left.moves == (Q.tagged("R"), Q.tagged("L"), three.tagged("L"), three.tagged("R"))
    assert left.justifiers == (None, 0, 1, 0)


def test_side_arena_flips_only_the_left_side():
    n = nat_flat_arena()
    assert SideArena(SumArena(n, n), "L").label(Q) is MoveLabel.PQ
    assert SideArena(SumArena(n, n), "R").label(Q) is MoveLabel.OQ
    assert SideArena(LollipopArena(n, n), "L").label(Q) is MoveLabel.OQ


def test_small_games_correspond_to_strategy_sets():
    games = list(enumerate_small_games(2, 3))
    assert games
    assert all(check_correspondence(g) is None for g in games)


@pytest.mark.slow
def test_small_games_correspond_exhaustively():
    for game in enumerate_small_games(3, 4):
        assert check_correspondence(game) is None


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("*.json")), ids=lambda p: p.stem)
def test_golden_games(path):
    data = json.loads(path.read_text(encoding="utf-8"))
    game = FiniteGame.from_dict(data["game"])
    assert len(strategies_on(game)) == data["strategies"]
    assert validate_game(game).all_hold

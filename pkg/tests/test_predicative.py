"""谓词游戏测试：注册表、宇宙、El 与 PLI"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arena.moves import RankedMove
from core.errors import DecodeError, RegistryError
from engine.basic import bottom
from engine.copycat import copy_cat
from engine.oracle import FunctionOracle, TableOracle, table_from_oracle
from games.game import TerminalGame, bool_game, empty_game, nat_game
from games.strategy_table import strategies_on
from predicative.games import BOTTOM, PROTOCOL_QUESTION, from_finite, is_predicative_subgame, parallel_union
from predicative.pli import (PLIStrategy, check_uniform, component_games, generalized_copy_cat,
                             generalized_dereliction, paradox_report, pli_lollipop, project_strategy,
                             single_thread)
from predicative.registry import GameRegistry, cantor, check_paradox_free, uncantor
from predicative.universe import UniverseGame, code_of, el, is_code_of_level

from conftest import TT


@given(st.integers(min_value=0, max_value=500), st.integers(min_value=0, max_value=50))
def test_cantor_pairing_is_invertible(x, y):
    assert uncantor(cantor(x, y)) == (x, y)


def test_construction_numbers(registry):
    nat = registry.register(nat_game())
    assert (nat.number, nat.rank) == (2, 1)
    assert registry.register(bool_game()).number == 4
    assert registry.register(nat_game()) == nat
    assert registry.decode(RankedMove(2, 1)) == nat
    assert registry.decode(RankedMove(2, 0)) is None
    with pytest.raises(RegistryError):
        registry.lookup(99)


def test_registry_survives_restart(tmp_path):
    path = tmp_path / "registry.json"
    first = GameRegistry(path=path)
    first.register(nat_game(), ast={"const": "N"})
    first.register(bool_game())
    first.save()
    second = GameRegistry(path=path, builder=lambda ast: nat_game())
    assert second.find("flat(N)").number == 2
    assert second.find("flat(Bool)").number == 4
    assert second.game_of(2) == nat_game()
    with pytest.raises(RegistryError):
        second.game_of(4)


def test_universe_codes_and_decoding(registry):
    mu = code_of(nat_game(), registry)
    assert isinstance(mu.game, UniverseGame)
    assert mu.game.rank() == 2
    assert el(mu, registry) == nat_game()
    assert is_code_of_level(mu, 0, registry)
    assert is_code_of_level(mu, 1, registry)


def test_universe_is_not_its_own_element(registry):
    code_of(nat_game(), registry)
    u0 = UniverseGame(0, registry)
    big = code_of(u0, registry)
    assert not is_code_of_level(big, 0, registry)
    assert is_code_of_level(big, 1, registry)
    with pytest.raises(DecodeError):
        code_of(u0, registry, level=0)
    assert u0.arena.answer_test(RankedMove(2, 1))
    assert not u0.arena.answer_test(registry.find("U0").name)


def test_el_of_silent_code_fails(registry):
    with pytest.raises(DecodeError):
        el(bottom(UniverseGame(0, registry)), registry)


def test_paradox_free_registry(registry):
    registry.register(nat_game())
    registry.register(bool_game())
    registry.register(UniverseGame(0, registry))
    assert check_paradox_free(registry) == []
    assert paradox_report(registry) == {"entries": 3, "violations": []}


def test_predicative_union_of_bool(bool_finite):
    game = from_finite(bool_finite)
    assert len(game.strategies) == 3
    assert is_predicative_subgame(BOTTOM, game)
    assert parallel_union([game, BOTTOM]) == game
    table = game.ordered[0]
    assert all(game.strategy_of(s) == table for s in game.plays_of(table) if s)
    protocol = [s for s in game.protocol_positions if len(s) == 2]
    assert len(protocol) == 3
    assert all(s.moves[0] == PROTOCOL_QUESTION for s in protocol)


def test_projection_through_copy_cat(bool_arrow, bool_finite):
    cp = TableOracle(table_from_oracle(copy_cat(bool_finite), bool_arrow))
    for sigma in strategies_on(bool_finite):
        assert project_strategy(cp, sigma, bool_finite) == sigma.plays


def test_linear_implication_on_bool(bool_finite):
    b = from_finite(bool_finite)
    pli = pli_lollipop(b, b)
    assert len(pli.strategies) == 12
    assert len(pli.total_strategies()) == 6


def test_linear_implication_on_degenerate_games():
    zero = from_finite(empty_game().materialize(4, 0))
    pli = pli_lollipop(zero, zero)
    assert len(pli.strategies) == 2
    assert len(pli.total_strategies()) == 1
    unit = from_finite(TerminalGame().materialize(4, 0))
    assert len(pli_lollipop(unit, unit).strategies) == 1


def test_generalized_copy_cat_is_uniform(bool_finite):
    cp = generalized_copy_cat(from_finite(bool_finite))
    report = check_uniform(cp, component_games(cp))
    assert report.holds
    assert report.checked > 0
    assert all(cp.project(sigma) == sigma for sigma in cp.family)


def test_disagreeing_components_are_not_uniform(bool_finite):
    cp = generalized_copy_cat(from_finite(bool_finite))
    first, *rest = cp.family
    family = dict(cp.family)
    family[first] = FunctionOracle(cp.family[first].game, lambda s: None, "⊥")
    broken = PLIStrategy(family, dict(cp.projection), "broken")
    report = check_uniform(broken, component_games(broken))
    assert not report.holds
    assert report.witness is not None


def test_generalized_dereliction(bool_finite):
    der = generalized_dereliction(from_finite(bool_finite))
    games = component_games(der, bang_domain=True)
    assert check_uniform(der, games).holds


def test_single_thread_keeps_one_initial_move(bool_finite):
    for table in strategies_on(bool_finite):
        assert single_thread(table) == table.plays
    answering = [t for t in strategies_on(bool_finite) if TT in t.moves]
    assert len(answering) == 1

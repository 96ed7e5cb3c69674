"""测试共用的游戏、策略与注册表"""

from pathlib import Path
from typing import Sequence

import pytest

from arena.moves import RankedMove
from arena.position import EMPTY, Position
from games.constructions import lollipop
from games.game import FiniteGame, Game, bool_game, nat_game
from predicative.registry import GameRegistry

TT = RankedMove("tt")
FF = RankedMove("ff")

CORPUS = Path(__file__).parent / "corpus"


def random_play(game: Game, choices: Sequence[int], bound: int = 2) -> Position:
    """按 choices 依次选取扩展，得到一个有效位置；无扩展时提前停止"""
    s = EMPTY
    for choice in choices:
        options = list(game.extensions(s, bound))
        if not options:
            break
        move, j = options[choice % len(options)]
        s = s.extend(move, j)
    return s


def pos(*pairs) -> Position:
    return Position.of(*pairs)


@pytest.fixture
def nat():
    return nat_game()


@pytest.fixture
def bool_finite() -> FiniteGame:
    return bool_game().materialize(4, 0)


@pytest.fixture
def bool_arrow(bool_finite) -> FiniteGame:
    return lollipop(bool_finite, bool_finite)


@pytest.fixture
def registry(tmp_path) -> GameRegistry:
    return GameRegistry(path=tmp_path / "registry.json")


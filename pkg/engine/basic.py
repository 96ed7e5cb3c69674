"""常用的基本策略：⊥、数字、一元算术函数"""

from typing import Callable, Optional

from arena.moves import QUESTION, RankedMove
from arena.position import Position
from games.constructions import LollipopGame
from games.game import Extension, FlatGame, Game, nat_game

from .oracle import FunctionOracle, StrategyOracle

ASK = QUESTION.tagged("L")


def bottom(game: Game) -> StrategyOracle:
    """处处无回应的策略"""
    return FunctionOracle(game, lambda s: None, "⊥")


def answer(game: FlatGame, move: RankedMove, name: str = "") -> StrategyOracle:
    """在平坦游戏上直接回答 move"""

    def reply(s: Position) -> Optional[Extension]:
        return (move, 0) if len(s) == 1 else None

    return FunctionOracle(game, reply, name or str(move))


def numeral(n: int) -> StrategyOracle:
    """n̲ : N，q ↦ n"""
    return answer(nat_game(), RankedMove(n), f"{n}̲")


def unary(fn: Callable[[int], Optional[int]], name: str) -> StrategyOracle:
    """N ⊸ N 上先询问参数再回答 fn(n) 的策略；fn 返回 None 时不回答"""

    def reply(s: Position) -> Optional[Extension]:
        if len(s) == 1:
            return ASK, 0
        if len(s) == 3 and s.moves[2].has_prefix(("L",)):
            result = fn(s.moves[2].ident)
            return None if result is None else (RankedMove(result).tagged("R"), 0)
        return None

    return FunctionOracle(LollipopGame(nat_game(), nat_game()), reply, name)


def lazy_constant(n: int) -> StrategyOracle:
    """N ⊸ N 上不询问参数、直接回答 n 的策略"""

    def reply(s: Position) -> Optional[Extension]:
        return (RankedMove(n).tagged("R"), 0) if len(s) == 1 else None

    return FunctionOracle(LollipopGame(nat_game(), nat_game()), reply, f"{n}̲_N")


def successor() -> StrategyOracle:
    return unary(lambda n: n + 1, "succ")


def double() -> StrategyOracle:
    return unary(lambda n: 2 * n, "double")


def strict_constant(n: int) -> StrategyOracle:
    """先询问参数再回答 n"""
    return unary(lambda _: n, f"{n}̲̂_N")

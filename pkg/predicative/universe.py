"""宇宙游戏 U_k、编码 G̲ 与解码 El。

U_k 从不枚举：它的回答集合是注册表中秩不超过 k+1 的名字，按需判定。
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional

from arena.arena import FlatArena
from arena.moves import RankedMove
from arena.position import Position
from core.errors import DecodeError
from engine.oracle import FunctionOracle, ResponseStatus, StrategyOracle
from games.game import Extension, Game

from .registry import GameRegistry, RegistryEntry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UniverseGame(Game):
    """第 k 个宇宙：q 由 Opponent 提出，Player 以秩 ≤ k+1 的游戏名字回答"""
    level: int
    registry: GameRegistry = field(compare=False, hash=False, repr=False)

    @property
    def registry_key(self) -> str:
        return f"U{self.level}"

    @property
    def arena(self) -> FlatArena:
        limit = self.level + 1
        registry = self.registry

        def enumerate_names(bound: int) -> Iterator[RankedMove]:
            return iter(registry.names(limit))

        return FlatArena(f"U{self.level}", lambda m: registry.is_name(m, limit), enumerate_names)

    @property
    def well_opened(self) -> bool:
        return True

    def accepts(self, s: Position) -> bool:
        return len(s) <= 2

    def rank(self, bound: int = 0) -> int:
        return self.level + 2


def universe(level: int, registry: GameRegistry) -> UniverseGame:
    return UniverseGame(level, registry)


def code_of(game: Game, registry: GameRegistry, level: Optional[int] = None,
            key: Optional[str] = None, description: str = "") -> StrategyOracle:
    """G̲ : U_k，默认落在能容纳 G 的最小宇宙"""
    entry = registry.register(game, key, description)
    if level is None:
        level = max(entry.rank - 1, 0)
    if entry.rank > level + 1:
        raise DecodeError(f"秩为 {entry.rank} 的游戏没有 U{level} 中的编码")
    name = entry.name

    def reply(s: Position) -> Optional[Extension]:
        return (name, 0) if len(s) == 1 else None

    return FunctionOracle(UniverseGame(level, registry), reply, f"{entry.description}̲")


def _answer(mu: StrategyOracle) -> RankedMove:
    outcome = mu.respond(Position.of((mu.game.arena.question, None)), validate=False)
    if outcome.status is not ResponseStatus.RESPONDED:
        raise DecodeError(f"{mu.name} 没有回答宇宙的问题（{outcome.status.value}）")
    return outcome.move


def el_entry(mu: StrategyOracle, registry: GameRegistry) -> RegistryEntry:
    move = _answer(mu)
    entry = registry.decode(move)
    if entry is None:
        raise DecodeError(f"回答 {move} 不是已登记游戏的名字")
    return entry


def el(mu: StrategyOracle, registry: GameRegistry) -> Game:
    """El(μ)：读出 μ 的回答并解码"""
    return registry.game_of(el_entry(mu, registry).number)


def is_code_of_level(mu: StrategyOracle, level: int, registry: GameRegistry) -> bool:
    """μ : U_k 当且仅当 μ 以秩 ≤ k+1 的名字回答 q；因此 μ : U_k 蕴含 μ : U_{k+1}"""
    try:
        move = _answer(mu)
    except DecodeError:
        return False
    return registry.is_name(move, level + 1)

"""谓词游戏：由一组带秩策略给出的“游戏族”。

Player 先用初始协议 q_G · ◯σ 选定策略 σ，此后的走子都带上 σ 的标记。
协议对 Opponent 不可见，外部位置只含带标记的走子。
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Set

from arena.arena import ExplicitArena
from arena.moves import MoveLabel, RankedMove
from arena.position import EMPTY, Position
from games.game import FiniteGame, Game
from games.strategy_table import StrategyTable, strategies_on

from .registry import digest

logger = logging.getLogger(__name__)

PROTOCOL_QUESTION = RankedMove("q_G")


def strategy_tag(table: StrategyTable) -> str:
    """策略的标记：按位置集合取摘要，相等的策略标记相同"""
    return "σ" + digest([s.to_list() for s in table.sorted_plays])


def circle(table: StrategyTable) -> RankedMove:
    """◯σ"""
    return RankedMove("◯" + strategy_tag(table))


@dataclass(frozen=True, eq=False)
class PredicativeGame(Game):
    """∮S：st(∮S) = S"""
    strategies: FrozenSet[StrategyTable]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PredicativeGame):
            return NotImplemented
        return self.strategies == other.strategies

    def __hash__(self) -> int:
        return hash(self.strategies)

    @property
    def registry_key(self) -> str:
        return "∮" + digest(sorted(strategy_tag(t) for t in self.strategies))

    @cached_property
    def ordered(self) -> List[StrategyTable]:
        return sorted(self.strategies, key=lambda t: [s.sort_key() for s in t.sorted_plays])

    @cached_property
    def _by_tag(self) -> Dict[str, StrategyTable]:
        return {strategy_tag(t): t for t in self.strategies}

    @cached_property
    def arena(self) -> ExplicitArena:
        """协议竞技场：q_G 为初始问题，◯σ 为其回答，σ 的初始走子由 ◯σ 使能"""
        labels: Dict[RankedMove, MoveLabel] = {PROTOCOL_QUESTION: MoveLabel.OQ}
        enabling = set()
        for table in self.ordered:
            tag = strategy_tag(table)
            name = circle(table)
            labels[name] = MoveLabel.PA
            enabling.add((PROTOCOL_QUESTION, name))
            sub = table.as_game().arena
            for move, label in sub.labels.items():
                labels[move.tagged(tag)] = label
            for source, target in sub.enabling:
                if source is None:
                    enabling.add((None, target.tagged(tag)))
                else:
                    enabling.add((source.tagged(tag), target.tagged(tag)))
        return ExplicitArena(labels, frozenset(enabling))

    def accepts(self, s: Position) -> bool:
        return s in self.external_positions or s in self.protocol_positions

    @cached_property
    def external_positions(self) -> FrozenSet[Position]:
        """对 Opponent 可见的位置：隐藏协议后带标记的 σ̄ 位置"""
        found: Set[Position] = {EMPTY}
        for table in self.strategies:
            tag = strategy_tag(table)
            found |= {s.tagged(tag) for s in table.plays}
        return frozenset(found)

    @cached_property
    def protocol_positions(self) -> FrozenSet[Position]:
        """带协议的位置 q_G · ◯σ · s"""
        found: Set[Position] = {EMPTY, Position.of((PROTOCOL_QUESTION, None))}
        for table in self.strategies:
            tag = strategy_tag(table)
            prefix = Position.of((PROTOCOL_QUESTION, None), (circle(table), 0))
            for s in table.plays:
                moves = prefix.moves + tuple(m.tagged(tag) for m in s.moves)
                justifiers = prefix.justifiers + tuple(None if j is None else j + 2 for j in s.justifiers)
                found.add(Position(moves, justifiers))
        return frozenset(found)

    def plays_of(self, table: StrategyTable) -> FrozenSet[Position]:
        return frozenset(s.tagged(strategy_tag(table)) for s in table.plays)

    def strategy_of(self, s: Position) -> Optional[StrategyTable]:
        """外部位置所属的策略；ε 不属于任何一个"""
        if not s:
            return None
        tag = s.moves[0].head_tag
        return self._by_tag.get(tag)

    @property
    def well_opened(self) -> bool:
        return all(t.as_game().well_opened for t in self.strategies)

    def rank(self, bound: int = 0) -> int:
        ranks = [m.rank for t in self.strategies for m in t.moves]
        return 1 if not ranks else max(ranks) + 1

    def __repr__(self) -> str:
        return f"PredicativeGame(strategies={len(self.strategies)})"


def predicative_union(strategies: Iterable[StrategyTable]) -> PredicativeGame:
    """∮S"""
    return PredicativeGame(frozenset(strategies))


def parallel_union(games: Iterable[PredicativeGame]) -> PredicativeGame:
    """∫：把各游戏的第一个走子统一起来，st(∫S) = ⋃ st(G_i)"""
    collected: Set[StrategyTable] = set()
    for game in games:
        collected |= game.strategies
    return PredicativeGame(frozenset(collected))


def from_finite(game: FiniteGame) -> PredicativeGame:
    """∮ st(G)：有限游戏对应的谓词游戏"""
    return predicative_union(strategies_on(game))


def strategy_set(game: PredicativeGame) -> FrozenSet[StrategyTable]:
    return game.strategies


def is_predicative_subgame(sub: PredicativeGame, game: PredicativeGame) -> bool:
    """H ⊴ G 当且仅当 st(H) ⊆ st(G)"""
    return sub.strategies <= game.strategies


BOTTOM = predicative_union(())

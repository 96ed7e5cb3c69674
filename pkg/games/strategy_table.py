"""显式策略：树形式、穷举与策略集合的并。

StrategyTable 始终以树形式 σ̄ 保存，即偶数长度的策略位置加上
Opponent 在其后可以走出的全部奇数长度位置。
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from arena.arena import ExplicitArena
from arena.moves import MoveLabel, RankedMove
from arena.position import EMPTY, Position
from core.errors import InconsistentStrategiesError, StrategyError

from .game import Extension, FiniteGame

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StrategyTable:
    """策略的树形式；相等性只看位置集合"""
    game: FiniteGame
    plays: FrozenSet[Position]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StrategyTable):
            return NotImplemented
        return self.plays == other.plays

    def __hash__(self) -> int:
        return hash(self.plays)

    @cached_property
    def sorted_plays(self) -> List[Position]:
        return sorted(self.plays, key=Position.sort_key)

    @cached_property
    def _responses(self) -> Dict[Position, Extension]:
        table: Dict[Position, Extension] = {}
        for s in self.plays:
            if s and not s.is_odd:
                table[s.prefix(len(s) - 1)] = (s.last, s.justifiers[-1])
        return table

    def respond(self, s: Position) -> Optional[Extension]:
        """σ(s)；未定义时返回 None"""
        if not s.is_odd:
            raise StrategyError(f"只能在奇数长度位置上询问策略: {s}")
        return self._responses.get(s)

    def is_total(self) -> bool:
        return all(s in self._responses for s in self.plays if s.is_odd)

    def as_game(self) -> FiniteGame:
        """σ̂：以 σ̄ 为位置集合的经济子游戏"""
        return FiniteGame.from_positions(self.game.arena, self.plays)

    @property
    def moves(self) -> Set[RankedMove]:
        return {m for s in self.plays for m in s.moves}

    def to_dict(self) -> Dict:
        return {"plays": [s.to_list() for s in self.sorted_plays]}

    def __repr__(self) -> str:
        longest = max((str(s) for s in self.sorted_plays if not s.is_odd), key=len, default="ε")
        return f"StrategyTable(plays={len(self.plays)}, longest={longest})"


def tree_form(plays: Iterable[Position], game: FiniteGame) -> StrategyTable:
    """由偶数长度位置集合 σ 得到 σ̄ = σ ∪ {s·m ∈ P_G | s ∈ σ}"""
    sigma = frozenset(plays)
    if not sigma:
        raise StrategyError("S1: 策略不能为空")
    if EMPTY not in sigma:
        raise StrategyError("S1: 策略必须包含 ε")
    chosen: Dict[Position, Extension] = {}
    for s in sigma:
        if s.is_odd:
            raise StrategyError(f"S1: 策略位置必须是偶数长度: {s}")
        if s not in game.position_set:
            raise StrategyError(f"S1: {s} 不是游戏的有效位置")
        if s:
            parent = s.prefix(len(s) - 2)
            if parent not in sigma:
                raise StrategyError(f"S1: {s} 的偶数前缀 {parent} 不在策略中")
            odd = s.prefix(len(s) - 1)
            response = (s.last, s.justifiers[-1])
            if chosen.setdefault(odd, response) != response:
                raise StrategyError(f"S2: 策略在 {odd} 上不确定")
    tree: Set[Position] = set(sigma)
    for s in sigma:
        for move, j in game.extensions(s):
            tree.add(s.extend(move, j))
    return StrategyTable(game, frozenset(tree))


def _subtrees(game: FiniteGame, s: Position) -> List[FrozenSet[Position]]:
    """以偶数位置 s 为根的全部策略子树"""
    per_child: List[List[FrozenSet[Position]]] = []
    for move, j in game.extensions(s):
        odd = s.extend(move, j)
        options = [frozenset([odd])]
        for response, k in game.extensions(odd):
            for sub in _subtrees(game, odd.extend(response, k)):
                options.append(sub | {odd})
        per_child.append(options)
    result = []
    for combo in cartesian(*per_child):
        tree = {s}
        for part in combo:
            tree |= part
        result.append(frozenset(tree))
    return result


def strategies_on(game: FiniteGame) -> List[StrategyTable]:
    """穷举满足 S1/S2 的全部策略，以树形式返回，顺序确定"""
    tables = [StrategyTable(game, tree) for tree in _subtrees(game, EMPTY)]
    tables.sort(key=lambda t: [s.sort_key() for s in t.sorted_plays])
    logger.debug(f"{game!r} 上共有 {len(tables)} 个策略")
    return tables


def check_consistency(strategies: Sequence[StrategyTable]) -> Optional[Tuple[int, str]]:
    """返回第一个违反的条款及说明；相容时返回 None"""
    arenas = [(t, t.as_game().arena) for t in strategies]
    for (s1, a1), (s2, a2) in _pairs(arenas):
        common = set(a1.labels) & set(a2.labels)
        for move in common:
            if a1.labels[move] is not a2.labels[move]:
                return 1, f"走子 {move} 的标签 {a1.labels[move].value} 与 {a2.labels[move].value} 不同"
        for target in common:
            if a1.enables(None, target) != a2.enables(None, target):
                return 2, f"根是否使能 {target} 不一致"
            for source in common:
                if a1.enables(source, target) != a2.enables(source, target):
                    return 2, f"{source} ⊢ {target} 不一致"
        shared_even = [s for s in s1.plays & s2.plays if not s.is_odd]
        for s in shared_even:
            odd1 = {p for p in s1.plays if len(p) == len(s) + 1 and s.is_prefix_of(p)}
            odd2 = {p for p in s2.plays if len(p) == len(s) + 1 and s.is_prefix_of(p)}
            if odd1 != odd2:
                witness = sorted(odd1 ^ odd2, key=Position.sort_key)[0]
                return 3, f"奇数位置 {witness} 只出现在其中一个策略里"
    return None


def _pairs(items):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


def is_consistent(strategies: Sequence[StrategyTable]) -> bool:
    return check_consistency(strategies) is None


def union_game(strategies: Sequence[StrategyTable]) -> FiniteGame:
    """⋃S：相容集合的逐项并"""
    if not strategies:
        raise StrategyError("空的策略集合没有并游戏")
    violation = check_consistency(strategies)
    if violation is not None:
        raise InconsistentStrategiesError(*violation)
    labels: Dict[RankedMove, MoveLabel] = {}
    enabling = set()
    plays: Set[Position] = set()
    for table in strategies:
        arena = table.as_game().arena
        labels.update(arena.labels)
        enabling |= arena.enabling
        plays |= table.plays
    return FiniteGame(ExplicitArena(labels, frozenset(enabling)), frozenset(plays))


def is_complete(strategies: Sequence[StrategyTable]) -> bool:
    """对拼接封闭：st(⋃S) ⊆ S"""
    if not strategies or not is_consistent(strategies):
        return False
    members = set(strategies)
    return all(t in members for t in strategies_on(union_game(strategies)))

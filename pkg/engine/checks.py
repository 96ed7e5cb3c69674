"""有界探索、四个 WPG 约束的检查器与行为等价。

所有检查都在长度不超过 depth、走子按 bound 截断的位置空间中进行；
Opponent 是任意合法 O 走子的选择者。
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Set, Tuple

from arena.moves import MoveLabel, Polarity
from arena.position import EMPTY, Position
from arena.views import p_view_indices
from core.errors import GameShapeError
from games.game import FiniteGame, Game

from .oracle import ResponseOutcome, ResponseStatus, StrategyOracle

logger = logging.getLogger(__name__)

Play = Tuple[Position, ResponseOutcome]


class NoetherianVerdict(Enum):
    HOLDS = "holds"
    REFUTED = "refuted"
    BOUND_EXCEEDED = "bound_exceeded"


@dataclass
class CheckResult:
    """检查结果；失败时 witness 给出见证位置"""
    name: str
    holds: bool
    witness: List[Position] = field(default_factory=list)
    detail: str = ""
    checked: int = 0
    verdict: Optional[NoetherianVerdict] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "witness": [w.to_list() for w in self.witness],
            "detail": self.detail,
            "checked": self.checked,
            "verdict": None if self.verdict is None else self.verdict.value,
        }


def explore(oracle: StrategyOracle, depth: int, bound: int, game: Optional[Game] = None) -> Iterator[Play]:
    """按长度逐层遍历 Opponent 的全部合法走子，给出每个奇数位置及其回应"""
    game = game or oracle.game
    frontier = [EMPTY]
    while frontier:
        next_frontier: List[Position] = []
        for s in frontier:
            if len(s) >= depth:
                continue
            for move, j in game.extensions(s, bound, Polarity.O):
                odd = s.extend(move, j)
                outcome = oracle.respond(odd)
                yield odd, outcome
                if outcome.responded and len(odd) + 1 < depth:
                    next_frontier.append(odd.extend(outcome.move, outcome.justifier))
        frontier = next_frontier


def oracle_plays(oracle: StrategyOracle, depth: int, bound: int, game: Optional[Game] = None) -> Set[Position]:
    """长度不超过 depth 的树形式位置集合"""
    plays: Set[Position] = {EMPTY}
    for odd, outcome in explore(oracle, depth, bound, game):
        plays.add(odd)
        if outcome.responded and len(odd) < depth:
            plays.add(odd.extend(outcome.move, outcome.justifier))
    return plays


def strategy_game(oracle: StrategyOracle, depth: int, bound: int, game: Optional[Game] = None) -> FiniteGame:
    """σ̂ 截断到 depth 的显式游戏"""
    game = game or oracle.game
    return FiniteGame.from_positions(game.arena, oracle_plays(oracle, depth, bound, game))


def _view_response(s: Position, outcome: ResponseOutcome, arena) -> Tuple:
    """回应相对 P 视图的描述：指针记为视图内的偏移"""
    if not outcome.responded:
        return (outcome.status, None, None)
    indices = p_view_indices(s, arena)
    j = outcome.justifier
    if j is None:
        offset = None
    elif j in indices:
        offset = indices.index(j)
    else:
        offset = "invisible"
    return (outcome.status, outcome.move, offset)


def check_innocent(oracle: StrategyOracle, depth: int, bound: int, game: Optional[Game] = None) -> CheckResult:
    """P 视图相同的奇数位置必须得到相同的回应"""
    game = game or oracle.game
    arena = game.arena
    seen: Dict[Position, Tuple[Position, Tuple]] = {}
    checked = 0
    for odd, outcome in explore(oracle, depth, bound, game):
        checked += 1
        view = odd.keep(p_view_indices(odd, arena))
        reply = _view_response(odd, outcome, arena)
        earlier = seen.setdefault(view, (odd, reply))
        if earlier[1] != reply:
            detail = f"P 视图 {view} 相同，回应分别为 {earlier[1][1]} 与 {reply[1]}"
            return CheckResult("innocent", False, [earlier[0], odd], detail, checked)
    return CheckResult("innocent", True, checked=checked)


def _pending_question(view: Position, arena) -> Optional[int]:
    answered: Set[int] = set()
    for i, (move, j) in enumerate(view):
        label = arena.label(move)
        if label is not None and not label.is_question and j is not None:
            answered.add(j)
    for i in range(len(view) - 1, -1, -1):
        label = arena.label(view.moves[i])
        if label is not None and label.is_question and i not in answered:
            return i
    return None


def check_well_bracketed(oracle: StrategyOracle, depth: int, bound: int,
                         game: Optional[Game] = None) -> CheckResult:
    """Player 的回答必须指向 P 视图中最后一个未被回答的问题"""
    game = game or oracle.game
    arena = game.arena
    checked = 0
    for odd, outcome in explore(oracle, depth, bound, game):
        if not outcome.responded or arena.label(outcome.move) is not MoveLabel.PA:
            continue
        checked += 1
        indices = p_view_indices(odd, arena)
        view = odd.keep(indices)
        pending = _pending_question(view, arena)
        target = outcome.justifier
        if pending is None or target not in indices or indices.index(target) != pending:
            detail = f"回答 {outcome.move} 指向 {target}，未回答的问题在 {None if pending is None else indices[pending]}"
            return CheckResult("well_bracketed", False, [odd.extend(outcome.move, target)], detail, checked)
    return CheckResult("well_bracketed", True, checked=checked)


def check_total(oracle: StrategyOracle, depth: int, bound: int, game: Optional[Game] = None) -> CheckResult:
    checked = 0
    for odd, outcome in explore(oracle, depth, bound, game):
        checked += 1
        if not outcome.responded:
            return CheckResult("total", False, [odd], f"{odd} 上{outcome.status.value}", checked)
    return CheckResult("total", True, checked=checked)


def check_noetherian(oracle: StrategyOracle, depth: int, bound: int, game: Optional[Game] = None) -> CheckResult:
    """三值判定：发散即否定；P 视图长度达到 depth 时只能报告超出界限。

    holds 只在 HOLDS 时为真，超出界限不算通过。
    """
    game = game or oracle.game
    arena = game.arena
    checked = 0
    exceeded: Optional[Position] = None
    for odd, outcome in explore(oracle, depth, bound, game):
        checked += 1
        if outcome.status is ResponseStatus.DIVERGED:
            return CheckResult("noetherian", False, [odd], outcome.detail, checked, NoetherianVerdict.REFUTED)
        if outcome.responded and exceeded is None:
            even = odd.extend(outcome.move, outcome.justifier)
            if len(p_view_indices(even, arena)) >= depth:
                exceeded = even
    if exceeded is not None:
        logger.warning(f"{oracle.name} 的 P 视图在 {exceeded} 处达到深度界限 {depth}")
        return CheckResult("noetherian", False, [exceeded], "P 视图达到深度界限", checked,
                           NoetherianVerdict.BOUND_EXCEEDED)
    return CheckResult("noetherian", True, checked=checked, verdict=NoetherianVerdict.HOLDS)


def check_all(oracle: StrategyOracle, depth: int, bound: int, game: Optional[Game] = None) -> Dict[str, CheckResult]:
    return {
        "innocent": check_innocent(oracle, depth, bound, game),
        "well_bracketed": check_well_bracketed(oracle, depth, bound, game),
        "total": check_total(oracle, depth, bound, game),
        "noetherian": check_noetherian(oracle, depth, bound, game),
    }


@dataclass
class EquivalenceResult:
    equivalent: bool
    witness: Optional[Position] = None
    left: Optional[ResponseOutcome] = None
    right: Optional[ResponseOutcome] = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.equivalent

    def to_dict(self) -> Dict:
        return {
            "equivalent": self.equivalent,
            "witness": None if self.witness is None else self.witness.to_list(),
            "left": None if self.left is None else self.left.to_dict(),
            "right": None if self.right is None else self.right.to_dict(),
            "checked": self.checked,
        }


def equiv_at_depth(left: StrategyOracle, right: StrategyOracle, depth: int, bound: int,
                   game: Optional[Game] = None) -> EquivalenceResult:
    """两侧在长度不超过 depth 的每个可达奇数位置上回应相同（包括是否有定义与指针）

    广度优先遍历，失败时给出最短且规范顺序最小的见证。
    """
    if game is None:
        if left.game.arena != right.game.arena:
            raise GameShapeError(f"{left.name} 与 {right.name} 不在同一个竞技场上")
        game = left.game
    queue = deque([EMPTY])
    checked = 0
    while queue:
        level = sorted(queue, key=Position.sort_key)
        queue.clear()
        odds = []
        for s in level:
            if len(s) >= depth:
                continue
            odds.extend(s.extend(m, j) for m, j in game.extensions(s, bound, Polarity.O))
        for odd in sorted(odds, key=Position.sort_key):
            checked += 1
            a = left.respond(odd, validate=False)
            b = right.respond(odd, validate=False)
            if a.key() != b.key():
                logger.debug(f"{left.name} 与 {right.name} 在 {odd} 上不同: {a} / {b}")
                return EquivalenceResult(False, odd, a, b, checked)
            if a.responded and len(odd) + 1 < depth:
                queue.append(odd.extend(a.move, a.justifier))
    return EquivalenceResult(True, checked=checked)

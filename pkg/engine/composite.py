"""交互机：σ ; τ = 并行复合加隐藏。

外部位置位于 A ⊸ C；内部交互序列位于四部分竞技场
((A ⊸ B₁) ⊸ B₂) ⊸ C。B₁ 与 B₂ 上的走子总是成对出现，
一份由分量策略给出，另一份是拷贝。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from arena.moves import RankedMove
from arena.position import EMPTY, Position
from core.errors import DivergenceError, GameShapeError
from core.ludic_message import Trace, TraceEvent
from games.composition import (A_TAG, B1_TAG, B2_TAG, C_TAG, component_of, restrict_left,
                               restrict_right)
from games.constructions import LollipopGame
from games.game import Extension

from .oracle import BoundedMemo, ResponseStatus, StrategyOracle, lollipop_sides

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 4096


def _in_left(move: RankedMove) -> bool:
    return move.has_prefix(("L", "L"))


def _in_right(move: RankedMove) -> bool:
    return move.has_prefix(B2_TAG) or move.has_prefix(C_TAG)


@dataclass
class InteractionState:
    """一次回放的内部状态

    u 为交互序列；external[i] 是第 i 个外部出现在 u 中的下标；
    partner 记录 B₁/B₂ 拷贝对。
    """
    u: Position = EMPTY
    external: List[int] = field(default_factory=list)
    partner: Dict[int, int] = field(default_factory=dict)
    steps: int = 0

    def copy(self) -> "InteractionState":
        return InteractionState(self.u, list(self.external), dict(self.partner), self.steps)

    def append(self, move: RankedMove, justifier: Optional[int]) -> int:
        self.u = self.u.extend(move, justifier)
        return len(self.u) - 1

    def external_justifier(self, index: int) -> Optional[int]:
        """沿隐藏出现的指针链追到最近的外部出现"""
        lookup = {k: i for i, k in enumerate(self.external)}
        j = self.u.justifiers[index]
        while j is not None and j not in lookup:
            j = self.u.justifiers[j]
        return None if j is None else lookup[j]

    def trace(self) -> Trace:
        events = []
        for move, j in self.u:
            part = component_of(move)
            events.append(TraceEvent(part, move.to_dict(), j, part in ("B1", "B2")))
        return Trace(events)


class Composite(StrategyOracle):
    """σ : A ⊸ B 与 τ : B ⊸ C 的复合

    每个外部偶数前缀的内部状态都被缓存，询问时只需从最长的已缓存前缀继续回放。
    """

    def __init__(self, left: StrategyOracle, right: StrategyOracle, budget: int = DEFAULT_STEP_BUDGET,
                 name: str = ""):
        a_game, b_left = lollipop_sides(left.game)
        b_right, c_game = lollipop_sides(right.game)
        if isinstance(left.game, LollipopGame) and isinstance(right.game, LollipopGame):
            if b_left.arena != b_right.arena:
                raise GameShapeError(f"{left.name} 与 {right.name} 的中间游戏不一致")
        super().__init__(LollipopGame(a_game, c_game), name or f"({left.name} ; {right.name})")
        self.left = left
        self.right = right
        self.budget = budget
        self._states: BoundedMemo = BoundedMemo()

    def _start(self, s: Position) -> Tuple[InteractionState, int]:
        for n in range(len(s) - (len(s) % 2), -1, -2):
            state = self._states.get(s.prefix(n))
            if state is not None:
                return state.copy(), n
        return InteractionState(), 0

    def _feed(self, state: InteractionState, move: RankedMove, justifier: Optional[int]) -> str:
        """把外部 O 走子写入交互序列，返回该走子所属的分量"""
        inner_j = None if justifier is None else state.external[justifier]
        if move.head_tag == "R":
            k = state.append(move, inner_j)
            state.external.append(k)
            return "right"
        if move.head_tag == "L":
            k = state.append(move.untagged().tagged(*A_TAG), inner_j)
            state.external.append(k)
            return "left"
        raise GameShapeError(f"走子 {move} 不属于 A ⊸ C")

    def _ask(self, oracle: StrategyOracle, state: InteractionState, keep) -> Optional[Tuple[RankedMove, Optional[int]]]:
        indices = [i for i, m in enumerate(state.u.moves) if keep(m)]
        if oracle is self.left:
            position = restrict_left(state.u)
        else:
            position = restrict_right(state.u)
        outcome = oracle.respond(position, validate=False)
        if outcome.status is ResponseStatus.DIVERGED:
            raise DivergenceError(f"{oracle.name} 在 {position} 上发散", state.steps)
        if outcome.status is ResponseStatus.NO_RESPONSE:
            return None
        return outcome.move, None if outcome.justifier is None else indices[outcome.justifier]

    def _run(self, state: InteractionState, owner: str) -> Optional[Extension]:
        """驱动分量策略直到产生外部走子；任一分量无回应时返回 None"""
        steps = 0
        while True:
            steps += 1
            state.steps += 1
            if steps > self.budget:
                raise DivergenceError(f"{self.name} 的内部交互超过 {self.budget} 步", steps)
            if owner == "right":
                reply = self._ask(self.right, state, _in_right)
                if reply is None:
                    return None
                move, j = reply
                if move.head_tag == "R":
                    k = state.append(move, j)
                    return self._emit(state, k, move)
                b = move.untagged()
                k2 = state.append(b.tagged(*B2_TAG), j)
                b_initial = j is not None and state.u.moves[j].has_prefix(C_TAG)
                k1 = state.append(b.tagged(*B1_TAG), k2 if b_initial else state.partner[j])
                state.partner[k1], state.partner[k2] = k2, k1
                logger.debug(f"{self.name}: τ 在 B 中走出 {b}")
                owner = "left"
            else:
                reply = self._ask(self.left, state, _in_left)
                if reply is None:
                    return None
                move, j = reply
                if move.head_tag == "L":
                    k = state.append(move.untagged().tagged(*A_TAG), j)
                    return self._emit(state, k, move)
                b = move.untagged()
                k1 = state.append(b.tagged(*B1_TAG), j)
                k2 = state.append(b.tagged(*B2_TAG), state.partner[j])
                state.partner[k1], state.partner[k2] = k2, k1
                logger.debug(f"{self.name}: σ 在 B 中走出 {b}")
                owner = "right"

    def _emit(self, state: InteractionState, k: int, move: RankedMove) -> Extension:
        justifier = state.external_justifier(k)
        state.external.append(k)
        return move, justifier

    def _replay(self, s: Position) -> Tuple[Optional[InteractionState], Optional[Extension]]:
        state, n = self._start(s)
        while n < len(s):
            owner = self._feed(state, s.moves[n], s.justifiers[n])
            produced = self._run(state, owner)
            if n + 1 == len(s):
                return state, produced
            if produced != (s.moves[n + 1], s.justifiers[n + 1]):
                return None, None
            n += 2
            self._states[s.prefix(n)] = state.copy()
        return state, None

    def next_move(self, s: Position) -> Optional[Extension]:
        _, produced = self._replay(s)
        return produced

    def interaction(self, s: Position) -> Trace:
        """s 及其回应背后的完整交互序列，B₁/B₂ 走子标为隐藏"""
        state, _ = self._replay(s)
        if state is None:
            return Trace()
        return state.trace()


def compose(left: StrategyOracle, right: StrategyOracle, budget: int = DEFAULT_STEP_BUDGET) -> Composite:
    return Composite(left, right, budget)

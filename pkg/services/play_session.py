"""与策略对弈的会话状态

用户扮演 Opponent，输入 `ident [@ 指针]` 形式的走子。标记可以省略：
省略时在当前合法的 O 走子中按 ident（与指针）唯一匹配。
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from arena.moves import Polarity, RankedMove
from arena.position import EMPTY, Position
from arena.views import legal_extension, o_view, p_view
from core.errors import LudicError
from engine.oracle import ResponseOutcome, StrategyOracle
from games.game import Extension, Game

logger = logging.getLogger(__name__)

MOVE_PATTERN = re.compile(
    r"^\s*(?:(?P<tags>[^\s:@\[]+):)?(?P<ident>\[\d+\]_\d+|[^\s@]+)\s*(?:@\s*(?P<justifier>\d+))?\s*$")
NAME_PATTERN = re.compile(r"^\[(\d+)\]_(\d+)$")


def parse_move(text: str) -> Tuple[RankedMove, Optional[int], bool]:
    """解析一个走子，返回 (走子, 指针, 是否写出了标记)"""
    match = MOVE_PATTERN.match(text)
    if match is None:
        raise LudicError(f"无法解析走子 {text!r}，格式为 ident [@ 指针]，例如 q、3 @ 1、L.!:q")
    raw = match.group("ident")
    name = NAME_PATTERN.match(raw)
    if name:
        move = RankedMove(int(name.group(1)), int(name.group(2)))
    elif raw.isdigit():
        move = RankedMove(int(raw))
    else:
        move = RankedMove(raw)
    tags = match.group("tags")
    if tags:
        move = move.tagged(*tags.split("."))
    justifier = match.group("justifier")
    return move, None if justifier is None else int(justifier), bool(tags)


def show_position(s: Position) -> str:
    if not len(s):
        return "（空位置）"
    lines = []
    for i, (move, j) in enumerate(s):
        pointer = "" if j is None else f" @ {j}"
        side = "O" if i % 2 == 0 else "P"
        lines.append(f"{i:>3} {side} {move}{pointer}")
    return "\n".join(lines)


@dataclass
class PlayStep:
    move: RankedMove
    justifier: Optional[int]
    outcome: ResponseOutcome

    def to_dict(self) -> Dict:
        return {"move": self.move.to_dict(), "justifier": self.justifier, "outcome": self.outcome.to_dict()}


class PlaySession:
    """在 game 上与 oracle 对弈；引擎的每个回应都经过合法性检查"""

    def __init__(self, oracle: StrategyOracle, game: Game, bound: int = 32, name: str = ""):
        self.oracle = oracle
        self.game = game
        self.bound = bound
        self.name = name or oracle.name
        self.position: Position = EMPTY
        self.history: List[Position] = []
        self.logger = logging.getLogger(self.__class__.__name__)

    @property
    def finished(self) -> bool:
        """Player 没有回应时对局停在奇数长度上"""
        return self.position.is_odd

    def legal_moves(self) -> List[Extension]:
        if self.finished:
            return []
        return list(self.game.extensions(self.position, self.bound, Polarity.O))

    def resolve(self, text: str) -> Extension:
        """把输入解析为当前位置上的合法 O 走子；不合法时说明违反了哪一条"""
        if self.finished:
            raise LudicError("Player 已经无法回应，请先 undo")
        move, justifier, explicit = parse_move(text)
        legal = self.legal_moves()

        def matches(candidate: Extension) -> bool:
            m, j = candidate
            same = m == move if explicit else (m.ident, m.rank) == (move.ident, move.rank)
            return same and (justifier is None or j == justifier)

        candidates = [c for c in legal if matches(c)]
        if len(candidates) == 1:
            return candidates[0]
        if len(candidates) > 1:
            options = ", ".join(f"{m}@{j}" if j is not None else str(m) for m, j in candidates)
            raise LudicError(f"走子 {text!r} 有歧义，可选: {options}")
        raise LudicError(self.diagnose(move, justifier, explicit))

    def diagnose(self, move: RankedMove, justifier: Optional[int], explicit: bool) -> str:
        if not explicit:
            arena = self.game.arena
            same_ident = [m for m in arena.moves(self.bound)
                          if (m.ident, m.rank) == (move.ident, move.rank)
                          and arena.label(m).polarity is Polarity.O]
            if same_ident:
                move = same_ident[0]
        if justifier is None and not self.game.arena.enables(None, move):
            justifier = len(self.position) - 1 if len(self.position) else None
        verdict = legal_extension(self.game.arena, self.position, move, justifier)
        if not verdict:
            return f"非法走子（{verdict.clause}）: {verdict.reason}"
        return f"{move} 满足合法性，但 {self.position.extend(move, justifier)} 不是该游戏的位置"

    def play(self, text: str) -> PlayStep:
        move, justifier = self.resolve(text)
        odd = self.position.extend(move, justifier)
        outcome = self.oracle.respond(odd, validate=True)
        self.history.append(self.position)
        self.position = odd.extend(outcome.move, outcome.justifier) if outcome.responded else odd
        self.logger.debug(f"{self.name}: O {move}@{justifier} → {outcome}")
        return PlayStep(move, justifier, outcome)

    def undo(self) -> Position:
        """撤销最后一对 O/P 走子（Player 没有回应时只撤销 O 走子）"""
        if not self.history:
            raise LudicError("没有可以撤销的走子")
        self.position = self.history.pop()
        return self.position

    def views(self) -> Dict[str, Position]:
        arena = self.game.arena
        return {"P-view": p_view(self.position, arena), "O-view": o_view(self.position, arena)}

    def render(self) -> str:
        return show_position(self.position)

"""策略即下一步函数。

StrategyOracle 在奇数长度的合法位置上给出 Player 的回应，结果为三态：
有回应、无回应、发散（交互超出预算）。
"""

import logging
from abc import ABC, abstractmethod
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from arena.moves import Polarity, RankedMove
from arena.position import EMPTY, Position
from arena.views import is_legal, legal_extension
from core.errors import DivergenceError, InvariantBreach, StrategyError
from games.composition import SideArena
from games.constructions import LollipopGame
from games.game import ArenaGame, Extension, FiniteGame, Game
from games.strategy_table import StrategyTable, tree_form

logger = logging.getLogger(__name__)

MEMO_LIMIT = 65536


class BoundedMemo(OrderedDict):
    """最近最少使用的条目先被淘汰的记忆表"""

    def __init__(self, limit: int = MEMO_LIMIT):
        super().__init__()
        self.limit = limit

    def get(self, key, default=None):
        if key not in self:
            return default
        self.move_to_end(key)
        return self[key]

    def __setitem__(self, key, value):
        super().__setitem__(key, value)
        self.move_to_end(key)
        while len(self) > self.limit:
            self.popitem(last=False)


class ResponseStatus(Enum):
    RESPONDED = "responded"
    NO_RESPONSE = "no_response"
    DIVERGED = "diverged"


@dataclass(frozen=True)
class ResponseOutcome:
    """respond 的结果；只有 RESPONDED 带有走子与指针"""
    status: ResponseStatus
    move: Optional[RankedMove] = None
    justifier: Optional[int] = None
    steps: int = 0
    detail: str = ""

    @property
    def responded(self) -> bool:
        return self.status is ResponseStatus.RESPONDED

    @property
    def extension(self) -> Optional[Extension]:
        return (self.move, self.justifier) if self.responded else None

    def key(self) -> Tuple:
        """行为比较用的键：状态加上走子与指针"""
        return (self.status, self.move, self.justifier)

    def to_dict(self) -> Dict:
        return {
            "status": self.status.value,
            "move": None if self.move is None else self.move.to_dict(),
            "justifier": self.justifier,
            "steps": self.steps,
            "detail": self.detail,
        }

    @classmethod
    def of(cls, move: RankedMove, justifier: Optional[int], steps: int = 0) -> "ResponseOutcome":
        return cls(ResponseStatus.RESPONDED, move, justifier, steps)

    @classmethod
    def none(cls, detail: str = "") -> "ResponseOutcome":
        return cls(ResponseStatus.NO_RESPONSE, detail=detail)

    @classmethod
    def diverged(cls, steps: Optional[int], detail: str = "") -> "ResponseOutcome":
        return cls(ResponseStatus.DIVERGED, steps=steps or 0, detail=detail)

    def __str__(self) -> str:
        if self.status is ResponseStatus.RESPONDED:
            return f"{self.move}" if self.justifier is None else f"{self.move}@{self.justifier}"
        return self.status.value


class StrategyOracle(ABC):
    """策略的抽象基类

    子类实现 next_move；respond 负责输入检查、记忆化、发散捕获与输出合法性检查。
    """

    def __init__(self, game: Game, name: str = ""):
        self.game = game
        self.name = name or self.__class__.__name__
        self._memo: BoundedMemo = BoundedMemo()
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def next_move(self, s: Position) -> Optional[Extension]:
        """σ(s)；未定义时返回 None，内部交互发散时抛出 DivergenceError"""

    def respond(self, s: Position, validate: bool = True) -> ResponseOutcome:
        if not s.is_odd:
            raise StrategyError(f"只能在奇数长度位置上询问策略 {self.name}: {s}")
        if validate:
            verdict = is_legal(self.game.arena, s)
            if not verdict:
                raise StrategyError(f"{s} 不是合法位置: {verdict.reason}")
        cached = self._memo.get(s)
        if cached is not None:
            return cached
        try:
            extension = self.next_move(s)
        except DivergenceError as e:
            self.logger.debug(f"{self.name} 在 {s} 上发散: {e}")
            outcome = ResponseOutcome.diverged(e.steps, str(e))
            self._memo[s] = outcome
            return outcome
        if extension is None:
            outcome = ResponseOutcome.none()
        else:
            move, justifier = extension
            if validate:
                verdict = legal_extension(self.game.arena, s, move, justifier)
                if not verdict:
                    raise InvariantBreach(f"{self.name} 在 {s} 上给出非法走子 {move}@{justifier}: {verdict.reason}")
            outcome = ResponseOutcome.of(move, justifier)
        self._memo[s] = outcome
        return outcome

    def __call__(self, s: Position) -> ResponseOutcome:
        return self.respond(s)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name})"


class TableOracle(StrategyOracle):
    """由显式树形式策略给出回应"""

    def __init__(self, table: StrategyTable, name: str = ""):
        super().__init__(table.game, name or "table")
        self.table = table

    def next_move(self, s: Position) -> Optional[Extension]:
        return self.table.respond(s)


class FunctionOracle(StrategyOracle):
    """由普通函数给出回应，函数在位置上返回 (走子, 指针) 或 None"""

    def __init__(self, game: Game, fn: Callable[[Position], Optional[Extension]], name: str = ""):
        super().__init__(game, name or getattr(fn, "__name__", "function"))
        self.fn = fn

    def next_move(self, s: Position) -> Optional[Extension]:
        return self.fn(s)


def lollipop_sides(game: Game) -> Tuple[Game, Game]:
    """A ⊸ B 形状游戏的两侧；不是 LollipopGame 时只按竞技场取出"""
    if isinstance(game, LollipopGame):
        return game.left, game.right
    return ArenaGame(SideArena(game.arena, "L")), ArenaGame(SideArena(game.arena, "R"))


def table_from_oracle(oracle: StrategyOracle, game: FiniteGame) -> StrategyTable:
    """在有限游戏上展开 oracle，得到树形式策略；发散视为无回应"""
    plays = {EMPTY}
    stack = [EMPTY]
    while stack:
        s = stack.pop()
        for move, j in game.extensions(s, 0, Polarity.O):
            odd = s.extend(move, j)
            outcome = oracle.respond(odd, validate=False)
            if not outcome.responded:
                continue
            even = odd.extend(outcome.move, outcome.justifier)
            if even not in game.position_set:
                raise InvariantBreach(f"{oracle.name} 的回应 {even} 不在游戏中")
            plays.add(even)
            stack.append(even)
    return tree_form(plays, game)

"""游戏上的构造：⊗、⊸、&、! 与 ⇒。

惰性构造按定义中的限制条件判定位置；输入都是 FiniteGame 时
直接物化为显式游戏。
"""

from dataclasses import dataclass
from typing import Union

from arena.arena import BangArena, LollipopArena, SumArena
from arena.position import Position
from arena.views import threads

from .game import FiniteGame, Game, TerminalGame

DEFAULT_THREAD_BOUND = 3


def _max_length(game: FiniteGame) -> int:
    return max((len(s) for s in game.position_set), default=0)


@dataclass(frozen=True)
class TensorGame(Game):
    """A ⊗ B：两局无通信地并行进行"""
    left: Game
    right: Game

    @property
    def arena(self) -> SumArena:
        return SumArena(self.left.arena, self.right.arena)

    @property
    def well_opened(self) -> bool:
        if isinstance(self.left, TerminalGame):
            return self.right.well_opened
        if isinstance(self.right, TerminalGame):
            return self.left.well_opened
        return False

    def accepts(self, s: Position) -> bool:
        return (self.left.admits(s.restrict_prefix(("L",)))
                and self.right.admits(s.restrict_prefix(("R",))))

    def rank(self, bound: int = 4) -> int:
        return max(self.left.rank(bound), self.right.rank(bound))


@dataclass(frozen=True)
class LollipopGame(Game):
    """A ⊸ B：A 中双方角色互换"""
    left: Game
    right: Game

    @property
    def arena(self) -> LollipopArena:
        return LollipopArena(self.left.arena, self.right.arena)

    @property
    def well_opened(self) -> bool:
        return self.right.well_opened

    def accepts(self, s: Position) -> bool:
        return (self.right.admits(s.restrict_prefix(("R",)))
                and self.left.admits(s.restrict_prefix(("L",))))

    def rank(self, bound: int = 4) -> int:
        return max(self.left.rank(bound), self.right.rank(bound))


@dataclass(frozen=True)
class ProductGame(Game):
    """A & B：Opponent 选择其中一个分量进行"""
    left: Game
    right: Game

    @property
    def arena(self) -> SumArena:
        return SumArena(self.left.arena, self.right.arena)

    @property
    def well_opened(self) -> bool:
        return self.left.well_opened and self.right.well_opened

    def accepts(self, s: Position) -> bool:
        if not s:
            return True
        side = s.moves[0].head_tag
        other = "R" if side == "L" else "L"
        if any(m.head_tag == other for m in s.moves):
            return False
        component = self.left if side == "L" else self.right
        return component.admits(s.restrict_prefix((side,)))

    def rank(self, bound: int = 4) -> int:
        return max(self.left.rank(bound), self.right.rank(bound))


@dataclass(frozen=True)
class BangGame(Game):
    """!A：A 的有限多条线程交错进行，线程数不超过 thread_bound"""
    inner: Game
    thread_bound: int = DEFAULT_THREAD_BOUND

    @property
    def arena(self) -> BangArena:
        return BangArena(self.inner.arena)

    @property
    def well_opened(self) -> bool:
        return isinstance(self.inner, TerminalGame)

    def accepts(self, s: Position) -> bool:
        if len(s.initial_indices()) > self.thread_bound:
            return False
        return all(self.inner.admits(t.restrict_prefix(("!",))) for t in threads(s))

    def rank(self, bound: int = 4) -> int:
        return self.inner.rank(bound)


def tensor(left: Game, right: Game) -> Union[FiniteGame, TensorGame]:
    game = TensorGame(left, right)
    if isinstance(left, FiniteGame) and isinstance(right, FiniteGame):
        return game.materialize(_max_length(left) + _max_length(right), 0)
    return game


def lollipop(left: Game, right: Game) -> Union[FiniteGame, LollipopGame]:
    game = LollipopGame(left, right)
    if isinstance(left, FiniteGame) and isinstance(right, FiniteGame):
        return game.materialize(_max_length(left) + _max_length(right), 0)
    return game


def product(left: Game, right: Game) -> Union[FiniteGame, ProductGame]:
    game = ProductGame(left, right)
    if isinstance(left, FiniteGame) and isinstance(right, FiniteGame):
        return game.materialize(max(_max_length(left), _max_length(right)), 0)
    return game


def bang(inner: Game, thread_bound: int = DEFAULT_THREAD_BOUND) -> Union[FiniteGame, BangGame]:
    game = BangGame(inner, thread_bound)
    if isinstance(inner, FiniteGame):
        return game.materialize(thread_bound * _max_length(inner), 0)
    return game


def implication(left: Game, right: Game, thread_bound: int = DEFAULT_THREAD_BOUND) -> Game:
    """A ⇒ B = !A ⊸ B"""
    return lollipop(bang(left, thread_bound), right)

"""游戏：竞技场加上有效位置集合。

惰性游戏以判定过程 accepts 描述 P_G；FiniteGame 显式列出全部位置，
作为小规模穷举检查的基准。
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from arena.arena import Arena, EmptyArena, EnablingPair, ExplicitArena, FlatArena, finite_flat_arena, nat_flat_arena
from arena.moves import CHECK, MoveLabel, Polarity, RankedMove
from arena.position import EMPTY, Position
from arena.views import is_legal, legal_extension

logger = logging.getLogger(__name__)

Extension = Tuple[RankedMove, Optional[int]]


class Game(ABC):
    """游戏抽象基类"""

    @property
    @abstractmethod
    def arena(self) -> Arena:
        ...

    @abstractmethod
    def accepts(self, s: Position) -> bool:
        """游戏特有的条件；调用方保证 s 在竞技场中合法"""

    @property
    def well_opened(self) -> bool:
        return False

    def admits(self, s: Position) -> bool:
        return bool(is_legal(self.arena, s)) and self.accepts(s)

    def justifier_candidates(self, s: Position, move: RankedMove) -> Iterator[Optional[int]]:
        if self.arena.enables(None, move):
            yield None
            return
        for i in range(len(s) - 1, -1, -1):
            if self.arena.enables(s.moves[i], move):
                yield i

    def extensions(self, s: Position, bound: int, polarity: Optional[Polarity] = None) -> Iterator[Extension]:
        """s·m ∈ P_G 的全部 (m, 指针)，走子按 bound 截断"""
        for move in self.arena.moves(bound):
            label = self.arena.label(move)
            if polarity is not None and label.polarity is not polarity:
                continue
            for j in self.justifier_candidates(s, move):
                if legal_extension(self.arena, s, move, j) and self.accepts(s.extend(move, j)):
                    yield move, j

    def positions(self, depth: int, bound: int) -> List[Position]:
        """长度不超过 depth 的全部有效位置，按规范顺序排列"""
        found: List[Position] = []
        stack = [EMPTY]
        while stack:
            s = stack.pop()
            found.append(s)
            if len(s) >= depth:
                continue
            for move, j in self.extensions(s, bound):
                stack.append(s.extend(move, j))
        return sorted(found, key=Position.sort_key)

    def materialize(self, depth: int = 8, bound: int = 4) -> "FiniteGame":
        return FiniteGame.from_positions(self.arena, self.positions(depth, bound))

    def rank(self, bound: int = 4) -> int:
        top = self.arena.max_move_rank(bound)
        return 1 if top is None else top + 1


@dataclass(frozen=True, eq=False)
class FiniteGame(Game):
    """显式有限游戏，用作穷举检查的基准"""
    explicit_arena: ExplicitArena
    position_set: FrozenSet[Position]

    @property
    def arena(self) -> ExplicitArena:
        return self.explicit_arena

    def accepts(self, s: Position) -> bool:
        return s in self.position_set

    def admits(self, s: Position) -> bool:
        return s in self.position_set

    @cached_property
    def _children(self) -> Dict[Position, List[Extension]]:
        children: Dict[Position, List[Extension]] = {}
        for s in self.position_set:
            if s:
                children.setdefault(s.prefix(len(s) - 1), []).append((s.last, s.justifiers[-1]))
        for key in children:
            children[key].sort(key=lambda e: (e[0].sort_key(), -1 if e[1] is None else e[1]))
        return children

    def extensions(self, s: Position, bound: int = 0, polarity: Optional[Polarity] = None) -> Iterator[Extension]:
        for move, j in self._children.get(s, []):
            if polarity is None or self.arena.label(move).polarity is polarity:
                yield move, j

    def positions(self, depth: int = 1 << 30, bound: int = 0) -> List[Position]:
        return [s for s in self.sorted_positions if len(s) <= depth]

    @cached_property
    def sorted_positions(self) -> List[Position]:
        return sorted(self.position_set, key=Position.sort_key)

    @property
    def moves(self) -> List[RankedMove]:
        return list(self.arena.moves(0))

    @property
    def well_opened(self) -> bool:
        for s in self.position_set:
            if any(j is None for j in s.justifiers[1:]):
                return False
        return True

    def rank(self, bound: int = 0) -> int:
        ranks = [m.rank for m in self.arena.labels]
        return 1 if not ranks else max(ranks) + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGame):
            return NotImplemented
        return self.arena == other.arena and self.position_set == other.position_set

    def __hash__(self) -> int:
        return hash((self.arena, self.position_set))

    @classmethod
    def from_positions(cls, arena: Arena, positions: Iterable[Position]) -> "FiniteGame":
        """以经济的方式收集走子与使能对：只保留在位置中实际用到的部分"""
        position_set = frozenset(positions) | {EMPTY}
        labels: Dict[RankedMove, MoveLabel] = {}
        enabling: Set[EnablingPair] = set()
        for s in position_set:
            for i, (move, j) in enumerate(s):
                labels[move] = arena.label(move)
                enabling.add((None if j is None else s.moves[j], move))
        return cls(ExplicitArena(labels, frozenset(enabling)), position_set)

    @classmethod
    def build(cls, labels: Dict[RankedMove, MoveLabel], enabling: Iterable[EnablingPair],
              positions: Iterable[Position]) -> "FiniteGame":
        return cls(ExplicitArena.build(labels, enabling), frozenset(positions) | {EMPTY})

    def to_dict(self) -> Dict:
        return {
            "moves": [m.to_dict() for m in self.moves],
            "labels": [self.arena.labels[m].value for m in self.moves],
            "enables": sorted(
                [[None if a is None else a.to_dict(), b.to_dict()] for a, b in self.arena.enabling],
                key=str,
            ),
            "positions": [s.to_list() for s in self.sorted_positions],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "FiniteGame":
        moves = [RankedMove.from_dict(m) for m in data["moves"]]
        labels = {m: MoveLabel(lab) for m, lab in zip(moves, data["labels"])}
        enabling = [(None if a is None else RankedMove.from_dict(a), RankedMove.from_dict(b))
                    for a, b in data["enables"]]
        positions = [Position.from_list(p) for p in data["positions"]]
        return cls.build(labels, enabling, positions)

    def __repr__(self) -> str:
        return f"FiniteGame(moves={len(self.arena.labels)}, positions={len(self.position_set)})"


@dataclass(frozen=True)
class FlatGame(Game):
    """flat(A)：位置为 ε、q 与 q·a"""
    flat_arena: FlatArena

    @property
    def arena(self) -> FlatArena:
        return self.flat_arena

    @property
    def name(self) -> str:
        return self.flat_arena.name

    @property
    def well_opened(self) -> bool:
        return True

    def accepts(self, s: Position) -> bool:
        return len(s) <= 2

    def answers(self, bound: int) -> List[RankedMove]:
        return [m for m in self.arena.moves(bound) if m != self.arena.question]


@dataclass(frozen=True)
class TerminalGame(Game):
    """终对象 I = (∅, ∅, ∅, {ε})"""

    @property
    def arena(self) -> EmptyArena:
        return EmptyArena()

    @property
    def well_opened(self) -> bool:
        return True

    def accepts(self, s: Position) -> bool:
        return len(s) == 0


def nat_game() -> FlatGame:
    return FlatGame(nat_flat_arena())


def flat_game(name: str, answers: Iterable[RankedMove]) -> FlatGame:
    return FlatGame(finite_flat_arena(name, answers))


def unit_game() -> FlatGame:
    """𝟙：唯一的回答是 ok"""
    return flat_game("Unit", [CHECK])


def empty_game() -> FlatGame:
    """𝟘：只有问题没有回答"""
    return flat_game("Empty", [])


def bool_game() -> FlatGame:
    return flat_game("Bool", [RankedMove("tt"), RankedMove("ff")])


@dataclass(frozen=True)
class ArenaGame(Game):
    """只以竞技场合法性为准的游戏，位置集合就是全部合法位置"""
    base_arena: Arena

    @property
    def arena(self) -> Arena:
        return self.base_arena

    def accepts(self, s: Position) -> bool:
        return True

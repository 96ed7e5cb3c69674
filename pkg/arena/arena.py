"""竞技场：走子集合、标签函数与使能关系。

无限走子集合（例如 flat(ℕ)）以判定过程加有界枚举器表示，
枚举时只列出 ident 不超过 bound 的走子。
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from .moves import QUESTION, MoveLabel, RankedMove

EnablingPair = Tuple[Optional[RankedMove], RankedMove]


class Arena(ABC):
    """竞技场抽象基类，None 代表根 ⋆"""

    @abstractmethod
    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        """走子的标签；不属于本竞技场时返回 None"""

    @abstractmethod
    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        """source ⊢ target；source 为 None 表示根使能"""

    @abstractmethod
    def moves(self, bound: int) -> Iterator[RankedMove]:
        """有界枚举走子"""

    def contains(self, move: RankedMove) -> bool:
        return self.label(move) is not None

    def is_initial(self, move: RankedMove) -> bool:
        return self.contains(move) and self.enables(None, move)

    def initial_moves(self, bound: int) -> List[RankedMove]:
        return [m for m in self.moves(bound) if self.enables(None, m)]

    def max_move_rank(self, bound: int) -> Optional[int]:
        ranks = [m.rank for m in self.moves(bound)]
        return max(ranks) if ranks else None


@dataclass(frozen=True)
class ExplicitArena(Arena):
    """有限竞技场，标签与使能关系都显式给出"""
    labels: Mapping[RankedMove, MoveLabel] = field(default_factory=dict)
    enabling: FrozenSet[EnablingPair] = frozenset()

    def __hash__(self) -> int:
        return hash((frozenset(self.labels.items()), self.enabling))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExplicitArena):
            return NotImplemented
        return dict(self.labels) == dict(other.labels) and self.enabling == other.enabling

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        return self.labels.get(move)

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        return (source, target) in self.enabling

    def moves(self, bound: int = 0) -> Iterator[RankedMove]:
        return iter(sorted(self.labels, key=RankedMove.sort_key))

    @classmethod
    def build(cls, labels: Mapping[RankedMove, MoveLabel], enabling: Iterable[EnablingPair]) -> "ExplicitArena":
        return cls(dict(labels), frozenset(enabling))

    def union(self, other: "ExplicitArena") -> "ExplicitArena":
        merged: Dict[RankedMove, MoveLabel] = dict(self.labels)
        merged.update(other.labels)
        return ExplicitArena(merged, self.enabling | other.enabling)


@dataclass(frozen=True)
class FlatArena(Arena):
    """flat(A)：q 为 OQ 初始走子，每个回答为 PA 且由 q 使能"""
    name: str
    answer_test: Callable[[RankedMove], bool] = field(compare=False, hash=False)
    answer_enum: Callable[[int], Iterable[RankedMove]] = field(compare=False, hash=False)
    question: RankedMove = QUESTION

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        if move == self.question:
            return MoveLabel.OQ
        if self.answer_test(move):
            return MoveLabel.PA
        return None

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        if source is None:
            return target == self.question
        return source == self.question and self.answer_test(target)

    def moves(self, bound: int) -> Iterator[RankedMove]:
        yield self.question
        yield from self.answer_enum(bound)


def finite_flat_arena(name: str, answers: Iterable[RankedMove]) -> FlatArena:
    pool = frozenset(answers)
    ordered = sorted(pool, key=RankedMove.sort_key)
    return FlatArena(name, pool.__contains__, lambda bound: iter(ordered))


def nat_flat_arena() -> FlatArena:
    def is_nat(move: RankedMove) -> bool:
        return isinstance(move.ident, int) and move.ident >= 0 and move.rank == 0 and not move.tag_path

    return FlatArena("N", is_nat, lambda bound: (RankedMove(n) for n in range(bound + 1)))


@dataclass(frozen=True)
class EmptyArena(Arena):
    """终对象 I 的竞技场"""

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        return None

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        return False

    def moves(self, bound: int) -> Iterator[RankedMove]:
        return iter(())


def _side(move: RankedMove, tag: str) -> Optional[RankedMove]:
    if move.tag_path[:1] == (tag,):
        return move.untagged()
    return None


@dataclass(frozen=True)
class SumArena(Arena):
    """⊗ 与 & 共用的竞技场：左右分量以 "L"/"R" 标记"""
    left: Arena
    right: Arena

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        inner = _side(move, "L")
        if inner is not None:
            return self.left.label(inner)
        inner = _side(move, "R")
        if inner is not None:
            return self.right.label(inner)
        return None

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        for tag, part in (("L", self.left), ("R", self.right)):
            inner = _side(target, tag)
            if inner is None:
                continue
            if source is None:
                return part.enables(None, inner)
            inner_source = _side(source, tag)
            return inner_source is not None and part.enables(inner_source, inner)
        return False

    def moves(self, bound: int) -> Iterator[RankedMove]:
        for m in self.left.moves(bound):
            yield m.tagged("L")
        for m in self.right.moves(bound):
            yield m.tagged("R")


@dataclass(frozen=True)
class LollipopArena(Arena):
    """A ⊸ B：左侧极性翻转，只有 B 的初始走子由根使能，B 初始走子使能 A 初始走子"""
    left: Arena
    right: Arena

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        inner = _side(move, "L")
        if inner is not None:
            lab = self.left.label(inner)
            return lab.flipped() if lab is not None else None
        inner = _side(move, "R")
        if inner is not None:
            return self.right.label(inner)
        return None

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        right_target = _side(target, "R")
        if right_target is not None:
            if source is None:
                return self.right.enables(None, right_target)
            right_source = _side(source, "R")
            return right_source is not None and self.right.enables(right_source, right_target)
        left_target = _side(target, "L")
        if left_target is None or source is None:
            return False
        left_source = _side(source, "L")
        if left_source is not None:
            return self.left.enables(left_source, left_target)
        right_source = _side(source, "R")
        return (right_source is not None and self.right.is_initial(right_source)
                and self.left.is_initial(left_target))

    def moves(self, bound: int) -> Iterator[RankedMove]:
        for m in self.left.moves(bound):
            yield m.tagged("L")
        for m in self.right.moves(bound):
            yield m.tagged("R")


@dataclass(frozen=True)
class BangArena(Arena):
    """!A 的竞技场与 A 相同，只多一层 "!" 标记"""
    inner: Arena

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        inner = _side(move, "!")
        return self.inner.label(inner) if inner is not None else None

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        inner = _side(target, "!")
        if inner is None:
            return False
        if source is None:
            return self.inner.enables(None, inner)
        inner_source = _side(source, "!")
        return inner_source is not None and self.inner.enables(inner_source, inner)

    def moves(self, bound: int) -> Iterator[RankedMove]:
        for m in self.inner.moves(bound):
            yield m.tagged("!")


@dataclass(frozen=True)
class UnionArena(Arena):
    """若干竞技场的并，标签冲突时以第一个为准"""
    parts: Tuple[Arena, ...]

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        for part in self.parts:
            lab = part.label(move)
            if lab is not None:
                return lab
        return None

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        return any(part.contains(target) and (source is None or part.contains(source))
                   and part.enables(source, target) for part in self.parts)

    def moves(self, bound: int) -> Iterator[RankedMove]:
        seen = set()
        for part in self.parts:
            for m in part.moves(bound):
                if m not in seen:
                    seen.add(m)
                    yield m


@dataclass(frozen=True)
class ArenaViolation:
    """validate_arena 报告中的一条违规"""
    clause: str
    source: Optional[RankedMove]
    target: RankedMove
    detail: str

    def __str__(self) -> str:
        return f"{self.clause}: {self.detail}"


def validate_arena(arena: Arena, bound: int = 8) -> List[ArenaViolation]:
    """检查 E1–E3；违规作为数据返回"""
    moves = list(arena.moves(bound))
    violations: List[ArenaViolation] = []
    for target in moves:
        label = arena.label(target)
        if arena.enables(None, target):
            if label is not MoveLabel.OQ:
                violations.append(ArenaViolation("E1", None, target, f"根使能的走子 {target} 标签为 {label.value}"))
            for source in moves:
                if arena.enables(source, target):
                    violations.append(ArenaViolation("E1", source, target, f"初始走子 {target} 还被 {source} 使能"))
        for source in moves:
            if not arena.enables(source, target):
                continue
            source_label = arena.label(source)
            if not label.is_question and not source_label.is_question:
                violations.append(ArenaViolation("E2", source, target, f"回答 {target} 由回答 {source} 使能"))
            if source_label.polarity is label.polarity:
                violations.append(ArenaViolation("E3", source, target, f"{source} 与 {target} 极性相同"))
    return violations

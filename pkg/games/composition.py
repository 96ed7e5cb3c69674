"""游戏的复合 J ; K 与覆盖引理的穷举检查。

交互序列位于四部分竞技场 ((A ⊸ B₁) ⊸ B₂) ⊸ C 中，标记路径为：
A = L.L.L，B₁ = L.L.R，B₂ = L.R，C = R。
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Set, Tuple

from arena.arena import Arena, LollipopArena
from arena.moves import MoveLabel, RankedMove
from arena.position import EMPTY, Position
from arena.views import is_legal
from core.errors import GameShapeError

from .game import FiniteGame, Game

logger = logging.getLogger(__name__)

Predicate = Callable[[Position], bool]

A_TAG = ("L", "L", "L")
B1_TAG = ("L", "L", "R")
B2_TAG = ("L", "R")
C_TAG = ("R",)
COMPONENTS = (("A", A_TAG), ("B1", B1_TAG), ("B2", B2_TAG), ("C", C_TAG))


def component_of(move: RankedMove) -> str:
    for name, tag in COMPONENTS:
        if move.has_prefix(tag):
            return name
    raise GameShapeError(f"走子 {move} 不属于交互竞技场")


@dataclass(frozen=True)
class SideArena(Arena):
    """从 X ⊸ Y 形状的竞技场中取出一侧，用于还原中间游戏 B"""
    whole: Arena
    tag: str

    @property
    def _part(self) -> Optional[Arena]:
        if isinstance(self.whole, LollipopArena):
            return self.whole.left if self.tag == "L" else self.whole.right
        return None

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        if self._part is not None:
            return self._part.label(move)
        lab = self.whole.label(move.tagged(self.tag))
        if lab is None:
            return None
        return lab.flipped() if self.tag == "L" else lab

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        if self._part is not None:
            return self._part.enables(source, target)
        if source is None:
            if self.tag == "R":
                return self.whole.enables(None, target.tagged("R"))
            return any(self.whole.enables(r, target.tagged("L")) for r in self.whole.initial_moves(64))
        return self.whole.enables(source.tagged(self.tag), target.tagged(self.tag))

    def moves(self, bound: int) -> Iterator[RankedMove]:
        if self._part is not None:
            yield from self._part.moves(bound)
            return
        for m in self.whole.moves(bound):
            if m.head_tag == self.tag:
                yield m.untagged()


@dataclass(frozen=True)
class InteractionArena(Arena):
    """四部分竞技场，由 J 的 A ⊸ B 竞技场与 K 的 B ⊸ C 竞技场拼成"""
    left: Arena
    right: Arena

    def _left_part(self, move: RankedMove) -> Optional[RankedMove]:
        if move.has_prefix(A_TAG):
            return move.untagged(3).tagged("L")
        if move.has_prefix(B1_TAG):
            return move.untagged(3).tagged("R")
        return None

    def _right_part(self, move: RankedMove) -> Optional[RankedMove]:
        if move.has_prefix(B2_TAG):
            return move.untagged(2).tagged("L")
        if move.has_prefix(C_TAG):
            return move.untagged(1).tagged("R")
        return None

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        part = self._left_part(move)
        if part is not None:
            return self.left.label(part)
        part = self._right_part(move)
        return self.right.label(part) if part is not None else None

    def _b_initial_in_right(self, b: RankedMove) -> bool:
        return any(self.right.enables(c, b.tagged("L")) for c in self.right.initial_moves(64))

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        left_target = self._left_part(target)
        if left_target is not None:
            if self.left.enables(None, left_target):
                return (source is not None and source.has_prefix(B2_TAG)
                        and self._b_initial_in_right(source.untagged(2)))
            left_source = None if source is None else self._left_part(source)
            return left_source is not None and self.left.enables(left_source, left_target)
        right_target = self._right_part(target)
        if right_target is None:
            return False
        if source is None:
            return self.right.enables(None, right_target)
        right_source = self._right_part(source)
        return right_source is not None and self.right.enables(right_source, right_target)

    def moves(self, bound: int) -> Iterator[RankedMove]:
        for m in self.left.moves(bound):
            yield m.untagged().tagged(*(A_TAG if m.head_tag == "L" else B1_TAG))
        for m in self.right.moves(bound):
            yield m.untagged().tagged(*(B2_TAG if m.head_tag == "L" else C_TAG))


def restrict_left(u: Position) -> Position:
    """u↾A,B₁，结果位于 A ⊸ B"""
    kept = u.restrict(lambda m: m.has_prefix(("L", "L")))
    return kept.map_moves(lambda m: m.untagged(2))


def restrict_right(u: Position) -> Position:
    """u↾B₂,C，结果位于 B ⊸ C"""
    kept = u.restrict(lambda m: m.has_prefix(B2_TAG) or m.has_prefix(C_TAG))
    return kept.map_moves(lambda m: m.untagged(2).tagged("L") if m.has_prefix(B2_TAG) else m)


def restrict_middle(u: Position) -> Position:
    """u↾B₁,B₂，结果位于 B₁ ⊸ B₂"""
    kept = u.restrict(lambda m: m.has_prefix(B1_TAG) or m.has_prefix(B2_TAG))
    return kept.map_moves(lambda m: m.untagged(3).tagged("L") if m.has_prefix(B1_TAG) else m.untagged(2).tagged("R"))


def restrict_external(u: Position) -> Position:
    """u↾A,C；指向隐藏出现的指针沿指针链追到最近的外部出现"""
    def external(m: RankedMove) -> bool:
        return m.has_prefix(A_TAG) or m.has_prefix(C_TAG)

    kept = [i for i, m in enumerate(u.moves) if external(m)]
    renumber = {old: new for new, old in enumerate(kept)}
    moves, justifiers = [], []
    for i in kept:
        j = u.justifiers[i]
        while j is not None and j not in renumber:
            j = u.justifiers[j]
        m = u.moves[i]
        moves.append(m.untagged(2) if m.has_prefix(A_TAG) else m)
        justifiers.append(None if j is None else renumber[j])
    return Position(tuple(moves), tuple(justifiers))


def in_copy_relation(middle: Position, b_arena: Arena, b_game: Optional[Game] = None) -> bool:
    """pr_B：B₁ ⊸ B₂ 中的合法位置，且每个偶数前缀在两份拷贝上的限制相同"""
    if not is_legal(LollipopArena(b_arena, b_arena), middle):
        return False
    if b_game is not None and not (b_game.admits(middle.restrict_prefix(("L",)))
                                   and b_game.admits(middle.restrict_prefix(("R",)))):
        return False
    for n in range(0, len(middle) + 1, 2):
        t = middle.prefix(n)
        if t.restrict_prefix(("L",)) != t.restrict_prefix(("R",)):
            return False
    return True


def _extensions(arena: InteractionArena, u: Position, bound: int) -> Iterator[Position]:
    for move in arena.moves(bound):
        if arena.enables(None, move):
            yield u.extend(move, None)
            continue
        for i in range(len(u)):
            if arena.enables(u.moves[i], move):
                yield u.extend(move, i)


def interactions(left_arena: Arena, right_arena: Arena, left_ok: Predicate, right_ok: Predicate,
                 max_length: int, bound: int = 4, middle_game: Optional[Game] = None) -> Iterator[Position]:
    """枚举长度不超过 max_length 的交互序列；三个条件都对前缀封闭，可在搜索中剪枝"""
    arena = InteractionArena(left_arena, right_arena)
    b_arena = SideArena(left_arena, "R")
    stack = [EMPTY]
    while stack:
        u = stack.pop()
        yield u
        if len(u) >= max_length:
            continue
        for v in _extensions(arena, u, bound):
            part = component_of(v.last)
            if part in ("A", "B1") and not left_ok(restrict_left(v)):
                continue
            if part in ("B2", "C") and not right_ok(restrict_right(v)):
                continue
            if part in ("B1", "B2") and not in_copy_relation(restrict_middle(v), b_arena, middle_game):
                continue
            stack.append(v)


def compose_games(left: FiniteGame, right: FiniteGame, max_length: Optional[int] = None) -> FiniteGame:
    """J ; K：交互序列在 A、C 上的限制，走子与使能对按经济的方式裁剪"""
    for game, name in ((left, "J"), (right, "K")):
        if any(m.head_tag not in ("L", "R") for m in game.arena.moves(0)):
            raise GameShapeError(f"{name} 不是线性蕴涵游戏的子游戏")
    left_b = {m.untagged() for m in left.arena.moves(0) if m.head_tag == "R"}
    right_b = {m.untagged() for m in right.arena.moves(0) if m.head_tag == "L"}
    if left_b and right_b and not (left_b & right_b):
        raise GameShapeError("J 与 K 的中间游戏 B 不一致")
    if max_length is None:
        longest = max((len(s) for s in left.position_set), default=0)
        longest += max((len(s) for s in right.position_set), default=0)
        max_length = longest
    external: Set[Position] = set()
    arena = LollipopArena(SideArena(left.arena, "L"), SideArena(right.arena, "R"))
    for u in interactions(left.arena, right.arena, left.admits, right.admits, max_length):
        external.add(restrict_external(u))
    result = FiniteGame.from_positions(arena, external)
    logger.debug(f"J ; K 共有 {len(result.position_set)} 个位置")
    return result


@dataclass
class CoveringReport:
    checked: int = 0
    counterexamples: List[Tuple[Position, str]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def check_covering(a: Game, b: Game, c: Game, max_length: int = 6, bound: int = 2) -> CoveringReport:
    """对所有满足前提的奇数长度 s·m 比较两侧的合法性"""
    left_arena = LollipopArena(a.arena, b.arena)
    right_arena = LollipopArena(b.arena, c.arena)
    external_arena = LollipopArena(a.arena, c.arena)
    arena = InteractionArena(left_arena, right_arena)
    left_legal = lambda s: bool(is_legal(left_arena, s))
    right_legal = lambda s: bool(is_legal(right_arena, s))
    report = CoveringReport()
    for s in interactions(left_arena, right_arena, left_legal, right_legal, max_length - 1, bound, b):
        for sm in _extensions(arena, s, bound):
            if len(sm) % 2 == 0 or component_of(sm.last) not in ("A", "C"):
                continue
            report.checked += 1
            lhs = bool(is_legal(external_arena, restrict_external(sm)))
            rhs = left_legal(restrict_left(sm)) and right_legal(restrict_right(sm))
            if lhs != rhs:
                report.counterexamples.append((sm, f"外部合法={lhs}，分量合法={rhs}"))
    return report

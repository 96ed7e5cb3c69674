"""视图、合法性与线程。

视图按出现下标计算，结果里目标被删去的指针置为 None，
因此视图上的合法性检查使用放宽的 justification（None 视为初始）。
"""

import logging
from typing import Callable, Iterable, List, Optional

from core.errors import ArenaError

from .arena import Arena
from .moves import Polarity, RankedMove
from .position import Position
from .verdict import Verdict

logger = logging.getLogger(__name__)

PolarityOf = Callable[[int], Polarity]


def _polarity_fn(s: Position, arena: Optional[Arena]) -> PolarityOf:
    def polarity(i: int) -> Polarity:
        if arena is not None:
            label = arena.label(s.moves[i])
            if label is not None:
                return label.polarity
        return Polarity.O if i % 2 == 0 else Polarity.P

    return polarity


def _view_indices(s: Position, polarity: PolarityOf, owner: Polarity) -> List[int]:
    """owner 的视图：owner 自己的走子直接保留，对手的走子跳回其指针目标"""
    kept: List[int] = []
    i = len(s) - 1
    while i >= 0:
        if polarity(i) is owner:
            kept.append(i)
            i -= 1
            continue
        j = s.justifiers[i]
        kept.append(i)
        if j is None:
            if owner is Polarity.P:
                break
            i -= 1
            continue
        kept.append(j)
        i = j - 1
    kept.reverse()
    return kept


def p_view_indices(s: Position, arena: Optional[Arena] = None) -> List[int]:
    return _view_indices(s, _polarity_fn(s, arena), Polarity.P)


def o_view_indices(s: Position, arena: Optional[Arena] = None) -> List[int]:
    return _view_indices(s, _polarity_fn(s, arena), Polarity.O)


def p_view(s: Position, arena: Optional[Arena] = None) -> Position:
    """⌈s⌉；未给出竞技场时按奇偶确定极性（偶数下标为 O）"""
    return s.keep(p_view_indices(s, arena))


def o_view(s: Position, arena: Optional[Arena] = None) -> Position:
    """⌊s⌋"""
    return s.keep(o_view_indices(s, arena))


def is_justified(arena: Arena, s: Position, relaxed: bool = False) -> Verdict:
    for i, (move, j) in enumerate(s):
        if not arena.contains(move):
            return Verdict.reject("justification", f"走子 {move} 不在竞技场中", i)
        if j is None:
            if not relaxed and not arena.enables(None, move):
                return Verdict.reject("justification", f"非初始走子 {move} 缺少指针", i)
            continue
        if j >= i:
            return Verdict.reject("justification", f"出现 {i} 的指针 {j} 不指向更早的出现", i)
        if not arena.enables(s.moves[j], move):
            return Verdict.reject("justification", f"{s.moves[j]} 不使能 {move}", i)
    return Verdict.accept()


def legal_extension(arena: Arena, s: Position, move: RankedMove, justifier: Optional[int]) -> Verdict:
    """假定 s 合法，判断 s·move 是否合法"""
    i = len(s)
    label = arena.label(move)
    if label is None:
        return Verdict.reject("justification", f"走子 {move} 不在竞技场中", i)
    if justifier is None:
        if not arena.enables(None, move):
            return Verdict.reject("justification", f"非初始走子 {move} 缺少指针", i)
    else:
        if not 0 <= justifier < i:
            return Verdict.reject("justification", f"指针 {justifier} 不指向更早的出现", i)
        if not arena.enables(s.moves[justifier], move):
            return Verdict.reject("justification", f"{s.moves[justifier]} 不使能 {move}", i)
    if i == 0:
        if label.polarity is not Polarity.O:
            return Verdict.reject("alternation", f"首个走子 {move} 不是 O 走子", i)
    else:
        previous = arena.label(s.moves[-1])
        if previous is not None and previous.polarity is label.polarity:
            return Verdict.reject("alternation", f"{s.moves[-1]} 与 {move} 极性相同", i)
    if justifier is not None:
        if label.polarity is Polarity.P:
            visible = p_view_indices(s, arena)
            view_name = "P 视图"
        else:
            visible = o_view_indices(s, arena)
            view_name = "O 视图"
        if justifier not in visible:
            return Verdict.reject("visibility", f"{move} 的指针 {justifier} 不在{view_name}中", i)
    return Verdict.accept()


def is_legal(arena: Arena, s: Position) -> Verdict:
    """justification、alternation 与 visibility 三个条件，失败时指出第一个违规出现"""
    for i in range(len(s)):
        verdict = legal_extension(arena, s.prefix(i), s.moves[i], s.justifiers[i])
        if not verdict:
            return verdict
    return Verdict.accept()


def thread(s: Position, initial: Iterable[int]) -> Position:
    """s↾I：保留被 I 中的出现遗传地使能的出现"""
    roots = set(initial)
    for i in roots:
        if not 0 <= i < len(s) or s.justifiers[i] is not None:
            raise ArenaError(f"下标 {i} 不是初始出现")
    return s.keep([i for i in range(len(s)) if s.hereditary_root(i) in roots])


def threads(s: Position) -> List[Position]:
    return [thread(s, [i]) for i in s.initial_indices()]

"""
竞技场层

包含以下组件：
- RankedMove / MoveLabel: 带秩走子与四种标签
- Arena 及其具体实现: 显式、平坦、张量/积、线性蕴涵、指数竞技场
- Position: 以下标表示指针的带指针序列
- 视图、合法性与线程
"""

from .arena import (Arena, ArenaViolation, BangArena, EmptyArena, ExplicitArena, FlatArena,
                    LollipopArena, SumArena, UnionArena, finite_flat_arena, nat_flat_arena,
                    validate_arena)
from .moves import CHECK, QUESTION, Kind, MoveLabel, Polarity, RankedMove, nat
from .position import EMPTY, Position
from .verdict import Verdict
from .views import (is_justified, is_legal, legal_extension, o_view, o_view_indices, p_view,
                    p_view_indices, thread, threads)

__all__ = [
    "Arena", "ArenaViolation", "BangArena", "EmptyArena", "ExplicitArena", "FlatArena",
    "LollipopArena", "SumArena", "UnionArena", "finite_flat_arena", "nat_flat_arena",
    "validate_arena",
    "CHECK", "QUESTION", "Kind", "MoveLabel", "Polarity", "RankedMove", "nat",
    "EMPTY", "Position", "Verdict",
    "is_justified", "is_legal", "legal_extension", "o_view", "o_view_indices", "p_view",
    "p_view_indices", "thread", "threads",
]

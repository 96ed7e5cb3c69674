"""小游戏的穷举：给定走子数与位置长度上限，列出全部良开、经济的有限游戏。

每个游戏只用前 n 个走子名，这样不同 n 之间不会重复出现同构的改名版本。
"""

import logging
from itertools import combinations, product as cartesian
from typing import Dict, Iterator, List, Optional, Set, Tuple

from arena.arena import EnablingPair, ExplicitArena
from arena.moves import MoveLabel, RankedMove
from arena.position import EMPTY, Position
from arena.views import legal_extension

from .game import FiniteGame
from .strategy_table import is_complete, is_consistent, strategies_on, union_game

logger = logging.getLogger(__name__)

MOVE_NAMES = ("a", "b", "c", "d")


def _maximal_arena(moves: List[RankedMove], labels: Dict[RankedMove, MoveLabel],
                   roots: Tuple[RankedMove, ...]) -> ExplicitArena:
    """满足 E1–E3 的最大使能关系"""
    enabling: Set[EnablingPair] = {(None, r) for r in roots}
    for source in moves:
        for target in moves:
            if target in roots or source == target:
                continue
            if labels[source].polarity is labels[target].polarity:
                continue
            if not labels[target].is_question and not labels[source].is_question:
                continue
            enabling.add((source, target))
    return ExplicitArena(dict(labels), frozenset(enabling))


def _position_tree(arena: ExplicitArena, max_length: int) -> Dict[Position, List[Position]]:
    """良开的合法位置树：只有第一个走子是初始走子"""
    children: Dict[Position, List[Position]] = {}
    stack = [EMPTY]
    moves = list(arena.moves())
    while stack:
        s = stack.pop()
        children[s] = []
        if len(s) >= max_length:
            continue
        for move in moves:
            if not s:
                candidates: List[Optional[int]] = [None] if arena.enables(None, move) else []
            else:
                candidates = [i for i in range(len(s)) if arena.enables(s.moves[i], move)]
            for j in candidates:
                if legal_extension(arena, s, move, j):
                    child = s.extend(move, j)
                    children[s].append(child)
                    stack.append(child)
    return children


def _prefix_closed(tree: Dict[Position, List[Position]], root: Position) -> List[frozenset]:
    per_child = [[None] + _prefix_closed(tree, child) for child in tree[root]]
    options: List[frozenset] = []
    for combo in cartesian(*per_child):
        chosen = {root}
        for part in combo:
            if part is not None:
                chosen |= part
        options.append(frozenset(chosen))
    return options


def enumerate_small_games(max_moves: int = 3, max_length: int = 4) -> Iterator[FiniteGame]:
    """按走子数、标签与初始走子逐一列出，结果去重且顺序确定"""
    seen: Set[FiniteGame] = set()
    yield_count = 0
    for n in range(0, max_moves + 1):
        moves = [RankedMove(name) for name in MOVE_NAMES[:n]]
        for assignment in cartesian(list(MoveLabel), repeat=n):
            labels = dict(zip(moves, assignment))
            questions = [m for m in moves if labels[m] is MoveLabel.OQ]
            for size in range(0 if n == 0 else 1, len(questions) + 1):
                for roots in combinations(questions, size):
                    arena = _maximal_arena(moves, labels, roots)
                    tree = _position_tree(arena, max_length)
                    for positions in _prefix_closed(tree, EMPTY):
                        used = {m for s in positions for m in s.moves}
                        if used != set(moves):
                            continue
                        game = FiniteGame.from_positions(arena, positions)
                        if game in seen:
                            continue
                        seen.add(game)
                        yield_count += 1
                        yield game
    logger.info(f"共列出 {yield_count} 个良开经济游戏（走子数 ≤ {max_moves}，长度 ≤ {max_length}）")


def check_correspondence(game: FiniteGame, subset_limit: int = 6) -> Optional[str]:
    """游戏与策略集合一一对应：⋃st(G) = G、st(G) 完备，并且小的完备子集 S 满足 st(⋃S) = S"""
    strategies = strategies_on(game)
    if union_game(strategies) != game:
        return f"{game!r}: ⋃st(G) ≠ G"
    if not is_complete(strategies):
        return f"{game!r}: st(G) 不完备"
    if len(strategies) > subset_limit:
        return None
    for size in range(1, len(strategies) + 1):
        for chosen in combinations(strategies, size):
            if not is_consistent(chosen) or not is_complete(chosen):
                continue
            if set(strategies_on(union_game(chosen))) != set(chosen):
                return f"{game!r}: 完备集合 {list(chosen)} 的并游戏策略不同"
    return None

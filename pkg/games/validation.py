"""有限游戏的结构检查与子游戏关系"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Set

from arena.moves import RankedMove
from arena.position import EMPTY
from arena.views import is_legal, thread

from .game import FiniteGame, Game

logger = logging.getLogger(__name__)

PREDICATES = ("V1", "V2", "legal", "economical", "well_opened", "well_founded")


@dataclass
class GameReport:
    """每个谓词的真假以及失败时的见证"""
    results: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, str] = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.results[name]

    @property
    def all_hold(self) -> bool:
        return all(self.results.values())

    def fail(self, name: str, witness: str) -> None:
        self.results[name] = False
        self.witnesses.setdefault(name, witness)

    def to_dict(self) -> Dict:
        return {"results": dict(self.results), "witnesses": dict(self.witnesses)}


def _enabling_cycle(game: FiniteGame) -> Optional[List[RankedMove]]:
    """沿使能关系从根出发寻找环；无限链在有限游戏中只能来自环"""
    graph: Dict[RankedMove, List[RankedMove]] = {}
    for source, target in game.arena.enabling:
        if source is not None:
            graph.setdefault(source, []).append(target)
    state: Dict[RankedMove, int] = {}

    def visit(node: RankedMove, trail: List[RankedMove]) -> Optional[List[RankedMove]]:
        state[node] = 1
        for succ in graph.get(node, []):
            if state.get(succ) == 1:
                return trail + [node, succ]
            if succ not in state:
                found = visit(succ, trail + [node])
                if found:
                    return found
        state[node] = 2
        return None

    for root in game.arena.initial_moves(0):
        if root not in state:
            found = visit(root, [])
            if found:
                return found
    return None


def validate_game(game: Game, depth: int = 8, bound: int = 4) -> GameReport:
    """V1、V2、合法性、经济性、良开性与良基性"""
    finite = game if isinstance(game, FiniteGame) else game.materialize(depth, bound)
    report = GameReport({name: True for name in PREDICATES})
    positions = finite.position_set

    if EMPTY not in positions:
        report.fail("V1", "ε 不在位置集合中")
    for s in finite.sorted_positions:
        if s and s.prefix(len(s) - 1) not in positions:
            report.fail("V1", f"{s} 的前缀不在位置集合中")
            break

    for s in finite.sorted_positions:
        initial = s.initial_indices()
        for size in range(len(initial) + 1):
            for chosen in combinations(initial, size):
                if thread(s, chosen) not in positions:
                    report.fail("V2", f"{s} 在 {list(chosen)} 上的线程不是有效位置")
                    break
            if not report["V2"]:
                break
        if not report["V2"]:
            break

    for s in finite.sorted_positions:
        verdict = is_legal(finite.arena, s)
        if not verdict:
            report.fail("legal", f"{s}: {verdict.reason}")
            break

    used_moves: Set[RankedMove] = set()
    used_pairs = set()
    for s in positions:
        for move, j in s:
            used_moves.add(move)
            used_pairs.add((None if j is None else s.moves[j], move))
    unused = set(finite.arena.labels) - used_moves
    if unused:
        report.fail("economical", f"未出现的走子: {sorted(map(str, unused))}")
    elif set(finite.arena.enabling) - used_pairs:
        report.fail("economical", "存在未被任何指针使用的使能对")

    for s in finite.sorted_positions:
        if any(j is None for j in s.justifiers[1:]):
            report.fail("well_opened", f"{s} 含有非首位的初始走子")
            break

    cycle = _enabling_cycle(finite)
    if cycle:
        report.fail("well_founded", " ⊢ ".join(map(str, cycle)))
    return report


def is_subgame(sub: FiniteGame, game: FiniteGame) -> bool:
    """H ⊴ G：走子、标签、使能与位置逐项包含"""
    for move, label in sub.arena.labels.items():
        if game.arena.labels.get(move) is not label:
            return False
    if not sub.arena.enabling <= game.arena.enabling:
        return False
    return sub.position_set <= game.position_set

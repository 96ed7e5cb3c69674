"""策略上的构造：张量、配对、提升与重新标记。

这些构造都按标记路径把外部位置投影到分量策略上，
再把分量的回应提升回外部位置。
"""

import logging
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

from arena.position import Position
from arena.views import thread
from core.errors import DivergenceError, GameShapeError, StrategyError
from games.constructions import DEFAULT_THREAD_BOUND, BangGame, LollipopGame, ProductGame, TensorGame
from games.game import Extension, Game

from .oracle import ResponseStatus, StrategyOracle, lollipop_sides

logger = logging.getLogger(__name__)

Prefix = Tuple[str, ...]
Mapping = Tuple[Prefix, Prefix]
Route = Tuple[StrategyOracle, Sequence[Mapping]]


def _match(move, mappings: Sequence[Mapping], outer: bool) -> Optional[Mapping]:
    """最长匹配的映射；outer 为 True 时按外部前缀匹配"""
    best = None
    for mapping in mappings:
        prefix = mapping[0] if outer else mapping[1]
        if move.has_prefix(prefix) and (best is None or len(prefix) > len(best[0 if outer else 1])):
            best = mapping
    return best


def project(s: Position, mappings: Sequence[Mapping]) -> Tuple[Position, List[int]]:
    """保留匹配外部前缀的出现并换成内部前缀，同时返回保留的下标"""
    kept = [i for i, m in enumerate(s.moves) if _match(m, mappings, True) is not None]
    inner = s.keep(kept).map_moves(lambda m: m.retagged(*_match(m, mappings, True)))
    return inner, kept


def lift(extension: Extension, mappings: Sequence[Mapping], kept: List[int]) -> Optional[Extension]:
    move, j = extension
    mapping = _match(move, mappings, False)
    if mapping is None:
        return None
    outer, inner = mapping
    return move.retagged(inner, outer), None if j is None else kept[j]


class RouteOracle(StrategyOracle):
    """按选择函数把位置交给其中一个分量策略"""

    def __init__(self, game: Game, routes: Sequence[Route],
                 selector: Optional[Callable[[Position], Optional[int]]] = None, name: str = ""):
        super().__init__(game, name or "route")
        self.routes = list(routes)
        self.selector = selector or self._by_last_move

    def _by_last_move(self, s: Position) -> Optional[int]:
        for index, (_, mappings) in enumerate(self.routes):
            if _match(s.last, mappings, True) is not None:
                return index
        return None

    def next_move(self, s: Position) -> Optional[Extension]:
        index = self.selector(s)
        if index is None:
            return None
        oracle, mappings = self.routes[index]
        inner, kept = project(s, mappings)
        outcome = oracle.respond(inner, validate=False)
        if outcome.status is ResponseStatus.DIVERGED:
            raise DivergenceError(outcome.detail or f"{oracle.name} 发散", outcome.steps)
        if not outcome.responded:
            return None
        return lift(outcome.extension, mappings, kept)


class RetagOracle(RouteOracle):
    """单一路由：按前缀映射改写标记，用于柯里化等同构"""

    def __init__(self, game: Game, inner: StrategyOracle, mappings: Sequence[Mapping], name: str = ""):
        super().__init__(game, [(inner, mappings)], lambda s: 0, name or f"retag({inner.name})")
        self.inner = inner
        self.mappings = list(mappings)


def tensor_strategies(left: StrategyOracle, right: StrategyOracle) -> RouteOracle:
    """σ ⊗ τ : A ⊗ C ⊸ B ⊗ D"""
    a, b = lollipop_sides(left.game)
    c, d = lollipop_sides(right.game)
    game = LollipopGame(TensorGame(a, c), TensorGame(b, d))
    routes = [
        (left, [(("L", "L"), ("L",)), (("R", "L"), ("R",))]),
        (right, [(("L", "R"), ("L",)), (("R", "R"), ("R",))]),
    ]
    return RouteOracle(game, routes, name=f"({left.name} ⊗ {right.name})")


def pairing(left: StrategyOracle, right: StrategyOracle) -> RouteOracle:
    """⟨σ, τ⟩ : C ⊸ A & B，由第一个走子决定分量"""
    c, a = lollipop_sides(left.game)
    c_right, b = lollipop_sides(right.game)
    if isinstance(left.game, LollipopGame) and isinstance(right.game, LollipopGame) and c.arena != c_right.arena:
        raise GameShapeError(f"{left.name} 与 {right.name} 的定义域不一致")
    game = LollipopGame(c, ProductGame(a, b))
    routes = [
        (left, [(("L",), ("L",)), (("R", "L"), ("R",))]),
        (right, [(("L",), ("L",)), (("R", "R"), ("R",))]),
    ]

    def by_first_move(s: Position) -> Optional[int]:
        if s.moves[0].has_prefix(("R", "L")):
            return 0
        if s.moves[0].has_prefix(("R", "R")):
            return 1
        return None

    return RouteOracle(game, routes, by_first_move, name=f"⟨{left.name}, {right.name}⟩")


class ThreadPolicy(Enum):
    """提升时各线程的玩法：UNIFORM 每条线程都按同一策略；INDEXED 第 k 条线程按族中第 k 个策略"""
    UNIFORM = "uniform"
    INDEXED = "indexed"


class Promotion(StrategyOracle):
    """σ† : !A ⊸ !B，在每条线程上按 σ 进行"""

    def __init__(self, inner: StrategyOracle, policy: ThreadPolicy = ThreadPolicy.UNIFORM,
                 family: Sequence[StrategyOracle] = (), thread_bound: int = DEFAULT_THREAD_BOUND):
        left, right = lollipop_sides(inner.game)
        super().__init__(LollipopGame(left, BangGame(right, thread_bound)), f"{inner.name}†")
        if policy is ThreadPolicy.INDEXED and not family:
            raise StrategyError("INDEXED 提升需要非空的策略族")
        self.inner = inner
        self.policy = policy
        self.family = list(family)

    def _oracle_for(self, thread_number: int) -> StrategyOracle:
        if self.policy is ThreadPolicy.UNIFORM:
            return self.inner
        return self.family[min(thread_number, len(self.family) - 1)]

    def next_move(self, s: Position) -> Optional[Extension]:
        root = s.hereditary_root(len(s) - 1)
        if not s.moves[root].has_prefix(("R", "!")):
            raise GameShapeError(f"线程根 {s.moves[root]} 不在 !B 中")
        kept = [i for i in range(len(s)) if s.hereditary_root(i) == root]
        inner = thread(s, [root]).map_moves(
            lambda m: m.retagged(("R", "!"), ("R",)) if m.has_prefix(("R", "!")) else m)
        thread_number = s.initial_indices().index(root)
        oracle = self._oracle_for(thread_number)
        outcome = oracle.respond(inner, validate=False)
        if outcome.status is ResponseStatus.DIVERGED:
            raise DivergenceError(outcome.detail or f"{oracle.name} 发散", outcome.steps)
        if not outcome.responded:
            return None
        move, j = outcome.extension
        if move.has_prefix(("R",)):
            move = move.retagged(("R",), ("R", "!"))
        return move, None if j is None else kept[j]


def promotion(inner: StrategyOracle, policy: ThreadPolicy = ThreadPolicy.UNIFORM,
              family: Sequence[StrategyOracle] = (), thread_bound: int = DEFAULT_THREAD_BOUND) -> Promotion:
    return Promotion(inner, policy, family, thread_bound)

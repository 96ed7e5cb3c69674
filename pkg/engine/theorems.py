"""构造的交互定理在显式策略上的检查。

对每个构造，把游戏层一侧（由树形式限制出的位置集合）与策略层一侧
（组合后的 oracle 的展开）在同一个游戏中逐位置比较。
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Set

from arena.position import Position
from arena.views import threads
from games.composition import SideArena, compose_games
from games.constructions import BangGame, LollipopGame, ProductGame, TensorGame
from games.game import ArenaGame, Game
from games.strategy_table import StrategyTable

from .checks import oracle_plays
from .combinators import Mapping, pairing, project, promotion, tensor_strategies
from .composite import Composite
from .oracle import TableOracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstrainedGame(Game):
    """在基础游戏上再加一个位置谓词"""
    base: Game
    predicate: Callable[[Position], bool]

    @property
    def arena(self):
        return self.base.arena

    def accepts(self, s: Position) -> bool:
        return self.base.accepts(s) and self.predicate(s)


@dataclass
class LawReport:
    name: str
    game_side: int = 0
    strategy_side: int = 0
    game_only: List[Position] = field(default_factory=list)
    strategy_only: List[Position] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.game_only and not self.strategy_only

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "game_side": self.game_side,
            "strategy_side": self.strategy_side,
            "game_only": [str(s) for s in self.game_only[:5]],
            "strategy_only": [str(s) for s in self.strategy_only[:5]],
        }


def _sides(table: StrategyTable):
    arena = table.game.arena
    return ArenaGame(SideArena(arena, "L")), ArenaGame(SideArena(arena, "R"))


def _projects_into(s: Position, mappings: List[Mapping], table: StrategyTable) -> bool:
    inner, _ = project(s, mappings)
    return inner in table.plays


def _compare(name: str, game_side: Set[Position], strategy_side: Set[Position]) -> LawReport:
    report = LawReport(name, len(game_side), len(strategy_side))
    report.game_only = sorted(game_side - strategy_side, key=Position.sort_key)
    report.strategy_only = sorted(strategy_side - game_side, key=Position.sort_key)
    if not report.holds:
        logger.warning(f"{name} 不成立: 仅游戏侧 {len(report.game_only)}，仅策略侧 {len(report.strategy_only)}")
    return report


def check_tensor_law(sigma: StrategyTable, tau: StrategyTable, depth: int = 8) -> LawReport:
    """σ̄ ⊗ τ̄ 与 σ ⊗ τ 的树形式相同"""
    a, b = _sides(sigma)
    c, d = _sides(tau)
    left_maps = [(("L", "L"), ("L",)), (("R", "L"), ("R",))]
    right_maps = [(("L", "R"), ("L",)), (("R", "R"), ("R",))]
    game = ConstrainedGame(LollipopGame(TensorGame(a, c), TensorGame(b, d)),
                           lambda s: _projects_into(s, left_maps, sigma) and _projects_into(s, right_maps, tau))
    oracle = tensor_strategies(TableOracle(sigma), TableOracle(tau))
    return _compare("⊗", set(game.positions(depth, 0)), oracle_plays(oracle, depth, 0, game))


def check_pairing_law(sigma: StrategyTable, tau: StrategyTable, depth: int = 8) -> LawReport:
    """σ̄ & τ̄ 与 ⟨σ, τ⟩ 的树形式相同；分量由第一个走子决定"""
    c, a = _sides(sigma)
    _, b = _sides(tau)

    def admitted(s: Position) -> bool:
        if not s:
            return True
        if s.moves[0].has_prefix(("R", "L")):
            return _projects_into(s, [(("L",), ("L",)), (("R", "L"), ("R",))], sigma)
        return _projects_into(s, [(("L",), ("L",)), (("R", "R"), ("R",))], tau)

    game = ConstrainedGame(LollipopGame(c, ProductGame(a, b)), admitted)
    oracle = pairing(TableOracle(sigma), TableOracle(tau))
    return _compare("&", set(game.positions(depth, 0)), oracle_plays(oracle, depth, 0, game))


def check_promotion_law(mu: StrategyTable, depth: int = 8, thread_bound: int = 2) -> LawReport:
    """!μ̄ 与 μ† 的树形式相同：每条 !B 线程都是 μ̄ 的位置"""
    bang_a, b = _sides(mu)

    def admitted(s: Position) -> bool:
        for t in threads(s):
            inner = t.map_moves(lambda m: m.retagged(("R", "!"), ("R",)) if m.has_prefix(("R", "!")) else m)
            if inner not in mu.plays:
                return False
        return True

    game = ConstrainedGame(LollipopGame(bang_a, BangGame(b, thread_bound)), admitted)
    oracle = promotion(TableOracle(mu), thread_bound=thread_bound)
    return _compare("!", set(game.positions(depth, 0)), oracle_plays(oracle, depth, 0, game))


def check_composition_law(sigma: StrategyTable, phi: StrategyTable, depth: int = 8) -> LawReport:
    """σ̂ ; φ̂ 与 σ ; φ 的树形式相同"""
    composed = compose_games(sigma.as_game(), phi.as_game())
    oracle = Composite(TableOracle(sigma), TableOracle(phi))
    game_side = {s for s in composed.position_set if len(s) <= depth}
    return _compare(";", game_side, oracle_plays(oracle, depth, 0, composed))


def check_interaction_theorem(sigma: StrategyTable, tau: StrategyTable, phi: StrategyTable,
                              mu: StrategyTable, pair_left: StrategyTable, pair_right: StrategyTable,
                              depth: int = 8) -> Dict[str, LawReport]:
    """四个等式一起检查：⊗、!、& 与 ;"""
    return {
        "⊗": check_tensor_law(sigma, tau, depth),
        "!": check_promotion_law(mu, depth),
        "&": check_pairing_law(pair_left, pair_right, depth),
        ";": check_composition_law(sigma, phi, depth),
    }

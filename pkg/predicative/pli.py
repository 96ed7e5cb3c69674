"""谓词游戏之间的线性蕴涵（逐点线性蕴涵的积）与广义 copy-cat、dereliction。

PLI 策略用一个作用在未加标记位置上的下一步函数表示，
投影 π_φ(σ) 由 σ 与 φ 的复合按需展开得到。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from arena.arena import ExplicitArena
from arena.moves import Polarity
from arena.position import Position
from core.errors import StrategyError
from engine.checks import oracle_plays
from engine.combinators import RetagOracle
from engine.composite import Composite
from engine.copycat import copy_cat, dereliction
from engine.oracle import ResponseOutcome, StrategyOracle, TableOracle
from games.constructions import BangGame, LollipopGame, lollipop
from games.game import FiniteGame, Game, TerminalGame
from games.strategy_table import StrategyTable, strategies_on, union_game

from .games import PredicativeGame, predicative_union
from .registry import GameRegistry, check_paradox_free

logger = logging.getLogger(__name__)


def lift_to_morphism(table: StrategyTable) -> StrategyOracle:
    """σ : A 看作 I ⊸ A 上的策略"""
    game = LollipopGame(TerminalGame(), table.game)
    return RetagOracle(game, TableOracle(table), [(("R",), ())], name=f"σ{len(table.plays)}")


def project_strategy(phi: StrategyOracle, sigma: StrategyTable, codomain: FiniteGame,
                     depth: int = 12) -> FrozenSet[Position]:
    """π_φ(σ) 的位置集合：σ ; φ 在 I ⊸ B 上展开后去掉 R 标记"""
    composite = Composite(lift_to_morphism(sigma), phi)
    game = LollipopGame(TerminalGame(), codomain)
    plays = oracle_plays(composite, depth, 0, game)
    return frozenset(s.map_moves(lambda m: m.untagged()) for s in plays)


def _match_strategy(plays: FrozenSet[Position], candidates: FrozenSet[StrategyTable]) -> Optional[StrategyTable]:
    for table in candidates:
        if table.plays == plays:
            return table
    return None


@dataclass
class PLIStrategy:
    """&_σ φ_σ：每个定义域策略 σ 对应 σ ⊸ π_φ(σ) 上的分量"""
    family: Dict[StrategyTable, StrategyOracle]
    projection: Dict[StrategyTable, StrategyTable]
    name: str = "φ"

    def component(self, sigma: StrategyTable) -> StrategyOracle:
        if sigma not in self.family:
            raise StrategyError(f"{self.name} 在 {sigma} 上没有分量")
        return self.family[sigma]

    def project(self, sigma: StrategyTable) -> StrategyTable:
        return self.projection[sigma]


@dataclass
class UniformityReport:
    holds: bool
    witness: Optional[Position] = None
    detail: str = ""
    checked: int = 0


def _component_plays(oracle: StrategyOracle, game: Game, depth: int) -> Dict[Position, Tuple]:
    replies: Dict[Position, Tuple] = {}
    frontier = [Position()]
    while frontier:
        s = frontier.pop()
        if len(s) >= depth:
            continue
        for move, j in game.extensions(s, 0, Polarity.O):
            odd = s.extend(move, j)
            outcome: ResponseOutcome = oracle.respond(odd, validate=False)
            replies[odd] = outcome.key()
            if outcome.responded:
                frontier.append(odd.extend(outcome.move, outcome.justifier))
    return replies


def check_uniform(phi: PLIStrategy, games: Dict[StrategyTable, Game], depth: int = 8) -> UniformityReport:
    """两个分量在共同的奇数位置上回应一致"""
    seen: Dict[Position, Tuple] = {}
    checked = 0
    for sigma, oracle in phi.family.items():
        for odd, reply in _component_plays(oracle, games[sigma], depth).items():
            checked += 1
            earlier = seen.setdefault(odd, reply)
            if earlier != reply:
                return UniformityReport(False, odd, f"{odd} 上分量回应不一致", checked)
    return UniformityReport(True, checked=checked)


@dataclass
class PLIGame:
    """∮ PLI(A, B)，附带每个策略的投影"""
    domain: PredicativeGame
    codomain: PredicativeGame
    game: PredicativeGame
    projections: Dict[StrategyTable, Dict[StrategyTable, StrategyTable]] = field(default_factory=dict)

    @property
    def strategies(self) -> List[StrategyTable]:
        return self.game.ordered

    def total_strategies(self) -> List[StrategyTable]:
        return [t for t in self.strategies if t.is_total()]


def _union(game: PredicativeGame) -> FiniteGame:
    if not game.strategies:
        return FiniteGame.from_positions(ExplicitArena({}, frozenset()), [])
    return union_game(game.ordered)


def pli_lollipop(domain: PredicativeGame, codomain: PredicativeGame, depth: int = 12) -> PLIGame:
    """A ⊸ B：⋃st(A) ⊸ ⋃st(B) 上满足 ∀σ. π_φ(σ) ∈ st(B) 的策略"""
    a = _union(domain)
    b = _union(codomain)
    whole = lollipop(a, b)
    chosen: List[StrategyTable] = []
    projections: Dict[StrategyTable, Dict[StrategyTable, StrategyTable]] = {}
    for table in strategies_on(whole):
        oracle = TableOracle(table)
        mapping: Dict[StrategyTable, StrategyTable] = {}
        for sigma in domain.ordered:
            image = _match_strategy(project_strategy(oracle, sigma, b, depth), codomain.strategies)
            if image is None:
                break
            mapping[sigma] = image
        else:
            chosen.append(table)
            projections[table] = mapping
    logger.info(f"PLI: {len(chosen)} 个一致的策略")
    return PLIGame(domain, codomain, predicative_union(chosen), projections)


def pli_strategy(table: StrategyTable, pli: PLIGame) -> PLIStrategy:
    """把 PLI 游戏中的一个策略拆成各分量；分量共用同一个下一步函数，均匀性自然成立"""
    oracle = TableOracle(table)
    return PLIStrategy({sigma: oracle for sigma in pli.projections[table]}, dict(pli.projections[table]))


def compose_pli(phi: StrategyTable, psi: StrategyTable) -> StrategyOracle:
    return Composite(TableOracle(phi), TableOracle(psi))


def generalized_copy_cat(game: PredicativeGame) -> PLIStrategy:
    """cp_G = &_σ cp_σ"""
    union = _union(game)
    cp = copy_cat(union)
    return PLIStrategy({sigma: cp for sigma in game.strategies}, {sigma: sigma for sigma in game.strategies}, "cp")


def single_thread(table: StrategyTable) -> FrozenSet[Position]:
    """σ^‡：只保留至多含一个初始走子的位置"""
    return frozenset(s for s in table.plays if len(s.initial_indices()) <= 1)


def generalized_dereliction(game: PredicativeGame, thread_bound: int = 2) -> PLIStrategy:
    """der_G：每个分量都是 !σ̂ ⊸ σ̂ 上的 dereliction"""
    union = _union(game)
    if not union.well_opened:
        raise StrategyError("广义 dereliction 要求良开的谓词游戏")
    der = dereliction(union, thread_bound)
    return PLIStrategy({sigma: der for sigma in game.strategies}, {sigma: sigma for sigma in game.strategies}, "der")


def component_games(phi: PLIStrategy, thread_bound: int = 2,
                    bang_domain: bool = False) -> Dict[StrategyTable, Game]:
    """各分量所在的游戏 σ̂ ⊸ π(σ)̂（或 !σ̂ ⊸ π(σ)̂）"""
    games: Dict[StrategyTable, Game] = {}
    for sigma, image in phi.projection.items():
        left = sigma.as_game()
        games[sigma] = LollipopGame(BangGame(left, thread_bound) if bang_domain else left, image.as_game())
    return games


def paradox_report(registry: GameRegistry, bound: int = 4) -> Dict[str, object]:
    violations = check_paradox_free(registry, bound)
    return {"entries": len(registry), "violations": [v.detail for v in violations]}

import logging
import random
from typing import Callable, Dict, List, Optional

from core.errors import LudicError
from core.ludic_context import LudicContext
from cwf.intensionality import IntensionalityChecks
from cwf.laws import BEHAVIOURAL, LawCheck, LawSuite, SuiteReport
from engine.basic import unary
from engine.checks import check_all, equiv_at_depth
from engine.composite import compose
from engine.copycat import copy_cat
from engine.oracle import StrategyOracle
from games.composition import check_covering
from games.enumeration import check_correspondence, enumerate_small_games
from games.game import bool_game, nat_game
from predicative.registry import check_paradox_free

EXHAUSTIVE = "exhaustive"

AFFINE = [(1, 0), (1, 1), (2, 0), (0, 3), (3, 1), (2, 1)]


def affine(a: int, b: int) -> StrategyOracle:
    return unary(lambda n: a * n + b, f"{a}n+{b}")


class LawService:
    """按范围运行各组律检查，每组给出一个 SuiteReport"""

    SCOPES = ("cwf", "formers", "id", "intensionality", "engine", "games", "paradox")

    def __init__(self, context: LudicContext, seed: int = 0):
        self.context = context
        self.seed = seed
        self.logger = logging.getLogger(self.__class__.__name__)

    def run(self, scope: str = "all") -> List[SuiteReport]:
        runners: Dict[str, Callable[[], SuiteReport]] = {
            "cwf": lambda: LawSuite(self.context.model).cwf(),
            "formers": lambda: LawSuite(self.context.model).formers(),
            "id": lambda: LawSuite(self.context.model).id_soundness(),
            "intensionality": self.intensionality,
            "engine": self.engine,
            "games": self.games,
            "paradox": self.paradox,
        }
        if scope == "all":
            selected = list(self.SCOPES)
        elif scope in runners:
            selected = [scope]
        else:
            raise LudicError(f"未知的律检查范围 {scope}，可选 {', '.join(self.SCOPES)} 或 all")
        reports = []
        for name in selected:
            report = runners[name]()
            self.logger.info(report.summary())
            reports.append(report)
        return reports

    def intensionality(self) -> SuiteReport:
        checks = IntensionalityChecks(self.context.model)
        report = SuiteReport("intensionality")
        for r in checks.run():
            witness = r.evidence.get("distinguishing")
            report.checks.append(LawCheck(r.name, BEHAVIOURAL, r.detail, r.confirmed, witness))
        return report

    def engine(self, samples: int = 100, depth: int = 10) -> SuiteReport:
        """随机初等策略上的结合律、单位律与四个约束在复合下保持"""
        rng = random.Random(self.seed)
        report = SuiteReport("engine")
        identity = copy_cat(nat_game())
        for _ in range(samples):
            f, g, h = (rng.choice(AFFINE) for _ in range(3))
            instance = f"{f} ; {g} ; {h}"
            left = compose(compose(affine(*f), affine(*g)), affine(*h))
            right = compose(affine(*f), compose(affine(*g), affine(*h)))
            result = equiv_at_depth(left, right, depth, 2)
            report.checks.append(self._behavioural("Associativity", instance, result))
            sigma = affine(*f)
            result = equiv_at_depth(compose(identity, sigma), sigma, depth, 2)
            report.checks.append(self._behavioural("Identity", str(f), result))
        for f in AFFINE:
            for g in AFFINE:
                verdicts = check_all(compose(affine(*f), affine(*g)), 6, 2)
                failed = [name for name, v in verdicts.items() if not v.holds]
                report.checks.append(LawCheck("Constraints-Preserved", BEHAVIOURAL, f"{f} ; {g}", not failed,
                                              detail=", ".join(failed)))
        return report

    @staticmethod
    def _behavioural(law: str, instance: str, result) -> LawCheck:
        witness = None if result.witness is None else result.witness.to_list()
        return LawCheck(law, BEHAVIOURAL, instance, result.equivalent, witness)

    def games(self, max_moves: int = 3, max_length: int = 4) -> SuiteReport:
        """游戏与策略集合的对应（穷举小游戏），以及覆盖引理"""
        report = SuiteReport("games")
        count = 0
        failure: Optional[str] = None
        for game in enumerate_small_games(max_moves, max_length):
            count += 1
            failure = check_correspondence(game)
            if failure is not None:
                break
        report.checks.append(LawCheck("Games-As-Strategy-Sets", EXHAUSTIVE,
                                      f"走子 ≤ {max_moves}，长度 ≤ {max_length}，{count} 个游戏",
                                      failure is None, detail=failure or ""))
        b = bool_game()
        covering = check_covering(b, b, b, max_length=6, bound=2)
        detail = f"{covering.checked} 个位置"
        if covering.counterexamples:
            detail = covering.counterexamples[0][1]
        report.checks.append(LawCheck("Covering", EXHAUSTIVE, "Bool ⊸ Bool ⊸ Bool", covering.holds, detail=detail))
        return report

    def paradox(self) -> SuiteReport:
        """会话注册表中每个名字的秩都大于其游戏的走子"""
        report = SuiteReport("paradox")
        violations = check_paradox_free(self.context.registry)
        report.checks.append(LawCheck("Paradox-Free", EXHAUSTIVE, f"{len(self.context.registry)} 个注册项",
                                      not violations,
                                      detail="; ".join(f"♯{v.number}: {v.detail}" for v in violations)))
        return report

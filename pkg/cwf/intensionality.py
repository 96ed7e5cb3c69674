"""模型的内涵性：等式反射不成立、函数外延性不成立、UIP 成立、
Streicher 的三条判据成立、单价公理不成立。

每项检查返回 IntensionalityReport，evidence 中给出见证位置或计数。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from engine.checks import check_total, equiv_at_depth
from engine.copycat import copy_cat
from games.game import bool_game, nat_game
from games.strategy_table import strategies_on

from .games import IdHatGame
from .model import Model, fs_game
from .operations import app, equiv, numeral, r_empty, r_nat, succ
from .syntax import EMPTY_TY, N, Context, ElOf, IdTy, Lambda, Numeral, PiTy, Refl, Term, Univ, Var

logger = logging.getLogger(__name__)


@dataclass
class IntensionalityReport:
    """confirmed：预期的结论得到确认；principle_holds：该原则在模型中是否成立"""
    name: str
    confirmed: bool
    principle_holds: bool
    detail: str = ""
    evidence: Dict = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {"name": self.name, "confirmed": self.confirmed, "principle_holds": self.principle_holds,
                "detail": self.detail, "evidence": self.evidence}


def lazy_zero() -> Term:
    """λx. 0，不看参数"""
    return Lambda(Numeral((N,), 0))


def strict_zero(budget: int = 64) -> Term:
    """λx. R^N(N, 0, v₀)(x)：先问参数，再回答 0"""
    return Lambda(r_nat((), N, Numeral((), 0), Var((N, N), 0), budget))


def _witness(result) -> Optional[list]:
    return None if result.witness is None else result.witness.to_list()


class IntensionalityChecks:
    """在给定模型上构造各个内涵性实例并检查"""

    def __init__(self, model: Model, depth: Optional[int] = None, bound: int = 2):
        self.model = model
        self.depth = depth or model.bounds.depth
        self.bound = bound
        self.logger = logging.getLogger(self.__class__.__name__)

    def equality_reflection(self, depth: int = 4) -> IntensionalityReport:
        """x : N, y : 𝟘 ⊢ R^𝟘 : x = succ x 有全证明，但 ⟦x⟧ ≠ ⟦succ x⟧"""
        ctx: Context = (N, EMPTY_TY)
        x = Var(ctx, 1)
        goal = IdTy(N, x, succ(x))
        proof = r_empty((N,), goal)
        differ = equiv(self.model, x, succ(x), depth, self.bound)
        total = check_total(self.model.realize(proof), depth, self.bound, self.model.morphism_game(proof))
        refuted = not differ.equivalent and total.holds
        return IntensionalityReport(
            "equality-reflection", refuted, False,
            "等式反射不成立：Id 游戏有全证明，两侧策略却不同",
            {"distinguishing": _witness(differ), "proof_total": total.holds, "proof": str(proof)})

    def function_extensionality(self, up_to: int = 16, depth: int = 2) -> IntensionalityReport:
        """惰性与严格的零函数在 0..up_to 上逐点相同，却在深度 depth 处可区分"""
        lazy, strict = lazy_zero(), strict_zero(self.model.bounds.unfold)
        distinguished = equiv(self.model, lazy, strict, depth, self.bound)
        pointwise: List[int] = []
        for n in range(up_to + 1):
            arg = numeral((), n)
            if equiv(self.model, app(lazy, arg), app(strict, arg), self.depth, self.bound).equivalent:
                pointwise.append(n)
        refuted = not distinguished.equivalent and len(pointwise) == up_to + 1
        return IntensionalityReport(
            "function-extensionality", refuted, False,
            "函数外延性不成立：逐点相同的两个函数策略不同",
            {"distinguishing": _witness(distinguished), "pointwise_equal": pointwise})

    def uip(self, depth: int = 8) -> IntensionalityReport:
        """refl(refl a) 是 Id(Id(a, a), refl a, refl a) 的全证明，且 Îd(σ, σ) 上恰有一个全策略"""
        ctx: Context = (N,)
        a = Var(ctx, 0)
        witness = Refl(ctx, IdTy(N, a, a), Refl(ctx, N, a))
        total = check_total(self.model.realize(witness), depth, self.bound, self.model.morphism_game(witness))
        unique: Dict[str, int] = {}
        for sigma in strategies_on(bool_game().materialize(2, 0)):
            if not sigma.is_total():
                continue
            identity = IdHatGame(sigma.as_game(), sigma.as_game()).materialize(depth, 0)
            unique[repr(sigma)] = sum(1 for t in strategies_on(identity) if t.is_total())
        holds = total.holds and all(count == 1 for count in unique.values())
        return IntensionalityReport(
            "uip", holds, True, "UIP 成立：恒等游戏至多一个全策略",
            {"witness": str(witness), "witness_total": total.holds, "total_proofs": unique})

    def streicher(self) -> List[IntensionalityReport]:
        return [self.streicher_first(), self.streicher_second(), self.streicher_third()]

    def streicher_first(self, depth: int = 4) -> IntensionalityReport:
        """A : U₀, x y : El(A), z : x = y ⊬ x ≡ y"""
        self.model.registry.register(nat_game())
        self.model.registry.register(bool_game())
        ctx0: Context = (Univ(0),)
        ctx1 = ctx0 + (ElOf(Var(ctx0, 0), 0),)
        ctx2 = ctx1 + (ElOf(Var(ctx1, 1), 0),)
        ctx3 = ctx2 + (IdTy(ElOf(Var(ctx2, 2), 0), Var(ctx2, 1), Var(ctx2, 0)),)
        result = equiv(self.model, Var(ctx3, 2), Var(ctx3, 1), depth, self.bound)
        return IntensionalityReport("streicher-I", not result.equivalent, True,
                                    "x 与 y 的策略在上下文中询问不同分量",
                                    {"distinguishing": _witness(result)})

    def streicher_second(self, depth: int = 6) -> IntensionalityReport:
        """B : N → U₀, x y : N, z : x = y ⊬ B(x) ≡ B(y)"""
        ctx: Context = (PiTy(N, Univ(0)), N, N)
        ctx = ctx + (IdTy(N, Var(ctx, 1), Var(ctx, 0)),)
        family = Var(ctx, 3)
        result = equiv(self.model, app(family, Var(ctx, 2)), app(family, Var(ctx, 1)), depth, self.bound)
        return IntensionalityReport("streicher-II", not result.equivalent, True,
                                    "B(x) 与 B(y) 在 B 询问参数时分开",
                                    {"distinguishing": _witness(result)})

    def streicher_third(self, depth: int = 8) -> IntensionalityReport:
        """闭项 t, t' 之间有全证明时 t ≡ t'"""
        closed = [numeral((), n) for n in range(3)] + [succ(numeral((), 1))]
        cases: List[Dict] = []
        holds = True
        for left in closed:
            for right in closed:
                game = self.model.fiber((), IdTy(N, left, right), ())
                proofs = sum(1 for t in strategies_on(game.materialize(depth, 0)) if t.is_total())
                same = equiv(self.model, left, right, depth, self.bound).equivalent
                if proofs and not same:
                    holds = False
                cases.append({"left": str(left), "right": str(right), "proofs": proofs, "equivalent": same})
        return IntensionalityReport("streicher-III", holds, True, "闭项之间有证明则两者相同", {"cases": cases})

    def univalence(self, depth: int = 10) -> IntensionalityReport:
        """N 与 FS(1) 的拷贝猫等价，但构造号不同，所以 Id_U(En N, En FS(1)) 没有证明"""
        plain, named = nat_game(), fs_game(1)
        same = equiv_at_depth(copy_cat(plain), copy_cat(named), depth, self.bound)
        first = self.model.registry.register(plain)
        second = self.model.registry.register(named)
        refuted = same.equivalent and first.number != second.number
        return IntensionalityReport(
            "univalence", refuted, False, "单价公理不成立：游戏相同而名字不同",
            {"copy_cats_equivalent": same.equivalent, "numbers": [first.number, second.number]})

    def run(self) -> List[IntensionalityReport]:
        reports = [self.equality_reflection(), self.function_extensionality(), self.uip()]
        reports += self.streicher()
        reports.append(self.univalence())
        for report in reports:
            verdict = "成立" if report.principle_holds else "不成立"
            self.logger.info(f"{report.name}: {verdict}，{'已确认' if report.confirmed else '未确认'}")
        return reports

"""范畴族等式与类型构造律的可运行检查。

类型层的等式按依赖游戏项的规范形比较；项层的等式用深度有界的行为等价。
每条检查记录所用的方法与实例，失败时给出见证位置。
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from arena.moves import RankedMove
from core.errors import LudicError
from games.game import FlatGame, bool_game, flat_game, unit_game
from games.strategy_table import strategies_on

from .games import IdHatGame
from .judgements import codomain, domain, lift, normalize_tm, normalize_ty, refl_context
from .model import Model
from .operations import (app, equiv, first_proj, instantiate, pair_inv, pair_mor, r_empty, r_id, r_nat, r_nat_at,
                         r_sigma, r_unit, refl_mor, second_proj, succ)
from .syntax import (EMPTY_TY, UNIT, N, Context, DependentType, Extension, Family, FirstProj, Identity, IdTy, Lambda,
                     LambdaInv, Numeral, PiTy, REmpty, Refl, SigmaTy, Star, SubstTm, SubstTy, Term, Top, Var)

logger = logging.getLogger(__name__)

NORMAL_FORM = "normal-form"
BEHAVIOURAL = "behavioural"

# 实例语料里的上下文与态射
C0: Context = ()
C1: Context = (N,)
C2: Context = (N, N)
C3: Context = (N, N, N)
CU: Context = (N, UNIT)

P2 = FirstProj(C2)                                                       # C2 → C1
AT3 = Extension(Identity(C1), Numeral(C1, 3), N)                         # C1 → C2
SWAP = Extension(Extension(Top(C2), Var(C2, 0), N), Var(C2, 1), N)       # C2 → C2
TOP1 = Top(C1)                                                           # C1 → ◊

ID_DIAG = IdTy(N, Var(C1, 0), Var(C1, 0))


@dataclass
class LawCheck:
    law: str
    method: str
    instance: str
    holds: bool
    witness: Optional[list] = None
    detail: str = ""

    def to_dict(self) -> Dict:
        return {
            "law": self.law,
            "method": self.method,
            "instance": self.instance,
            "holds": self.holds,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: List[LawCheck] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.holds)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def laws(self) -> List[str]:
        seen: List[str] = []
        for c in self.checks:
            if c.law not in seen:
                seen.append(c.law)
        return seen

    @property
    def laws_passed(self) -> List[str]:
        return [law for law in self.laws if all(c.holds for c in self.checks if c.law == law)]

    @property
    def failures(self) -> List[LawCheck]:
        return [c for c in self.checks if not c.holds]

    def summary(self) -> str:
        return f"{self.suite}: {len(self.laws_passed)}/{len(self.laws)} 条等式成立（{self.passed}/{self.total} 个实例）"

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "holds": self.holds,
            "laws": len(self.laws),
            "laws_passed": len(self.laws_passed),
            "passed": self.passed,
            "total": self.total,
            "checks": [c.to_dict() for c in self.checks],
        }


def _show(*parts) -> str:
    return " ; ".join(str(p) for p in parts)


class LawSuite:
    """在给定模型上运行等式检查

    depth 与 bound 只影响行为检查；bound 截断 Opponent 在平坦分量中的回答。
    """

    def __init__(self, model: Model, depth: Optional[int] = None, bound: int = 2):
        self.model = model
        self.depth = depth or model.bounds.depth
        self.bound = bound
        self.logger = logging.getLogger(self.__class__.__name__)

    # ---- 单条检查 ----

    def same_type(self, law: str, instance: str, left: DependentType, right: DependentType) -> LawCheck:
        try:
            a, b = normalize_ty(left), normalize_ty(right)
        except LudicError as e:
            return LawCheck(law, NORMAL_FORM, instance, False, detail=str(e))
        detail = "" if a == b else f"{a} ≠ {b}"
        return LawCheck(law, NORMAL_FORM, instance, a == b, detail=detail)

    def same_term(self, law: str, instance: str, left: Term, right: Term) -> LawCheck:
        try:
            a, b = normalize_tm(left), normalize_tm(right)
        except LudicError as e:
            return LawCheck(law, NORMAL_FORM, instance, False, detail=str(e))
        detail = "" if a == b else f"{a} ≠ {b}"
        return LawCheck(law, NORMAL_FORM, instance, a == b, detail=detail)

    def behaves(self, law: str, instance: str, left: Term, right: Term) -> LawCheck:
        try:
            result = equiv(self.model, left, right, self.depth, self.bound)
        except LudicError as e:
            self.logger.error(f"{law} 在 {instance} 上检查失败: {e}", exc_info=True)
            return LawCheck(law, BEHAVIOURAL, instance, False, detail=f"{e.__class__.__name__}: {e}")
        if result.equivalent:
            return LawCheck(law, BEHAVIOURAL, instance, True, detail=f"{result.checked} 个奇数位置")
        witness = result.witness.to_list() if result.witness is not None else None
        detail = f"回应不同: {result.left} / {result.right}"
        self.logger.warning(f"{law} 在 {instance} 上不成立: {detail}")
        return LawCheck(law, BEHAVIOURAL, instance, False, witness, detail)

    def _run(self, name: str, checks: Iterable[Callable[[], LawCheck]]) -> SuiteReport:
        report = SuiteReport(name)
        for check in checks:
            result = check()
            self.logger.debug(f"{result.law} [{result.instance}]: {result.holds}")
            report.checks.append(result)
        self.logger.info(report.summary())
        return report

    # ---- 范畴族的八条等式 ----

    def cwf(self) -> SuiteReport:
        return self._run("cwf", self._cwf_checks())

    def _cwf_checks(self) -> Iterable[Callable[[], LawCheck]]:
        ty_id = [(C1, N), (C1, Family("FSN")), (C1, ID_DIAG), (C0, PiTy(N, ID_DIAG)), (C2, PiTy(N, N)),
                 (CU, SigmaTy(N, UNIT))]
        for ctx, ty in ty_id:
            yield lambda ctx=ctx, ty=ty: self.same_type("Ty-Id", _show(ty, ctx), SubstTy(ty, Identity(ctx)), ty)

        sigma_dep = SigmaTy(N, IdTy(N, Var(C2, 1), Var(C2, 0)))
        ty_comp = [(ID_DIAG, P2, AT3), (Family("FSN"), P2, AT3), (PiTy(N, ID_DIAG), TOP1, P2), (ID_DIAG, P2, SWAP),
                   (sigma_dep, P2, SWAP)]
        for ty, phi, psi in ty_comp:
            yield lambda ty=ty, phi=phi, psi=psi: self.same_type(
                "Ty-Comp", _show(ty, phi, psi), SubstTy(ty, SubstTm(phi, psi)), SubstTy(SubstTy(ty, phi), psi))

        tm_id = [Var(C2, 1), succ(Var(C1, 0)), Numeral(C1, 2), Lambda(Var(C2, 1)), Var(CU, 0)]
        for a in tm_id:
            yield lambda a=a: self.behaves("Tm-Id", _show(a), SubstTm(a, Identity(domain(a))), a)

        tm_comp = [(Var(C1, 0), P2, AT3), (succ(Var(C1, 0)), P2, SWAP), (Numeral(C1, 1), P2, SWAP),
                   (Var(C2, 1), SWAP, SWAP), (Lambda(Var(C2, 1)), P2, AT3)]
        for a, phi, psi in tm_comp:
            yield lambda a=a, phi=phi, psi=psi: self.behaves(
                "Tm-Comp", _show(a, phi, psi), SubstTm(a, SubstTm(phi, psi)), SubstTm(SubstTm(a, phi), psi))

        pairs = [(Identity(C1), Numeral(C1, 3), N), (P2, Var(C2, 0), N), (TOP1, Var(C1, 0), N),
                 (SWAP, succ(Var(C2, 1)), N), (Identity(CU), Star(CU), UNIT)]
        for phi, tau, ty in pairs:
            yield lambda phi=phi, tau=tau, ty=ty: self.behaves(
                "Cons-L", _show(phi, tau), SubstTm(first_proj(codomain(phi), ty), Extension(phi, tau, ty)), phi)
        for phi, tau, ty in pairs:
            yield lambda phi=phi, tau=tau, ty=ty: self.behaves(
                "Cons-R", _show(phi, tau), SubstTm(second_proj(codomain(phi), ty), Extension(phi, tau, ty)), tau)

        naturality = [(Identity(C1), Var(C1, 0), N, P2), (P2, Numeral(C2, 1), N, SWAP),
                      (TOP1, succ(Var(C1, 0)), N, P2), (Identity(C1), Numeral(C1, 3), N, P2),
                      (Top(CU), Var(CU, 0), UNIT, Identity(CU))]
        for phi, tau, ty, psi in naturality:
            yield lambda phi=phi, tau=tau, ty=ty, psi=psi: self.behaves(
                "Cons-Nat", _show(phi, tau, psi), SubstTm(Extension(phi, tau, ty), psi),
                Extension(SubstTm(phi, psi), SubstTm(tau, psi), ty))

        for ctx in (C1, C2, CU, C3, (UNIT, N)):
            yield lambda ctx=ctx: self.behaves(
                "Cons-Id", _show(ctx), Extension(FirstProj(ctx), Var(ctx, 0), ctx[-1]), Identity(ctx))

    # ---- 类型构造的律 ----

    def formers(self) -> SuiteReport:
        return self._run("formers", self._former_checks())

    def _former_checks(self) -> Iterable[Callable[[], LawCheck]]:
        yield from self._pi_checks()
        yield from self._sigma_checks()
        yield from self._id_checks()
        yield from self._nat_checks()
        yield from self._unit_empty_checks()

    def _pi_checks(self) -> Iterable[Callable[[], LawCheck]]:
        comp = [(succ(Var(C2, 0)), Numeral(C1, 4)), (Var(C2, 1), succ(Var(C1, 0))), (Var(C1, 0), Numeral(C0, 5))]
        for body, tau in comp:
            yield lambda body=body, tau=tau: self.behaves(
                "Π-Comp", _show(body, tau), app(Lambda(body), tau),
                SubstTm(body, instantiate(domain(tau), tau, N)))

        fun_var = Var((PiTy(N, N),), 0)
        for mu in (Lambda(Var(C2, 0)), fun_var, Lambda(succ(Var(C2, 1)))):
            yield lambda mu=mu: self.same_term("λ-Uniq", _show(mu), Lambda(LambdaInv(mu)), mu)

        subst = [(PiTy(N, N), P2), (PiTy(N, IdTy(N, Var(C2, 1), Var(C2, 0))), P2), (PiTy(N, Family("FSN")), TOP1)]
        for ty, phi in subst:
            yield lambda ty=ty, phi=phi: self.same_type(
                "Π-Subst", _show(ty, phi), SubstTy(ty, phi),
                PiTy(SubstTy(ty.dom, phi), SubstTy(ty.cod, lift(phi, ty.dom))))

        lam = [(succ(Var(C2, 0)), P2), (Var(C3, 2), AT3), (Var(C1, 0), TOP1)]
        for body, phi in lam:
            yield lambda body=body, phi=phi: self.behaves(
                "λ-Subst", _show(body, phi), SubstTm(Lambda(body), phi), Lambda(SubstTm(body, lift(phi, N))))

        applied = [(Lambda(succ(Var(C2, 0))), Var(C1, 0), P2), (Lambda(Var(C2, 1)), Numeral(C1, 2), P2),
                   (Lambda(Var(C1, 0)), Numeral(C0, 7), TOP1)]
        for kappa, tau, phi in applied:
            yield lambda kappa=kappa, tau=tau, phi=phi: self.behaves(
                "App-Subst", _show(kappa, tau, phi), SubstTm(app(kappa, tau), phi),
                app(SubstTm(kappa, phi), SubstTm(tau, phi)))

    def _sigma_checks(self) -> Iterable[Callable[[], LawCheck]]:
        comp = [(C0, Var(C2, 1)), (C0, succ(Var(C2, 0))), (C1, Var(C3, 2))]
        for ctx, psi in comp:
            yield lambda ctx=ctx, psi=psi: self.behaves(
                "Σ-Comp", _show(ctx, psi), SubstTm(r_sigma(psi, ctx, N, N), pair_mor(ctx, N, N)), psi)

        for ctx, dom, cod in ((C0, N, N), (C1, N, N), (C0, N, UNIT)):
            yield lambda ctx=ctx, dom=dom, cod=cod: self.behaves(
                "R^Σ-Uniq", _show(ctx, dom, cod, "Pair⁻¹∘Pair"),
                SubstTm(pair_inv(ctx, dom, cod), pair_mor(ctx, dom, cod)), Identity(ctx + (dom, cod)))
            yield lambda ctx=ctx, dom=dom, cod=cod: self.behaves(
                "R^Σ-Uniq", _show(ctx, dom, cod, "Pair∘Pair⁻¹"),
                SubstTm(pair_mor(ctx, dom, cod), pair_inv(ctx, dom, cod)), Identity(ctx + (SigmaTy(dom, cod),)))

        subst = [(SigmaTy(N, N), P2), (SigmaTy(N, IdTy(N, Var(C2, 1), Var(C2, 0))), P2), (SigmaTy(N, UNIT), TOP1)]
        for ty, phi in subst:
            yield lambda ty=ty, phi=phi: self.same_type(
                "Σ-Subst", _show(ty, phi), SubstTy(ty, phi),
                SigmaTy(SubstTy(ty.dom, phi), SubstTy(ty.cod, lift(phi, ty.dom))))

        for phi in (P2, TOP1, AT3):
            yield lambda phi=phi: self._pair_subst(phi)
        sigma_subst = [(C1, Var(C3, 2), P2), (C1, succ(Var(C3, 0)), P2), (C0, Var(C2, 1), TOP1)]
        for ctx, psi, phi in sigma_subst:
            yield lambda ctx=ctx, psi=psi, phi=phi: self._r_sigma_subst(ctx, psi, phi)

    def _pair_subst(self, phi: Term) -> LawCheck:
        """Pair ∘ φ⁺⁺ = φ⁺ ∘ Pair_{A{φ}, B{φ⁺}}，A = B = N"""
        lifted = lift(phi, N)
        left = SubstTm(pair_mor(codomain(phi), N, N), lift(lifted, N))
        right = SubstTm(lift(phi, SigmaTy(N, N)), pair_mor(domain(phi), SubstTy(N, phi), SubstTy(N, lifted)))
        return self.behaves("Pair-Subst", _show(phi), left, right)

    def _r_sigma_subst(self, ctx: Context, psi: Term, phi: Term) -> LawCheck:
        """R^Σ(ψ){φ⁺} = R^Σ(ψ{φ⁺⁺})"""
        lifted = lift(phi, N)
        left = SubstTm(r_sigma(psi, ctx, N, N), lift(phi, SigmaTy(N, N)))
        right = r_sigma(SubstTm(psi, lift(lifted, N)), domain(phi), SubstTy(N, phi), SubstTy(N, lifted))
        return self.behaves("R^Σ-Subst", _show(ctx, psi, phi), left, right)

    def _id_checks(self) -> Iterable[Callable[[], LawCheck]]:
        for tau in (Var(C1, 0), succ(Var(C1, 0)), Numeral(C1, 2)):
            yield lambda tau=tau: self.behaves("Id-Comp", _show(tau), SubstTm(r_id(tau, C0, N), refl_mor(C0, N)), tau)

        subst = [(ID_DIAG, P2), (IdTy(N, Var(C2, 1), Var(C2, 0)), SWAP), (IdTy(N, Numeral(C1, 2), succ(Var(C1, 0))), P2)]
        for ty, phi in subst:
            yield lambda ty=ty, phi=phi: self.same_type(
                "Id-Subst", _show(ty, phi), SubstTy(ty, phi),
                IdTy(SubstTy(ty.ty, phi), SubstTm(ty.left, phi), SubstTm(ty.right, phi)))

        refls = [(C1, Var(C1, 0), P2), (C2, Var(C2, 1), SWAP), (C1, Numeral(C1, 2), P2)]
        for ctx, a, phi in refls:
            yield lambda ctx=ctx, a=a, phi=phi: self.behaves(
                "Refl-Subst", _show(a, phi), SubstTm(Refl(ctx, N, a), phi),
                Refl(domain(phi), SubstTy(N, phi), SubstTm(a, phi)))

        for ctx, tau, phi in ((C1, Var(C2, 1), P2), (C0, succ(Var(C1, 0)), TOP1), (C1, Var(C2, 0), P2)):
            yield lambda ctx=ctx, tau=tau, phi=phi: self._r_id_subst(ctx, tau, phi)

    def _r_id_subst(self, ctx: Context, tau: Term, phi: Term) -> LawCheck:
        """R^Id(τ){φ⁺⁺⁺} = R^Id(τ{φ⁺})，A = N"""
        steps = refl_context(ctx, N)
        once = lift(phi, N)
        thrice = lift(lift(once, steps[-2]), steps[-1])
        left = SubstTm(r_id(tau, ctx, N), thrice)
        right = r_id(SubstTm(tau, once), domain(phi), SubstTy(N, phi))
        return self.behaves("R^Id-Subst", _show(tau, phi), left, right)

    def _nat_checks(self) -> Iterable[Callable[[], LawCheck]]:
        budget = self.model.bounds.unfold
        recursors = [(C0, Numeral(C0, 5), succ(Var(C2, 0))), (C0, Numeral(C0, 0), succ(succ(Var(C2, 0)))),
                     (C1, Var(C1, 0), succ(Var(C3, 0)))]
        for ctx, cz, cs in recursors:
            yield lambda ctx=ctx, cz=cz, cs=cs: self.behaves(
                "N-CompZero", _show(cz, cs), r_nat_at(ctx, N, cz, cs, Numeral(ctx, 0), budget), cz)

        steps = [(C0, Numeral(C0, 5), succ(Var(C2, 0)), Numeral(C0, 0)),
                 (C0, Numeral(C0, 0), succ(succ(Var(C2, 0))), Numeral(C0, 2)),
                 (C1, Numeral(C1, 5), succ(Var(C3, 0)), Var(C1, 0))]
        for ctx, cz, cs, n in steps:
            yield lambda ctx=ctx, cz=cz, cs=cs, n=n: self._n_comp_succ(ctx, cz, cs, n, budget)

        for phi in (P2, SWAP, AT3):
            yield lambda phi=phi: self.same_type("N-Subst", _show(phi), SubstTy(N, phi), N)

        subst = [(Numeral(C1, 1), succ(Var(C3, 0))), (Var(C1, 0), Var(C3, 0)), (Var(C1, 0), succ(Var(C3, 2)))]
        for cz, cs in subst:
            yield lambda cz=cz, cs=cs: self._r_nat_subst(cz, cs, budget)

    def _n_comp_succ(self, ctx: Context, cz: Term, cs: Term, n: Term, budget: int) -> LawCheck:
        """R^N{⟨id, succ n⟩} = c_s{⟨⟨id, n⟩, R^N{⟨id, n⟩}⟩}"""
        left = r_nat_at(ctx, N, cz, cs, succ(n), budget)
        previous = r_nat_at(ctx, N, cz, cs, n, budget)
        right = SubstTm(cs, Extension(instantiate(ctx, n, N), previous, N))
        return self.behaves("N-CompSucc", _show(cz, cs, n), left, right)

    def _r_nat_subst(self, cz: Term, cs: Term, budget: int) -> LawCheck:
        """R^N(C, c_z, c_s){φ⁺} = R^N(C{φ⁺}, c_z{φ}, c_s{φ⁺⁺})，Γ = N，φ = p"""
        lifted = lift(P2, N)
        left = SubstTm(r_nat(C1, N, cz, cs, budget), lifted)
        right = r_nat(domain(P2), SubstTy(N, lifted), SubstTm(cz, P2), SubstTm(cs, lift(lifted, N)), budget)
        return self.behaves("R^N-Subst", _show(cz, cs), left, right)

    def _unit_empty_checks(self) -> Iterable[Callable[[], LawCheck]]:
        tops = [(Top(C2), SubstTm(TOP1, P2)), (TOP1, SubstTm(Top(C2), AT3)), (Top(CU), SubstTm(Top(C0), Top(CU)))]
        for left, right in tops:
            yield lambda left=left, right=right: self.behaves("⊤-Uniq", _show(left, right), left, right)

        stars = [(Var(C1, 0), Star(C1)), (Numeral(CU, 1), Star(CU)), (Var(C2, 1), SubstTm(Star(C1), P2))]
        for tau, iota in stars:
            yield lambda tau=tau, iota=iota: self.same_term("R^𝟙-Comp", _show(tau, iota), r_unit(tau, iota), tau)

        empties = [(C1, N, P2), (C0, N, TOP1), (C2, UNIT, AT3)]
        for ctx, motive, phi in empties:
            yield lambda ctx=ctx, motive=motive, phi=phi: self._r_empty_subst(ctx, motive, phi)

    def _r_empty_subst(self, ctx: Context, motive: DependentType, phi: Term) -> LawCheck:
        """R^𝟘(C){φ⁺} = R^𝟘(C{φ⁺})"""
        lifted = lift(phi, EMPTY_TY)
        left = SubstTm(r_empty(ctx, motive), lifted)
        right = REmpty(domain(lifted), SubstTy(motive, lifted))
        return self.behaves("R^𝟘-Subst", _show(motive, phi), left, right)

    # ---- Îd 的可靠性 ----

    def id_soundness(self, games: Optional[List[FlatGame]] = None, depth: int = 8) -> SuiteReport:
        """小平坦游戏上：Îd(σ, τ) 有全策略当且仅当 σ = τ，两侧都穷举"""
        games = games or default_flat_games()
        return self._run("id", (lambda g=g, s=s, t=t: self._id_pair(g, s, t, depth)
                                for g in games for s, t in _strategy_pairs(g)))

    def _id_pair(self, game: FlatGame, sigma, tau, depth: int) -> LawCheck:
        identity_game = IdHatGame(sigma.as_game(), tau.as_game()).materialize(depth, 0)
        total = [t for t in strategies_on(identity_game) if t.is_total()]
        equal = sigma == tau
        instance = f"{game.name}: {sigma!r} / {tau!r}"
        detail = f"{len(total)} 个全策略"
        return LawCheck("Id-Soundness", BEHAVIOURAL, instance, bool(total) == equal, detail=detail)

    def run(self, scope: str = "all") -> List[SuiteReport]:
        suites = {"cwf": self.cwf, "formers": self.formers, "id": self.id_soundness}
        if scope == "all":
            return [run() for run in suites.values()]
        if scope not in suites:
            raise LudicError(f"未知的律检查范围 {scope}，可选 {', '.join(suites)} 或 all")
        return [suites[scope]()]


def default_flat_games() -> List[FlatGame]:
    """回答不超过 3 个的平坦游戏"""
    three = flat_game("Three", [RankedMove("a"), RankedMove("b"), RankedMove("c")])
    return [unit_game(), bool_game(), three]


def _strategy_pairs(game: FlatGame) -> List[Tuple]:
    strategies = strategies_on(game.materialize(2, 0))
    return [(s, t) for s in strategies for t in strategies]

"""把检查过的 MLTT 语法解释为范畴族模型中的依赖游戏与策略项。

上下文映到类型元组（空上下文即 I），类型逐个构造对应，项按核心算子展开：
配对经 Pair 态射，R^Σ、R^= 经各自的逆态射复合代入，R^N 带展开预算。
"""

import logging
from typing import Dict, Optional

from core.errors import ElaborationError
from cwf import operations as ops
from cwf.judgements import refl_context
from cwf.syntax import (EMPTY_TY, UNIT, Context, DependentType, ElOf, Extension, Identity, IdTy, Lambda, N, Numeral,
                        PairMor, PiTy, SigmaTy, SubstTm, Term, Top, Univ)
from cwf.syntax import Refl as CwfRefl
from cwf.syntax import Star as CwfStar
from cwf.syntax import Var as CwfVar

from .equality import normalize
from .syntax import (App, Builtin, El, EmptyTy, En, Expr, Id, Lam, NatTy, Pair, Pi, RId, REmpty, Refl, RNat, RSigma,
                     RUnit, Sigma, Star, Succ, Telescope, UnitTy, Universe, Var, Zero, instantiate, numeral_value)
from .typecheck import TypeChecker

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 64


class Elaborator:
    """tel 是源语言的望远镜，cwf 上下文由它逐项解释得到"""

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget
        self.checker = TypeChecker()
        self._contexts: Dict[Telescope, Context] = {(): ()}
        self.logger = logging.getLogger(self.__class__.__name__)

    def context(self, tel: Telescope) -> Context:
        if tel not in self._contexts:
            outer = self.context(tel[:-1])
            self._contexts[tel] = outer + (self.type(tel[:-1], tel[-1][1]),)
        return self._contexts[tel]

    def level_of(self, tel: Telescope, code: Expr) -> int:
        universe = normalize(self.checker.infer(tel, code).type)
        if not isinstance(universe, Universe):
            raise ElaborationError(f"El 的参数 {code} 不是编码")
        return universe.level

    def type(self, tel: Telescope, ty: Expr) -> DependentType:
        match ty:
            case UnitTy():
                return UNIT
            case EmptyTy():
                return EMPTY_TY
            case NatTy():
                return N
            case Universe(level=level):
                return Univ(level)
            case Pi(dom=dom, cod=cod, name=name):
                return PiTy(self.type(tel, dom), self.type(tel + ((name, dom),), cod))
            case Sigma(dom=dom, cod=cod, name=name):
                return SigmaTy(self.type(tel, dom), self.type(tel + ((name, dom),), cod))
            case Id(ty=base, left=a, right=b):
                return IdTy(self.type(tel, base), self.term(tel, a, base), self.term(tel, b, base))
            case El(code=code):
                return ElOf(self.term(tel, code), self.level_of(tel, code))
        raise ElaborationError(f"{ty} 不是类型")

    def term(self, tel: Telescope, term: Expr, expected: Optional[Expr] = None) -> Term:
        ctx = self.context(tel)
        want = normalize(expected) if expected is not None else None
        match term:
            case Var(index=index):
                return CwfVar(ctx, index)
            case Star():
                return CwfStar(ctx)
            case Zero() | Succ() if numeral_value(term) is not None:
                return Numeral(ctx, numeral_value(term))
            case Succ(arg=arg):
                return ops.succ(self.term(tel, arg, NatTy()))
            case Lam(dom=dom, body=body, name=name):
                cod = want.cod if isinstance(want, Pi) else None
                return Lambda(self.term(tel + ((name, dom),), body, cod))
            case App(fun=fun, arg=arg):
                pi = normalize(self.checker.infer(tel, fun).type)
                return ops.app(self.term(tel, fun), self.term(tel, arg, pi.dom))
            case Pair():
                return self.pair(tel, term, want)
            case Refl(term=inner):
                base = self.checker.infer(tel, inner).type
                return CwfRefl(ctx, self.type(tel, base), self.term(tel, inner, base))
            case Builtin(name=name):
                code = ops.fsn_code() if name == "FSN" else ops.endo_code(0)
                return SubstTm(code, Top(ctx)) if ctx else code
            case En(ty=ty):
                return ops.en(ctx, self.type(tel, ty))
            case RUnit(case=case, motive=motive):
                # 𝟙-Uniq：目标总等于 ⋆
                return self.term(tel, case, instantiate(motive, Star()))
            case REmpty(motive=motive, target=target, names=names):
                inner = self.type(tel + ((names[0], EmptyTy()),), motive)
                return ops.r_empty_at(ctx, inner, self.term(tel, target, EmptyTy()))
            case RNat():
                return self.r_nat(tel, term)
            case RSigma():
                return self.r_sigma(tel, term)
            case RId():
                return self.r_id(tel, term)
        raise ElaborationError(f"无法解释 {term}")

    def pair(self, tel: Telescope, term: Pair, want: Optional[Expr]) -> Term:
        if not isinstance(want, Sigma):
            want = normalize(self.checker.infer(tel, term).type)
        ctx = self.context(tel)
        dom = self.type(tel, want.dom)
        cod = self.type(tel + ((want.name, want.dom),), want.cod)
        first = self.term(tel, term.fst, want.dom)
        second = self.term(tel, term.snd, instantiate(want.cod, term.fst))
        target = ctx + (SigmaTy(dom, cod),)
        components = Extension(Extension(Identity(ctx), first, dom), second, cod)
        return SubstTm(CwfVar(target, 0), SubstTm(PairMor(ctx, dom, cod), components))

    def r_nat(self, tel: Telescope, term: RNat) -> Term:
        ctx = self.context(tel)
        x, y = term.names[1], term.names[2]
        motive_tel = tel + ((term.names[0], NatTy()),)
        motive = self.type(motive_tel, term.motive)
        zero_case = self.term(tel, term.zero_case, instantiate(term.motive, Zero()))
        succ_case = self.term(tel + ((x, NatTy()), (y, term.motive)), term.succ_case)
        target = self.term(tel, term.target, NatTy())
        return ops.r_nat_at(ctx, motive, zero_case, succ_case, target, self.budget)

    def r_sigma(self, tel: Telescope, term: RSigma) -> Term:
        ctx = self.context(tel)
        sigma = normalize(self.checker.infer(tel, term.target).type)
        dom = self.type(tel, sigma.dom)
        cod = self.type(tel + ((term.names[1], sigma.dom),), sigma.cod)
        case_tel = tel + ((term.names[1], sigma.dom), (term.names[2], sigma.cod))
        psi = self.term(case_tel, term.case)
        target = self.term(tel, term.target, sigma)
        return SubstTm(ops.r_sigma(psi, ctx, dom, cod), ops.instantiate(ctx, target, SigmaTy(dom, cod)))

    def r_id(self, tel: Telescope, term: RId) -> Term:
        ctx = self.context(tel)
        base = self.checker.infer(tel, term.left).type
        ty = self.type(tel, base)
        tau = self.term(tel + ((term.names[3], base),), term.case)
        rc = refl_context(ctx, ty)
        components = Extension(
            Extension(Extension(Identity(ctx), self.term(tel, term.left, base), ty),
                      self.term(tel, term.right, base), rc[-2]),
            self.term(tel, term.proof, Id(base, term.left, term.right)), rc[-1])
        return SubstTm(ops.r_id(tau, ctx, ty), components)


def elaborate_context(tel: Telescope, budget: int = DEFAULT_BUDGET) -> Context:
    return Elaborator(budget).context(tel)


def elaborate_type(tel: Telescope, ty: Expr, budget: int = DEFAULT_BUDGET) -> DependentType:
    return Elaborator(budget).type(tel, ty)


def elaborate_term(tel: Telescope, term: Expr, expected: Optional[Expr] = None,
                   budget: int = DEFAULT_BUDGET) -> Term:
    return Elaborator(budget).term(tel, term, expected)


def elaborate_definition(definition, budget: int = DEFAULT_BUDGET) -> Term:
    return Elaborator(budget).term(definition.telescope, definition.term, definition.ty)

"""双向类型检查，产出推导树

类型的秩按范畴族模型的约定：𝟙、𝟘、N 为 1，U_i 为 i + 2，El(c) 在 c : U_k 时为 k + 1，
Π、Σ 取两侧的最大值，Id 取底类型的秩。秩为 r 的类型的编码位于 U_{r-1}。
失败时抛出 TypeCheckError，rule 为失败的那条前提所用的规则。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from core.errors import TypeCheckError

from .equality import judgmental_equal, normalize
from .printer import show
from .syntax import (BUILTIN_TYPES, EMPTY, NAT, UNIT, App, Builtin, El, EmptyTy, En, Expr, Id, Lam, NatTy, Pair, Pi,
                     RId, REmpty, Refl, RNat, RSigma, RUnit, Sigma, Star, Succ, Telescope, UnitTy, Universe, Var, Zero,
                     instantiate, instantiate_all, is_type_expr, lookup, rebind, shift)

logger = logging.getLogger(__name__)


def _names(ctx: Telescope) -> List[str]:
    return [name for name, _ in ctx]


def show_context(ctx: Telescope) -> str:
    parts, names = [], []
    for name, ty in ctx:
        parts.append(f"{name} : {show(ty, names)}")
        names.append(name)
    return ", ".join(parts) or "◊"


@dataclass
class Derivation:
    judgement: str
    rule: str
    context: Telescope
    subject: Expr
    type: Optional[Expr] = None
    rank: Optional[int] = None
    premises: List["Derivation"] = field(default_factory=list)

    def conclusion(self) -> str:
        gamma = show_context(self.context)
        names = _names(self.context)
        subject = show(self.subject, names) if self.judgement != "ctx" else ""
        if self.judgement == "ctx":
            return f"⊢ {gamma} ctx"
        if self.judgement == "type":
            return f"{gamma} ⊢ {subject} type (秩 {self.rank})"
        if self.judgement in ("ty-eq", "tm-eq"):
            return f"{gamma} ⊢ {subject} ≡ {show(self.type, names)}"
        return f"{gamma} ⊢ {subject} : {show(self.type, names)}"

    def render(self, indent: int = 0) -> str:
        lines = [f"{'  ' * indent}[{self.rule}] {self.conclusion()}"]
        lines.extend(p.render(indent + 1) for p in self.premises)
        return "\n".join(lines)

    def rules(self) -> List[str]:
        found = [self.rule]
        for premise in self.premises:
            found.extend(premise.rules())
        return found

    def to_dict(self) -> Dict:
        data = {"judgement": self.judgement, "rule": self.rule, "conclusion": self.conclusion()}
        if self.rank is not None:
            data["rank"] = self.rank
        if self.premises:
            data["premises"] = [p.to_dict() for p in self.premises]
        return data


def _fail(rule: str, message: str, ctx: Telescope, *exprs: Expr) -> TypeCheckError:
    names = _names(ctx)
    shown = [show(e, names) for e in exprs]
    return TypeCheckError(rule, message.format(*shown))


class TypeChecker:
    """Γ ⊢ 判断的检查器；每个方法返回对应判断的推导"""

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    # ---- 上下文与类型 ----

    def check_context(self, ctx: Telescope) -> Derivation:
        derivation = Derivation("ctx", "Ctx-Empty", (), Star())
        for k in range(len(ctx)):
            prefix = ctx[:k]
            premise = self.check_type(prefix, ctx[k][1])
            derivation = Derivation("ctx", "Ctx-Ext", ctx[:k + 1], Star(), premises=[derivation, premise])
        return derivation

    def check_type(self, ctx: Telescope, ty: Expr) -> Derivation:
        def done(rule, rank, *premises):
            return Derivation("type", rule, ctx, ty, rank=rank, premises=list(premises))

        match ty:
            case UnitTy():
                return done("1-Form", 1)
            case EmptyTy():
                return done("0-Form", 1)
            case NatTy():
                return done("N-Form", 1)
            case Universe(level=level):
                if level < 0:
                    raise _fail("U-Form", "宇宙层级必须非负", ctx)
                return done("U-Form", level + 2)
            case El(code=code):
                premise = self.infer(ctx, code)
                universe = normalize(premise.type)
                if not isinstance(universe, Universe):
                    raise _fail("U-Elim", "El 的参数 {0} 的类型 {1} 不是宇宙", ctx, code, premise.type)
                return done("U-Elim", universe.level + 1, premise)
            case Pi(dom=dom, cod=cod, name=name) | Sigma(dom=dom, cod=cod, name=name):
                rule = "Π-Form" if isinstance(ty, Pi) else "Σ-Form"
                left = self.check_type(ctx, dom)
                right = self.check_type(ctx + ((name, dom),), cod)
                return done(rule, max(left.rank, right.rank), left, right)
            case Id(ty=base, left=a, right=b):
                premise = self.check_type(ctx, base)
                return done("=-Form", premise.rank, premise, self.check(ctx, a, base, "=-Form"),
                            self.check(ctx, b, base, "=-Form"))
        if is_type_expr(ty):
            raise _fail("U-Elim", "未知的类型构造 {0}", ctx, ty)
        raise _fail("U-Elim", "{0} 是项而不是类型；用 El 取其解码", ctx, ty)

    # ---- 项 ----

    def infer(self, ctx: Telescope, term: Expr) -> Derivation:
        def done(rule, ty, *premises):
            return Derivation("term", rule, ctx, term, ty, premises=list(premises))

        match term:
            case Var(index=index):
                if index >= len(ctx):
                    raise _fail("Var", f"变量下标 {index} 超出上下文", ctx)
                return done("Var", lookup(ctx, index))
            case Builtin(name=name):
                return done("Const", BUILTIN_TYPES[name])
            case Star():
                return done("1-Intro", UNIT)
            case Zero():
                return done("N-IntroZero", NAT)
            case Succ(arg=arg):
                return done("N-IntroSucc", NAT, self.check(ctx, arg, NAT, "N-IntroSucc"))
            case Lam(dom=dom, body=body, name=name):
                left = self.check_type(ctx, dom)
                right = self.infer(ctx + ((name, dom),), body)
                return done("Π-Intro", Pi(dom, right.type, name), left, right)
            case App(fun=fun, arg=arg):
                head = self.infer(ctx, fun)
                pi = normalize(head.type)
                if not isinstance(pi, Pi):
                    raise _fail("Π-Elim", "{0} 的类型 {1} 不是 Π 类型", ctx, fun, head.type)
                return done("Π-Elim", instantiate(pi.cod, arg), head, self.check(ctx, arg, pi.dom, "Π-Elim"))
            case Pair(fst=a, snd=b):
                left, right = self.infer(ctx, a), self.infer(ctx, b)
                return done("Σ-Intro", Sigma(left.type, shift(right.type, 1), "_"), left, right)
            case Refl(term=inner):
                premise = self.infer(ctx, inner)
                return done("=-Intro", Id(premise.type, inner, inner), premise)
            case En(ty=ty):
                premise = self.check_type(ctx, ty)
                return done("U-Intro", Universe(premise.rank - 1), premise)
            case RUnit(motive=motive, case=case, target=target, names=names):
                c = self.check_type(ctx + ((names[0], UNIT),), motive)
                return done("1-Elim", instantiate(motive, target), c,
                            self.check(ctx, case, instantiate(motive, Star()), "1-Elim"),
                            self.check(ctx, target, UNIT, "1-Elim"))
            case REmpty(motive=motive, target=target, names=names):
                c = self.check_type(ctx + ((names[0], EMPTY),), motive)
                return done("0-Elim", instantiate(motive, target), c, self.check(ctx, target, EMPTY, "0-Elim"))
            case RNat(motive=motive, zero_case=zero_case, succ_case=succ_case, target=target, names=names):
                c = self.check_type(ctx + ((names[0], NAT),), motive)
                z = self.check(ctx, zero_case, instantiate(motive, Zero()), "N-Elim")
                step_ctx = ctx + ((names[1], NAT), (names[2], motive))
                s = self.check(step_ctx, succ_case, rebind(motive, [Succ(Var(1))], 2), "N-Elim")
                n = self.check(ctx, target, NAT, "N-Elim")
                return done("N-Elim", instantiate(motive, target), c, z, s, n)
            case RSigma(motive=motive, case=case, target=target, names=names):
                p = self.infer(ctx, target)
                sigma = normalize(p.type)
                if not isinstance(sigma, Sigma):
                    raise _fail("Σ-Elim", "{0} 的类型 {1} 不是 Σ 类型", ctx, target, p.type)
                c = self.check_type(ctx + ((names[0], sigma),), motive)
                case_ctx = ctx + ((names[1], sigma.dom), (names[2], sigma.cod))
                g = self.check(case_ctx, case, rebind(motive, [Pair(Var(1), Var(0))], 2), "Σ-Elim")
                return done("Σ-Elim", instantiate(motive, target), c, g, p)
            case RId(motive=motive, case=case, left=a, right=b, proof=q, names=names):
                left = self.infer(ctx, a)
                base = left.type
                right = self.check(ctx, b, base, "=-Elim")
                proof = self.check(ctx, q, Id(base, a, b), "=-Elim")
                motive_ctx = ctx + ((names[0], base), (names[1], shift(base, 1)),
                                    (names[2], Id(shift(base, 2), Var(1), Var(0))))
                c = self.check_type(motive_ctx, motive)
                refl_case = rebind(motive, [Var(0), Var(0), Refl(Var(0))], 1)
                body = self.check(ctx + ((names[3], base),), case, refl_case, "=-Elim")
                return done("=-Elim", instantiate_all(motive, [a, b, q]), c, body, left, right, proof)
        if is_type_expr(term):
            raise _fail("U-Intro", "类型 {0} 不是项；用 En 取其编码", ctx, term)
        raise _fail("Var", "无法推断 {0}", ctx, term)

    def check(self, ctx: Telescope, term: Expr, ty: Expr, rule: str = "Tm-Conv") -> Derivation:
        """Γ ⊢ term : ty，必要时经 Tm-Conv 或 U-Cumul；类型不符时以 rule 报错"""
        expected = normalize(ty)
        if isinstance(term, Pair) and isinstance(expected, Sigma):
            left = self.check(ctx, term.fst, expected.dom, "Σ-Intro")
            right = self.check(ctx, term.snd, instantiate(expected.cod, term.fst), "Σ-Intro")
            return Derivation("term", "Σ-Intro", ctx, term, ty, premises=[left, right])
        inferred = self.infer(ctx, term)
        if inferred.type == ty:
            return inferred
        actual = normalize(inferred.type)
        if isinstance(actual, Universe) and isinstance(expected, Universe):
            if actual.level <= expected.level:
                return Derivation("term", "U-Cumul", ctx, term, ty, premises=[inferred])
            raise _fail("U-Cumul", "{0} 位于 {1}，高于 {2}", ctx, term, inferred.type, ty)
        if judgmental_equal(inferred.type, ty, ctx):
            equation = Derivation("ty-eq", "Ty-Conv", ctx, inferred.type, ty)
            return Derivation("term", "Tm-Conv", ctx, term, ty, premises=[inferred, equation])
        raise _fail(rule, "{0} 的类型是 {1}，期望 {2}", ctx, term, inferred.type, ty)

    def check_equal(self, ctx: Telescope, left: Expr, right: Expr, ty: Expr) -> Derivation:
        premises = [self.check(ctx, left, ty), self.check(ctx, right, ty)]
        if not judgmental_equal(left, right, ctx, ty):
            raise _fail("Tm-Eq", "{0} 与 {1} 不判断相等", ctx, left, right)
        return Derivation("tm-eq", "Tm-Eq", ctx, left, right, premises=premises)


def typecheck(ctx: Telescope, expr: Expr) -> Derivation:
    """类型给出类型判断的推导，项给出推断出的类型"""
    checker = TypeChecker()
    checker.check_context(ctx)
    if is_type_expr(expr):
        return checker.check_type(ctx, expr)
    return checker.infer(ctx, expr)


def check_definition(definition) -> Derivation:
    """检查 def 声明：上下文、类型，再让项对着类型检查"""
    checker = TypeChecker()
    ctx = definition.telescope
    context = checker.check_context(ctx)
    ty = checker.check_type(ctx, definition.ty)
    term = checker.check(ctx, definition.term, definition.ty)
    logger.debug(f"定义 {definition.name} 通过检查")
    return Derivation("term", term.rule, ctx, definition.term, definition.ty, premises=[context, ty] + term.premises)

"""项的定义域、值域与类型，依赖游戏项的规范化，以及秩与所提到的分量。

规范化按 Ty-Id、Ty-Comp、Π/Σ/Id-Subst 与 El(En A) = A 把替换推到最内层；
项的规范化只做语法上成立的等式（单位律、结合律、Cons-L/R/Nat/Id、Λ 与 Λ⁻¹ 互逆）。
"""

from dataclasses import replace
from functools import lru_cache
from typing import FrozenSet, Tuple

from core.errors import GameShapeError

from .syntax import (N, UNIT, Code, Const, Context, DependentType, ElOf, Extension, Family,
                     FirstProj, Identity, IdTy, Lambda, LambdaInv, Numeral, PairInv, PairMor, PiTy, REmpty,
                     Refl, ReflInv, RNat, SigmaTy, Star, SubstTm, SubstTy, SuccM, Term, Top, Univ, Var)

FLAT_CONSTANTS = ("N", "Unit", "Empty")


# ---- 定义域与值域 ----

def domain(t: Term) -> Context:
    if isinstance(t, (Extension, SubstTm)):
        return domain(t.mor)
    if isinstance(t, Lambda):
        return domain(t.body)[:-1]
    if isinstance(t, LambdaInv):
        dom, _ = as_pi(type_of(t.fun))
        return domain(t.fun) + (dom,)
    if isinstance(t, PairMor):
        return t.ctx + (t.dom, t.cod)
    if isinstance(t, PairInv):
        return t.ctx + (SigmaTy(t.dom, t.cod),)
    if isinstance(t, ReflInv):
        return refl_context(t.ctx, t.ty)
    return t.ctx


def is_morphism(t: Term) -> bool:
    if isinstance(t, (Identity, Top, FirstProj, Extension, PairMor, PairInv, ReflInv)):
        return True
    return isinstance(t, SubstTm) and is_morphism(t.body)


def codomain(t: Term) -> Context:
    if isinstance(t, Identity):
        return t.ctx
    if isinstance(t, Top):
        return ()
    if isinstance(t, FirstProj):
        return t.ctx[:-1]
    if isinstance(t, Extension):
        return codomain(t.mor) + (t.ty,)
    if isinstance(t, SubstTm) and is_morphism(t.body):
        return codomain(t.body)
    if isinstance(t, PairMor):
        return t.ctx + (SigmaTy(t.dom, t.cod),)
    if isinstance(t, PairInv):
        return t.ctx + (t.dom, t.cod)
    if isinstance(t, ReflInv):
        return t.ctx + (t.ty,)
    raise GameShapeError(f"{t} 不是上下文态射")


def weaken(ctx: Context, n: int) -> Term:
    """p^n : ctx → ctx 去掉最新的 n 个分量"""
    if n == 0:
        return Identity(ctx)
    if n == 1:
        return FirstProj(ctx)
    return SubstTm(weaken(ctx[:-1], n - 1), FirstProj(ctx))


def lift(mor: Term, ty: DependentType) -> Term:
    """φ⁺ = ⟨φ ∘ p, v₀⟩ : Δ.A{φ} → Γ.A"""
    extended = domain(mor) + (SubstTy(ty, mor),)
    return Extension(SubstTm(mor, FirstProj(extended)), Var(extended, 0), ty)


def refl_context(ctx: Context, ty: DependentType) -> Context:
    """Γ.A.A⁺.Id(v₁, v₀)"""
    first = ctx + (ty,)
    second = first + (SubstTy(ty, FirstProj(first)),)
    return second + (IdTy(SubstTy(ty, weaken(second, 2)), Var(second, 1), Var(second, 0)),)


def type_of(t: Term) -> DependentType:
    if isinstance(t, Var):
        return SubstTy(t.ctx[-1 - t.index], weaken(t.ctx, t.index + 1))
    if isinstance(t, (Numeral, SuccM)):
        return N
    if isinstance(t, Star):
        return UNIT
    if isinstance(t, Code):
        return Univ(t.level)
    if isinstance(t, SubstTm):
        return SubstTy(type_of(t.body), t.mor)
    if isinstance(t, Lambda):
        return PiTy(domain(t.body)[-1], type_of(t.body))
    if isinstance(t, LambdaInv):
        _, cod = as_pi(type_of(t.fun))
        return cod
    if isinstance(t, (RNat, REmpty)):
        return t.motive
    if isinstance(t, Refl):
        return IdTy(t.ty, t.term, t.term)
    raise GameShapeError(f"{t} 是上下文态射，没有类型")


def as_pi(ty: DependentType) -> Tuple[DependentType, DependentType]:
    nf = normalize_ty(ty)
    if not isinstance(nf, PiTy):
        raise GameShapeError(f"{ty} 不是 Π 类型")
    return nf.dom, nf.cod


# ---- 规范化 ----

@lru_cache(maxsize=4096)
def normalize_ty(ty: DependentType) -> DependentType:
    if isinstance(ty, SubstTy):
        return _push(normalize_ty(ty.body), normalize_tm(ty.mor))
    if isinstance(ty, ElOf):
        code = normalize_tm(ty.code)
        if isinstance(code, Code):
            return normalize_ty(code.ty)
        return ElOf(code, ty.level)
    if isinstance(ty, PiTy):
        return PiTy(normalize_ty(ty.dom), normalize_ty(ty.cod))
    if isinstance(ty, SigmaTy):
        return SigmaTy(normalize_ty(ty.dom), normalize_ty(ty.cod))
    if isinstance(ty, IdTy):
        return IdTy(normalize_ty(ty.ty), normalize_tm(ty.left), normalize_tm(ty.right))
    return ty


def _push(body: DependentType, mor: Term) -> DependentType:
    """body{mor}，body 与 mor 均已规范"""
    if isinstance(mor, Identity) or isinstance(body, (Const, Univ)):
        return body
    if isinstance(body, SubstTy):
        return normalize_ty(SubstTy(body.body, SubstTm(body.mor, mor)))
    if isinstance(body, (PiTy, SigmaTy)):
        return body.__class__(normalize_ty(SubstTy(body.dom, mor)), normalize_ty(SubstTy(body.cod, lift(mor, body.dom))))
    if isinstance(body, IdTy):
        return IdTy(normalize_ty(SubstTy(body.ty, mor)), normalize_tm(SubstTm(body.left, mor)),
                    normalize_tm(SubstTm(body.right, mor)))
    if isinstance(body, ElOf):
        return normalize_ty(ElOf(SubstTm(body.code, mor), body.level))
    return SubstTy(body, mor)


@lru_cache(maxsize=4096)
def normalize_tm(t: Term) -> Term:
    if isinstance(t, SubstTm):
        return _compose(normalize_tm(t.body), normalize_tm(t.mor))
    if isinstance(t, Extension):
        mor, term = normalize_tm(t.mor), normalize_tm(t.term)
        if isinstance(mor, FirstProj) and isinstance(term, Var) and term.index == 0 and term.ctx == mor.ctx:
            return Identity(mor.ctx)
        return Extension(mor, term, normalize_ty(t.ty))
    if isinstance(t, Lambda):
        body = normalize_tm(t.body)
        return body.fun if isinstance(body, LambdaInv) else Lambda(body)
    if isinstance(t, LambdaInv):
        fun = normalize_tm(t.fun)
        return fun.body if isinstance(fun, Lambda) else LambdaInv(fun)
    if isinstance(t, Code):
        return Code(normalize_context(t.ctx), normalize_ty(t.ty), t.level)
    if isinstance(t, Refl):
        return Refl(normalize_context(t.ctx), normalize_ty(t.ty), normalize_tm(t.term))
    if isinstance(t, (PairMor, PairInv)):
        return t.__class__(normalize_context(t.ctx), normalize_ty(t.dom), normalize_ty(t.cod))
    if isinstance(t, ReflInv):
        return ReflInv(normalize_context(t.ctx), normalize_ty(t.ty))
    if hasattr(t, "ctx"):
        return replace(t, ctx=normalize_context(t.ctx))
    return t


def normalize_context(ctx: Context) -> Context:
    return tuple(normalize_ty(ty) for ty in ctx)


def _compose(body: Term, mor: Term) -> Term:
    """body • mor，两者均已规范"""
    if isinstance(mor, Identity):
        return body
    if isinstance(body, Identity):
        return mor
    if isinstance(body, SubstTm):
        return normalize_tm(SubstTm(body.body, SubstTm(body.mor, mor)))
    if isinstance(mor, Extension):
        if isinstance(body, FirstProj):
            return mor.mor
        if isinstance(body, Var):
            if body.index == 0:
                return mor.term
            return normalize_tm(SubstTm(Var(body.ctx[:-1], body.index - 1), mor.mor))
    if isinstance(body, Var) and isinstance(mor, FirstProj):
        return Var(mor.ctx, body.index + 1)
    if isinstance(body, Var) and isinstance(mor, SubstTm) and isinstance(mor.body, (FirstProj, Extension)):
        return normalize_tm(SubstTm(_compose(body, mor.body), mor.mor))
    if isinstance(body, Numeral):
        return Numeral(domain(mor), body.value)
    if isinstance(body, Star):
        return Star(domain(mor))
    if isinstance(body, Top):
        return Top(domain(mor))
    if isinstance(body, Code):
        return Code(domain(mor), normalize_ty(SubstTy(body.ty, mor)), body.level)
    if isinstance(body, Extension):
        return Extension(normalize_tm(SubstTm(body.mor, mor)), normalize_tm(SubstTm(body.term, mor)), body.ty)
    return SubstTm(body, mor)


# ---- 秩与提到的分量 ----

def type_rank(ty: DependentType) -> int:
    """R(A)：与语法上的 type_i 一致"""
    ty = normalize_ty(ty)
    if isinstance(ty, Const):
        return 1
    if isinstance(ty, Univ):
        return ty.level + 2
    if isinstance(ty, ElOf):
        return ty.level + 1
    if isinstance(ty, (PiTy, SigmaTy)):
        return max(type_rank(ty.dom), type_rank(ty.cod))
    if isinstance(ty, IdTy):
        return type_rank(ty.ty)
    if isinstance(ty, SubstTy):
        return type_rank(ty.body)
    if isinstance(ty, Family):
        return 1 if ty.name == "FSN" else ty.level + 1
    raise GameShapeError(f"无法计算 {ty} 的秩")


def is_flat_type(ty: DependentType) -> bool:
    """分量的游戏是否为平坦游戏，从而可以用一个回答来描述"""
    ty = normalize_ty(ty)
    return isinstance(ty, Univ) or (isinstance(ty, Const) and ty.name in FLAT_CONSTANTS)


def _shift_down(indices: FrozenSet[int], by: int = 1) -> FrozenSet[int]:
    return frozenset(k - by for k in indices if k >= by)


def type_mentions(ty: DependentType) -> FrozenSet[int]:
    """在某个环境处求值时可能用到的分量（保守估计）"""
    if isinstance(ty, (Const, Univ)):
        return frozenset()
    if isinstance(ty, ElOf):
        return term_mentions(ty.code)
    if isinstance(ty, SubstTy):
        return term_mentions(ty.mor) if type_mentions(ty.body) else frozenset()
    if isinstance(ty, (PiTy, SigmaTy)):
        return type_mentions(ty.dom) | _shift_down(type_mentions(ty.cod))
    if isinstance(ty, IdTy):
        return type_mentions(ty.ty) | term_mentions(ty.left) | term_mentions(ty.right)
    if isinstance(ty, Family):
        return frozenset({0})
    return frozenset()


def term_mentions(t: Term) -> FrozenSet[int]:
    """策略可能查询的上下文分量（保守估计）"""
    if isinstance(t, Var):
        return frozenset({t.index})
    if isinstance(t, (Numeral, Star, Top, Refl)):
        return frozenset()
    if isinstance(t, (SuccM, REmpty)):
        return frozenset({0})
    if isinstance(t, Code):
        return type_mentions(normalize_ty(t.ty))
    if isinstance(t, Identity):
        return frozenset(range(len(t.ctx)))
    if isinstance(t, FirstProj):
        return frozenset(range(1, len(t.ctx)))
    if isinstance(t, Extension):
        return term_mentions(t.mor) | term_mentions(t.term)
    if isinstance(t, SubstTm):
        return term_mentions(t.mor) if term_mentions(t.body) else frozenset()
    if isinstance(t, Lambda):
        return _shift_down(term_mentions(t.body))
    if isinstance(t, LambdaInv):
        return frozenset({0}) | frozenset(k + 1 for k in term_mentions(t.fun))
    if isinstance(t, RNat):
        from_zero = frozenset(k + 1 for k in term_mentions(t.zero_case))
        from_succ = frozenset(k - 1 for k in term_mentions(t.succ_case) if k >= 2)
        return frozenset({0}) | from_zero | from_succ
    return frozenset(range(len(domain(t))))

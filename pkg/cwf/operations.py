"""范畴族结构与类型构造的项层接口。

这里的函数只构造语法树；求值与实现由 Model 负责。
派生的构造（App、R^Σ、R^Id、后继、编码）按核心项展开。
"""

from typing import Optional

from core.errors import GameShapeError
from engine.checks import EquivalenceResult, equiv_at_depth
from games.game import Game

from .games import Env
from .judgements import as_pi, codomain, domain, normalize_tm, normalize_ty, refl_context, type_of, type_rank
from .model import Model
from .syntax import (EMPTY_TY, N, Code, Context, DependentType, ElOf, Extension, Family, FirstProj, Identity, IdTy,
                     Lambda, LambdaInv, Numeral, PairInv, PairMor, PiTy, REmpty, Refl, ReflInv, RNat, SigmaTy, Star,
                     SubstTm, SubstTy, SuccM, Term, Top, Univ, Var)


# ---- 范畴族的核心 ----

def subst_ty(ty: DependentType, mor: Term) -> DependentType:
    return SubstTy(ty, mor)


def subst_tm(term: Term, mor: Term) -> Term:
    return SubstTm(term, mor)


def comprehension(ctx: Context, ty: DependentType) -> Context:
    return ctx + (ty,)


def first_proj(ctx: Context, ty: DependentType) -> Term:
    return FirstProj(ctx + (ty,))


def second_proj(ctx: Context, ty: DependentType) -> Term:
    return Var(ctx + (ty,), 0)


def extension(mor: Term, term: Term, ty: DependentType) -> Term:
    return Extension(mor, term, ty)


def identity(ctx: Context) -> Term:
    return Identity(ctx)


def instantiate(ctx: Context, term: Term, ty: DependentType) -> Term:
    """τ̄ = ⟨der_Γ, τ⟩"""
    return Extension(Identity(ctx), term, ty)


# ---- Π ----

def lambda_(body: Term) -> Term:
    return Lambda(body)


def lambda_inv(fun: Term) -> Term:
    return LambdaInv(fun)


def app(fun: Term, arg: Term) -> Term:
    """App(κ, τ) = Λ⁻¹(κ) • τ̄"""
    dom, _ = as_pi(type_of(fun))
    return SubstTm(LambdaInv(fun), instantiate(domain(fun), arg, dom))


# ---- Σ ----

def pair_mor(ctx: Context, dom: DependentType, cod: DependentType) -> Term:
    return PairMor(ctx, dom, cod)


def pair_inv(ctx: Context, dom: DependentType, cod: DependentType) -> Term:
    return PairInv(ctx, dom, cod)


def r_sigma(psi: Term, ctx: Context, dom: DependentType, cod: DependentType) -> Term:
    """R^Σ(ψ) = ψ • Pair⁻¹"""
    return SubstTm(psi, PairInv(ctx, dom, cod))


# ---- Id ----

def refl(ctx: Context, ty: DependentType, term: Term) -> Term:
    return Refl(ctx, ty, term)


def refl_inv(ctx: Context, ty: DependentType) -> Term:
    return ReflInv(ctx, ty)


def refl_mor(ctx: Context, ty: DependentType) -> Term:
    """Refl_A : Γ.A → Γ.A.A⁺.Id(v₁, v₀)"""
    first = ctx + (ty,)
    shifted = SubstTy(ty, FirstProj(first))
    diagonal = Extension(Identity(first), Var(first, 0), shifted)
    return Extension(diagonal, Refl(first, shifted, Var(first, 0)), refl_context(ctx, ty)[-1])


def r_id(tau: Term, ctx: Context, ty: DependentType) -> Term:
    """R^Id(τ) = τ • Refl⁻¹"""
    return SubstTm(tau, ReflInv(ctx, ty))


# ---- N ----

def numeral(ctx: Context, value: int) -> Term:
    return Numeral(ctx, value)


def zero(ctx: Context) -> Term:
    return Numeral(ctx, 0)


def succ_m(ctx: Context) -> Term:
    return SuccM(ctx + (N,))


def succ(term: Term) -> Term:
    ctx = domain(term)
    return SubstTm(SuccM(ctx + (N,)), instantiate(ctx, term, N))


def r_nat(ctx: Context, motive: DependentType, zero_case: Term, succ_case: Term, budget: int = 64) -> Term:
    """Γ.N ⊢ R^N(C, c_z, c_s) : C"""
    return RNat(ctx + (N,), motive, zero_case, succ_case, budget)


def r_nat_at(ctx: Context, motive: DependentType, zero_case: Term, succ_case: Term, target: Term,
             budget: int = 64) -> Term:
    """R^N(C, c_z, c_s){n̄}，类型为 C{n̄}"""
    return SubstTm(r_nat(ctx, motive, zero_case, succ_case, budget), instantiate(ctx, target, N))


# ---- 𝟙 与 𝟘 ----

def top(ctx: Context) -> Term:
    return Top(ctx)


def star(ctx: Context) -> Term:
    return Star(ctx)


def r_unit(tau: Term, iota: Term) -> Term:
    """R^𝟙(τ, ι) = τ；ι 必须是 𝟙 的唯一点"""
    if not isinstance(normalize_tm(iota), Star):
        raise GameShapeError(f"R^𝟙 的第二个参数 {iota} 不是 ⋆")
    return tau


def r_empty(ctx: Context, motive: DependentType) -> Term:
    return REmpty(ctx + (EMPTY_TY,), motive)


def r_empty_at(ctx: Context, motive: DependentType, target: Term) -> Term:
    """R^𝟘(C){τ̄}：把第一步改为在 τ 所在的 𝟘 中提问"""
    return SubstTm(r_empty(ctx, motive), instantiate(ctx, target, EMPTY_TY))


# ---- 宇宙 ----

def code_level(ty: DependentType) -> int:
    return max(type_rank(ty) - 1, 0)


def en(ctx: Context, ty: DependentType) -> Term:
    """En(A)：El(μ) 回到 μ，替换变为复合，其余类型编码到能容纳它的最小宇宙"""
    nf = normalize_ty(ty)
    if isinstance(nf, ElOf):
        return nf.code
    if isinstance(nf, SubstTy):
        return SubstTm(en(codomain(nf.mor), nf.body), nf.mor)
    return Code(ctx, nf, code_level(nf))


def el(code: Term, level: Optional[int] = None) -> DependentType:
    if level is None:
        ty = normalize_ty(type_of(code))
        if not isinstance(ty, Univ):
            raise GameShapeError(f"{code} 的类型 {ty} 不是宇宙")
        level = ty.level
    return ElOf(code, level)


def underline_pi(code: Term, family: Term, level: int) -> Term:
    """Π̲(μ, ν)，ν 位于 Γ.El(μ) 上"""
    return Code(domain(code), PiTy(ElOf(code, level), ElOf(family, level)), level)


def underline_sigma(code: Term, family: Term, level: int) -> Term:
    return Code(domain(code), SigmaTy(ElOf(code, level), ElOf(family, level)), level)


def underline_id(code: Term, left: Term, right: Term, level: int) -> Term:
    return Code(domain(code), IdTy(ElOf(code, level), left, right), level)


def fsn_code() -> Term:
    """FSN : N → U0 的指称"""
    return Lambda(Code((N,), Family("FSN"), 0))


def endo_code(level: int = 0) -> Term:
    """ENDO : U_k → U_k"""
    return Lambda(Code((Univ(level),), Family("ENDO", level), level))


# ---- 求值与比较 ----

def eval_dependent(model: Model, ctx: Context, ty: DependentType, env: Env = None) -> Game:
    return model.fiber(ctx, ty, env if env is not None else (None,) * len(ctx))


def pi_hat(model: Model, ctx: Context, dom: DependentType, cod: DependentType, env: Env = None) -> Game:
    return eval_dependent(model, ctx, PiTy(dom, cod), env)


def sigma_hat(model: Model, ctx: Context, dom: DependentType, cod: DependentType, env: Env = None) -> Game:
    return eval_dependent(model, ctx, SigmaTy(dom, cod), env)


def id_hat(model: Model, ctx: Context, ty: DependentType, left: Term, right: Term, env: Env = None) -> Game:
    return eval_dependent(model, ctx, IdTy(ty, left, right), env)


def equiv(model: Model, left: Term, right: Term, depth: Optional[int] = None,
          bound: Optional[int] = None) -> EquivalenceResult:
    """两个项的实现在左侧的态射游戏中深度有界地行为等价"""
    return equiv_at_depth(model.realize(left), model.realize(right),
                          depth or model.bounds.depth, bound if bound is not None else model.bounds.alphabet,
                          game=model.morphism_game(left))

"""判断性相等：先规范化子项，再在根部改写，直到不动。

根部改写：β、Π 的 η（Π-Uniq）、Σ-Comp、Σ-Uniq、N-CompZero、N-CompSucc、
𝟙 的消去（由 𝟙-Uniq 目标总可化为 ⋆）、=-Comp、El(En A) → A。
En(A) 内部不规范化。类型为 𝟙 的变量按 𝟙-Uniq 折叠为 ⋆。
"""

import logging
from dataclasses import replace
from typing import List, Optional, Sequence

from .syntax import (UNIT, App, El, En, Expr, Lam, Pair, Pi, RId, Refl, RNat, RSigma, RUnit, Sigma,
                     Star, Succ, Telescope, UnitTy, Var, Zero, instantiate, instantiate_all, occurs, shift)

logger = logging.getLogger(__name__)


def fst_of(dom: Expr, pair: Expr) -> Expr:
    """π₁(p) = R^Σ(z. A, x y. x, p)"""
    return RSigma(shift(dom, 1), Var(1, "x"), pair)


def snd_of(dom: Expr, cod: Expr, pair: Expr) -> Expr:
    """π₂(p) = R^Σ(z. B[π₁ z/x], x y. y, p)"""
    motive = instantiate(shift(cod, 1, cutoff=1), fst_of(shift(dom, 1), Var(0, "z")))
    return RSigma(motive, Var(0, "y"), pair)


def rewrite(e: Expr) -> Optional[Expr]:
    """根部一步改写；不可改写时返回 None"""
    match e:
        case App(fun=Lam(body=body), arg=arg):
            return instantiate(body, arg)
        case Lam(body=App(fun=fun, arg=Var(index=0))) if not occurs(fun, 0):
            return shift(fun, -1)
        case RSigma(case=case, target=Pair(fst=a, snd=b)):
            return instantiate_all(case, [a, b])
        case Pair(fst=RSigma(case=Var(index=1), target=p), snd=RSigma(case=Var(index=0), target=q)) if p == q:
            return p
        case RNat(zero_case=zero_case, target=Zero()):
            return zero_case
        case RNat(succ_case=succ_case, target=Succ(arg=n)):
            return instantiate_all(succ_case, [n, replace(e, target=n)])
        case RUnit(case=case):
            return case
        case RId(case=case, left=left, proof=Refl()):
            return instantiate(case, left)
        case El(code=En(ty=ty)):
            return ty
    return None


def normalize(e: Expr) -> Expr:
    """最内优先规范化到正规形"""
    if isinstance(e, (Var, En)):
        return e
    changes = {name: normalize(child) for name, child in e.children()}
    if changes:
        e = replace(e, **changes)
    reduct = rewrite(e)
    if reduct is None:
        return e
    return normalize(reduct)


def _unit_binders(e: Expr, name: str) -> List[bool]:
    """e 的子节点 name 之下新增绑定是否为 𝟙 类型，从外到内"""
    match e:
        case Lam(dom=dom) | Pi(dom=dom) | Sigma(dom=dom):
            return [normalize(dom) == UNIT]
        case RUnit():
            return [True]
        case RNat(motive=motive) if name == "succ_case":
            return [False, normalize(motive) == UNIT]
    return [False] * e.binds(name)


def collapse_units(e: Expr, units: Sequence[bool]) -> Expr:
    """units[-1 - i] 表示 Var i 的类型为 𝟙"""
    if isinstance(e, Var):
        return Star() if e.index < len(units) and units[-1 - e.index] else e
    if isinstance(e, En):
        return e
    changes = {name: collapse_units(child, list(units) + _unit_binders(e, name)) for name, child in e.children()}
    return replace(e, **changes) if changes else e


def context_units(ctx: Telescope) -> List[bool]:
    return [normalize(ty) == UNIT for _, ty in ctx]


def canonical(e: Expr, ctx: Telescope = ()) -> Expr:
    return normalize(collapse_units(normalize(e), context_units(ctx)))


def judgmental_equal(left: Expr, right: Expr, ctx: Telescope = (), ty: Optional[Expr] = None) -> bool:
    """Γ ⊢ left ≡ right (: ty)；给出 ty 时再按类型做 η 与 𝟙-Uniq"""
    if left == right:
        return True
    if canonical(left, ctx) == canonical(right, ctx):
        return True
    if ty is None:
        return False
    match normalize(ty):
        case UnitTy():
            return True
        case Pi(dom=dom, cod=cod, name=name):
            bound = ctx + ((name, dom),)
            return judgmental_equal(App(shift(left, 1), Var(0)), App(shift(right, 1), Var(0)), bound, cod)
        case Sigma(dom=dom, cod=cod):
            first = fst_of(dom, left)
            if not judgmental_equal(first, fst_of(dom, right), ctx, dom):
                return False
            return judgmental_equal(snd_of(dom, cod, left), snd_of(dom, cod, right), ctx, instantiate(cod, first))
    return False


__all__ = ["canonical", "collapse_units", "fst_of", "judgmental_equal", "normalize", "rewrite", "snd_of"]

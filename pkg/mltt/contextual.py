"""上下文项：把上下文态射 Γ ⇒ Δ 写成 Σ(Δ) 的单个项

Σ(◊) = 𝟙，Σ(Δ, x : A) = Σ(z : Σ(Δ)). A[π₀ z, …, π_{n-1} z]，
项为 (…((⋆, d₁), d₂), …, d_n)。Δ 是闭的上下文，故各 Σ(Δ) 都是闭类型。
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from core.errors import TypeCheckError
from cwf.model import Model
from cwf.syntax import Extension, Top
from engine.checks import EquivalenceResult, equiv_at_depth

from .elaborate import Elaborator
from .equality import fst_of, snd_of
from .syntax import UNIT, Expr, Pair, Sigma, Star, Telescope, Var, rebind
from .typecheck import Derivation, TypeChecker

logger = logging.getLogger(__name__)


class SigmaTelescope:
    """Δ 的各前缀 Σ(Δ_m) 及其分量投影"""

    def __init__(self, delta: Telescope):
        self.delta = delta
        self.prefixes: List[Expr] = [UNIT]
        for m in range(1, len(delta) + 1):
            name, ty = delta[m - 1]
            z = Var(0, "z")
            values = [self.project(k, z, m - 1) for k in range(m - 1)]
            self.prefixes.append(Sigma(self.prefixes[m - 1], rebind(ty, values, 1), name))

    @property
    def type(self) -> Expr:
        return self.prefixes[-1]

    def project(self, k: int, term: Expr, m: Optional[int] = None) -> Expr:
        """term : Σ(Δ_m) 的第 k 个分量（从 0 数起，最旧的在前）"""
        m = len(self.delta) if m is None else m
        if not 0 <= k < m:
            raise IndexError(f"分量 {k} 超出 Σ(Δ_{m})")
        while k < m - 1:
            term = fst_of(self.prefixes[m - 1], term)
            m -= 1
        last = self.prefixes[m]
        return snd_of(last.dom, last.cod, term)


@dataclass
class ContextualTerm:
    context: Telescope
    delta: Telescope
    components: List[Expr]
    term: Expr
    sigma: SigmaTelescope
    derivation: Derivation

    @property
    def type(self) -> Expr:
        return self.sigma.type

    def projection(self, k: int) -> Expr:
        return self.sigma.project(k, self.term)


def contextual_term(ctx: Telescope, components: Sequence[Expr], delta: Telescope) -> ContextualTerm:
    """Γ ⊢ (…(⋆, d₁)…, d_n) : Σ(Δ)；分量个数或类型不符时报 Σ-Intro"""
    if len(components) != len(delta):
        raise TypeCheckError("Σ-Intro", f"上下文 Δ 有 {len(delta)} 个分量，得到 {len(components)} 个项")
    checker = TypeChecker()
    checker.check_context(ctx)
    checker.check_context(delta)
    for k, (d, (name, ty)) in enumerate(zip(components, delta)):
        expected = rebind(ty, list(components[:k]), len(ctx))
        try:
            checker.check(ctx, d, expected)
        except TypeCheckError as e:
            raise TypeCheckError("Σ-Intro", f"第 {k + 1} 个分量 {name} 不合类型：{e}") from e
    term: Expr = Star()
    for d in components:
        term = Pair(term, d)
    sigma = SigmaTelescope(delta)
    derivation = checker.check(ctx, term, sigma.type)
    return ContextualTerm(ctx, delta, list(components), term, sigma, derivation)


def extension_morphism(contextual: ContextualTerm, elaborator: Elaborator):
    """⟨!, ⟦d₁⟧, …, ⟦d_n⟧⟩ : Γ → Δ"""
    gamma = elaborator.context(contextual.context)
    morphism = Top(gamma)
    for k, d in enumerate(contextual.components):
        prefix = contextual.delta[:k]
        _, ty = contextual.delta[k]
        expected = rebind(ty, contextual.components[:k], len(contextual.context))
        morphism = Extension(morphism, elaborator.term(contextual.context, d, expected), elaborator.type(prefix, ty))
    return morphism


def agrees_with_extension(model: Model, contextual: ContextualTerm, depth: int = 10,
                          bound: int = 2) -> EquivalenceResult:
    """⟦上下文项⟧ 与扩展链态射在后者的态射游戏中行为相同"""
    elaborator = Elaborator(model.bounds.unfold)
    morphism = extension_morphism(contextual, elaborator)
    denotation = elaborator.term(contextual.context, contextual.term, contextual.type)
    result = equiv_at_depth(model.realize(denotation), model.realize(morphism), depth, bound,
                            game=model.morphism_game(morphism))
    logger.info(f"上下文项与扩展链{'一致' if result.equivalent else '不一致'}，检查了 {result.checked} 个位置")
    return result

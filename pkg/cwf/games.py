"""依赖游戏项在环境处的游戏：族、Π̂、Îd、上下文游戏与态射游戏。

环境 env 是从新到旧排列的元组，每个分量是平坦分量上观察到的回答，未知时为 None。
族游戏 FamilyGame 是对未知分量取遍所有点后各纤维的并。
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Iterator, List, Optional, Tuple, Union

from arena.arena import Arena, BangArena, LollipopArena
from arena.moves import QUESTION, MoveLabel, RankedMove
from arena.position import Position
from games.constructions import BangGame, LollipopGame, ProductGame
from games.game import Game, TerminalGame
from predicative.registry import digest, game_key

from .judgements import is_flat_type, type_rank
from .syntax import Context, DependentType, context_to_list

if TYPE_CHECKING:
    from .model import Model

logger = logging.getLogger(__name__)

Env = Tuple[Optional[RankedMove], ...]


def env_to_list(env: Env) -> list:
    return [None if v is None else v.to_dict() for v in env]


def env_from_list(items: list) -> Env:
    return tuple(None if v is None else RankedMove.from_dict(v) for v in items)


def _signature(ctx: Context, ty: DependentType, env: Env) -> str:
    return digest({"ctx": context_to_list(ctx), "type": ty.to_dict(), "env": env_to_list(env)})


def flat_value(move: RankedMove) -> Optional[RankedMove]:
    """平坦游戏中的回答去掉标记后的值；问题返回 None"""
    value = RankedMove(move.ident, move.rank)
    return None if value == QUESTION else value


def observed_env(s: Position, ctx: Context, prefix: Tuple[str, ...]) -> Optional[Env]:
    """读出位置中 prefix.L^k.R 处平坦分量的回答；同一分量出现两个不同回答时返回 None"""
    found: List[Optional[RankedMove]] = [None] * len(ctx)
    depth = len(prefix)
    for move in s.moves:
        if not move.has_prefix(prefix):
            continue
        rest = move.tag_path[depth:]
        k = 0
        while k < len(rest) and rest[k] == "L":
            k += 1
        if rest != ("L",) * k + ("R",) or k >= len(ctx) or not is_flat_type(ctx[-1 - k]):
            continue
        value = flat_value(move)
        if value is None:
            continue
        if found[k] is not None and found[k] != value:
            return None
        found[k] = value
    return tuple(found)


@dataclass(frozen=True)
class NamedGame(Game):
    """给内部游戏换一个注册键，例如 FS(k)"""
    key: str
    inner: Game

    @property
    def registry_key(self) -> str:
        return self.key

    @property
    def arena(self) -> Arena:
        return self.inner.arena

    @property
    def well_opened(self) -> bool:
        return self.inner.well_opened

    def accepts(self, s: Position) -> bool:
        return self.inner.accepts(s)

    def admits(self, s: Position) -> bool:
        return self.inner.admits(s)

    def rank(self, bound: int = 4) -> int:
        return self.inner.rank(bound)


@dataclass(frozen=True)
class FamilyGame(Game):
    """⊎_γ A(γ)：对 env 中未知且被 A 提到的平坦分量取遍所有点"""
    model: "Model" = field(compare=False, hash=False, repr=False)
    ctx: Context = ()
    ty: DependentType = None
    env: Env = ()

    @property
    def registry_key(self) -> str:
        return f"⊎{_signature(self.ctx, self.ty, self.env)}"

    @cached_property
    def fibers(self) -> List[Game]:
        return self.model.fibers(self.ctx, self.ty, self.env)

    @cached_property
    def union(self) -> Arena:
        return self.model.union_arena(self.fibers)

    @property
    def arena(self) -> "FamilyArena":
        return FamilyArena(self)

    @property
    def well_opened(self) -> bool:
        return bool(self.fibers) and all(g.well_opened for g in self.fibers)

    def accepts(self, s: Position) -> bool:
        return any(g.admits(s) for g in self.fibers)

    def rank(self, bound: int = 4) -> int:
        return type_rank(self.ty)


@dataclass(frozen=True)
class FamilyArena(Arena):
    """⊎A 的竞技场，只在第一次查询标签时才求出各个纤维"""
    family: FamilyGame

    def label(self, move: RankedMove) -> Optional[MoveLabel]:
        return self.family.union.label(move)

    def enables(self, source: Optional[RankedMove], target: RankedMove) -> bool:
        return self.family.union.enables(source, target)

    def moves(self, bound: int) -> Iterator[RankedMove]:
        return self.family.union.moves(bound)


@dataclass(frozen=True)
class PiHatGame(Game):
    """Π̂(A, B)：!A ⊸ ⊎B，右侧按左侧观察到的 A 的回答取纤维"""
    model: "Model" = field(compare=False, hash=False, repr=False)
    ctx: Context = ()
    dom: DependentType = None
    cod: DependentType = None
    env: Env = ()

    @property
    def registry_key(self) -> str:
        return f"Π{_signature(self.ctx, self.cod, self.env)}:{digest(self.dom.to_dict())}"

    @cached_property
    def dom_game(self) -> Game:
        return self.model.fiber(self.ctx, self.dom, self.env)

    @cached_property
    def dom_flat(self) -> bool:
        return is_flat_type(self.dom)

    @cached_property
    def arena(self) -> LollipopArena:
        codomain = FamilyGame(self.model, self.ctx + (self.dom,), self.cod, (None,) + self.env)
        return LollipopArena(BangArena(self.dom_game.arena), codomain.arena)

    def accepts(self, s: Position) -> bool:
        left = s.restrict_prefix(("L",))
        if not BangGame(self.dom_game, self.model.thread_bound).admits(left):
            return False
        observed: Optional[RankedMove] = None
        if self.dom_flat:
            values = {flat_value(m) for m in left.moves if m.tag_path == ("!",)} - {None}
            if len(values) > 1:
                return False
            observed = next(iter(values), None)
        family = FamilyGame(self.model, self.ctx + (self.dom,), self.cod, (observed,) + self.env)
        return family.admits(s.restrict_prefix(("R",)))

    def rank(self, bound: int = 4) -> int:
        return max(type_rank(self.dom), type_rank(self.cod))


@dataclass(frozen=True)
class IdHatGame(Game):
    """Îd(σ, τ)：(σ̂ ⇒ τ̂) & (τ̂ ⇒ σ̂) 中满足拷贝条件的位置

    每个偶数前缀在所选分量上，左侧 ! 之下的部分必须与右侧完全相同。
    """
    left: Game
    right: Game
    thread_bound: int = 1

    @property
    def registry_key(self) -> str:
        return f"Id({game_key(self.left)}, {game_key(self.right)})"

    @cached_property
    def base(self) -> ProductGame:
        return ProductGame(LollipopGame(BangGame(self.left, self.thread_bound), self.right),
                           LollipopGame(BangGame(self.right, self.thread_bound), self.left))

    @property
    def arena(self) -> Arena:
        return self.base.arena

    @property
    def well_opened(self) -> bool:
        return self.base.well_opened

    def accepts(self, s: Position) -> bool:
        if not self.base.accepts(s):
            return False
        if not s:
            return True
        side = s.moves[0].head_tag
        for n in range(2, len(s) + 1, 2):
            t = s.prefix(n)
            if t.restrict_prefix((side, "L", "!")) != t.restrict_prefix((side, "R")):
                return False
        return True

    def rank(self, bound: int = 4) -> int:
        return max(self.left.rank(bound), self.right.rank(bound))


def context_game(model: "Model", ctx: Context) -> Game:
    """Γ 的游戏：◊ 为 I，Γ.A 为 Γ & ⊎A；第 k 个（从新到旧）分量位于 L^k.R"""
    if not ctx:
        return TerminalGame()
    rest = ctx[:-1]
    return ProductGame(context_game(model, rest), FamilyGame(model, rest, ctx[-1], (None,) * len(rest)))


@dataclass(frozen=True)
class MorphismGame(Game):
    """!Γ ⊸ T：T 为类型时右侧是按观察到的环境取的族，为上下文时是上下文游戏"""
    model: "Model" = field(compare=False, hash=False, repr=False)
    ctx: Context = ()
    target: Union[DependentType, Context] = ()

    @property
    def registry_key(self) -> str:
        target = context_to_list(self.target) if isinstance(self.target, tuple) else self.target.to_dict()
        return f"⊸{digest({'ctx': context_to_list(self.ctx), 'target': target})}"

    @property
    def is_context_morphism(self) -> bool:
        return isinstance(self.target, tuple)

    @cached_property
    def context(self) -> Game:
        return context_game(self.model, self.ctx)

    @cached_property
    def right_arena(self) -> Arena:
        if self.is_context_morphism:
            return context_game(self.model, self.target).arena
        return FamilyGame(self.model, self.ctx, self.target, (None,) * len(self.ctx)).arena

    @cached_property
    def arena(self) -> LollipopArena:
        return LollipopArena(BangArena(self.context.arena), self.right_arena)

    def accepts(self, s: Position) -> bool:
        if not BangGame(self.context, self.model.thread_bound).admits(s.restrict_prefix(("L",))):
            return False
        right = s.restrict_prefix(("R",))
        if self.is_context_morphism:
            return context_game(self.model, self.target).admits(right)
        env = observed_env(s, self.ctx, ("L", "!"))
        if env is None:
            return False
        return FamilyGame(self.model, self.ctx, self.target, env).admits(right)

    def rank(self, bound: int = 4) -> int:
        ranks = [type_rank(ty) for ty in self.ctx]
        targets = list(self.target) if self.is_context_morphism else [self.target]
        ranks += [type_rank(ty) for ty in targets]
        return max(ranks, default=1)

"""谓词游戏上的范畴族模型。

Model 把依赖游戏项在环境处求值为游戏（纤维），把初等策略项实现为策略 oracle，
并维护编码所需的注册表。所有结果按语法节点缓存。
"""

import itertools
import logging
from typing import Dict, List, Optional, Tuple, Union

from arena.arena import Arena, EmptyArena, UnionArena
from arena.moves import CHECK, QUESTION, RankedMove
from arena.position import Position
from core.errors import DecodeError, GameShapeError, RegistryError
from engine.checks import strategy_game
from engine.combinators import RetagOracle, pairing, promotion
from engine.composite import Composite
from engine.copycat import CopyCat
from engine.oracle import FunctionOracle, StrategyOracle
from games.composition import SideArena
from games.constructions import ProductGame, TensorGame, implication
from games.game import ArenaGame, Game, TerminalGame, empty_game, nat_game, unit_game
from models.bounds import Bounds
from predicative.registry import GameRegistry, RegistryEntry
from predicative.universe import UniverseGame

from .games import (Env, FamilyGame, IdHatGame, MorphismGame, NamedGame, PiHatGame, context_game, env_from_list,
                    env_to_list, flat_value)
from .judgements import codomain, domain, is_flat_type, is_morphism, normalize_ty, type_mentions, type_of
from .oracles import (CONTEXT, CodeOracle, PointedOracle, Reframed, UnfoldingOracle, answer_at, empty_reply,
                      successor_reply)
from .syntax import (Code, Const, Context, DependentType, ElOf, Extension, Family, FirstProj, Identity, IdTy,
                     Lambda, LambdaInv, Numeral, PairInv, PairMor, PiTy, REmpty, Refl, ReflInv, RNat, SigmaTy,
                     Star, SubstTm, SubstTy, SuccM, Term, Top, Univ, Var, context_to_list, node_from_dict)

logger = logging.getLogger(__name__)

EXPLORE_BOUND = 2


def fs_game(k: int) -> Game:
    """FS(0) = I，FS(1) = N，FS(k+1) = N ⊗ FS(k)，各自有独立的注册键"""
    if k <= 0:
        inner: Game = TerminalGame()
    elif k == 1:
        inner = nat_game()
    else:
        inner = TensorGame(nat_game(), fs_game(k - 1).inner)
    return NamedGame(f"FS({k})", inner)


class Model:
    """谓词游戏模型

    realize 与 fiber 的结果都被缓存；Model 不是线程安全的，每个会话持有自己的实例。
    """

    def __init__(self, registry: Optional[GameRegistry] = None, bounds: Optional[Bounds] = None):
        self.bounds = bounds or Bounds()
        self.registry = registry if registry is not None else GameRegistry()
        if self.registry.builder is None:
            self.registry.builder = self.build_from_ast
        self.logger = logging.getLogger(self.__class__.__name__)
        self._fibers: Dict[Tuple, Game] = {}
        self._oracles: Dict[Term, StrategyOracle] = {}
        self._contexts: Dict[Context, Game] = {}

    @property
    def thread_bound(self) -> int:
        return self.bounds.thread_bound

    # ---- 环境与纤维 ----

    def points(self, ty: DependentType) -> List[Optional[RankedMove]]:
        """平坦类型的全部回答（截断到 alphabet）；非平坦类型只有不透明的点 None"""
        nf = normalize_ty(ty)
        if isinstance(nf, Const):
            if nf.name == "N":
                return [RankedMove(n) for n in range(self.bounds.alphabet + 1)]
            if nf.name == "Unit":
                return [CHECK]
            if nf.name == "Empty":
                return []
        if isinstance(nf, Univ):
            return self.registry.names(nf.level + 1)
        return [None]

    def completions(self, ctx: Context, ty: DependentType, env: Env) -> List[Env]:
        unknown = [k for k in sorted(type_mentions(normalize_ty(ty)))
                   if k < len(env) and env[k] is None and is_flat_type(ctx[-1 - k])]
        if not unknown:
            return [env]
        result = []
        for values in itertools.product(*(self.points(ctx[-1 - k]) for k in unknown)):
            full = list(env)
            for k, v in zip(unknown, values):
                full[k] = v
            result.append(tuple(full))
        return result

    def fibers(self, ctx: Context, ty: DependentType, env: Env) -> List[Game]:
        games: List[Game] = []
        for full in self.completions(ctx, ty, env):
            try:
                game = self.fiber(ctx, ty, full)
            except (DecodeError, RegistryError) as e:
                self.logger.debug(f"{ty} 在 {env_to_list(full)} 处没有纤维: {e}")
                continue
            if game not in games:
                games.append(game)
        return games

    @staticmethod
    def union_arena(games: List[Game]) -> Arena:
        arenas: List[Arena] = []
        for game in games:
            if game.arena not in arenas:
                arenas.append(game.arena)
        if not arenas:
            return EmptyArena()
        return arenas[0] if len(arenas) == 1 else UnionArena(tuple(arenas))

    def fiber(self, ctx: Context, ty: DependentType, env: Env) -> Game:
        """A(γ)：依赖游戏项在环境处的游戏"""
        key = (ctx, ty, env)
        cached = self._fibers.get(key)
        if cached is not None:
            return cached
        game = self._fiber(ctx, normalize_ty(ty), env)
        self._fibers[key] = game
        return game

    def _fiber(self, ctx: Context, ty: DependentType, env: Env) -> Game:
        if isinstance(ty, Const):
            return {"N": nat_game, "Unit": unit_game, "Empty": empty_game, "I": TerminalGame}[ty.name]()
        if isinstance(ty, Univ):
            return UniverseGame(ty.level, self.registry)
        if isinstance(ty, ElOf):
            name = self.evaluate(ty.code, env)
            entry = None if name is None else self.registry.decode(name)
            if entry is None:
                raise DecodeError(f"{ty} 的编码在 {env_to_list(env)} 处没有给出游戏的名字")
            return self.registry.game_of(entry.number)
        if isinstance(ty, PiTy):
            return PiHatGame(self, ctx, ty.dom, ty.cod, env)
        if isinstance(ty, SigmaTy):
            return ProductGame(self.fiber(ctx, ty.dom, env),
                               FamilyGame(self, ctx + (ty.dom,), ty.cod, (None,) + env))
        if isinstance(ty, IdTy):
            ambient = self.fiber(ctx, ty.ty, env)
            return IdHatGame(self.point_game(ty.left, env, ambient), self.point_game(ty.right, env, ambient))
        if isinstance(ty, Family):
            return self._family(ty, env)
        if isinstance(ty, SubstTy):
            return self.fiber(codomain(ty.mor), ty.body, self.env_of(ty.mor, env))
        raise GameShapeError(f"无法求值依赖游戏项 {ty}")

    def _family(self, family: Family, env: Env) -> Game:
        index = env[0] if env else None
        if index is None:
            raise DecodeError(f"{family} 的指标未知")
        if family.name == "FSN":
            if not isinstance(index.ident, int):
                raise DecodeError(f"FSN 的指标 {index} 不是自然数")
            return fs_game(index.ident)
        if family.name == "ENDO":
            entry = self.registry.decode(index)
            if entry is None:
                raise DecodeError(f"ENDO 的指标 {index} 不是游戏的名字")
            inner = self.registry.game_of(entry.number)
            return NamedGame(f"ENDO({entry.key})", implication(inner, inner, self.thread_bound))
        raise GameShapeError(f"未知的依赖游戏 {family.name}")

    def point_game(self, term: Term, env: Env, ambient: Game) -> Game:
        """σ 在环境处的策略游戏 σ̂，截断到 bounds.depth"""
        pointed = self.pointed(term, env, ambient)
        return strategy_game(pointed, self.bounds.depth, EXPLORE_BOUND, ambient)

    def pointed(self, term: Term, env: Env, game: Optional[Game] = None) -> PointedOracle:
        oracle = self.realize(term)
        if game is None:
            game = ArenaGame(SideArena(oracle.game.arena, "R"))
        return PointedOracle(oracle, env, game, self.bounds.steps)

    def _ask(self, term: Term, env: Env, question: RankedMove) -> Optional[RankedMove]:
        pointed = self.pointed(term, env)
        outcome = pointed.respond(Position.of((question, None)), validate=False)
        if not outcome.responded:
            self.logger.debug(f"{term} 在 {env_to_list(env)} 处对 {question} 没有回答（{outcome.status.value}）")
            return None
        return flat_value(outcome.move)

    def evaluate(self, term: Term, env: Env = ()) -> Optional[RankedMove]:
        """平坦类型的项在环境处的回答"""
        return self._ask(term, env, QUESTION)

    def env_of(self, mor: Term, env: Env) -> Env:
        """态射 φ 把 Δ 上的环境送到 Γ 上的环境；非平坦或没有回答的分量为 None"""
        if isinstance(mor, Identity):
            return env
        if isinstance(mor, FirstProj):
            return env[1:]
        if isinstance(mor, SubstTm) and is_morphism(mor.body):
            return self.env_of(mor.body, self.env_of(mor.mor, env))
        if isinstance(mor, Extension):
            head = self._ask(mor.term, env, QUESTION) if is_flat_type(mor.ty) else None
            return (head,) + self.env_of(mor.mor, env)
        target = codomain(mor)
        values: List[Optional[RankedMove]] = []
        for k in range(len(target)):
            if not is_flat_type(target[-1 - k]):
                values.append(None)
                continue
            values.append(self._ask(mor, env, QUESTION.tagged(*("L",) * k, "R")))
        return tuple(values)

    # ---- 编码 ----

    def code_name(self, ctx: Context, ty: DependentType, level: int, env: Env) -> Optional[RankedMove]:
        """登记 A(γ) 并返回名字；秩超出 U_level 或无法求值时返回 None"""
        try:
            game = self.fiber(ctx, ty, env)
            entry = self.register(game, ctx, ty, env)
        except (DecodeError, RegistryError, GameShapeError) as e:
            self.logger.warning(f"{ty} 无法编码: {e}")
            return None
        if entry.rank > level + 1:
            self.logger.warning(f"{ty} 的秩 {entry.rank} 超出 U{level}")
            return None
        return entry.name

    def register(self, game: Game, ctx: Context, ty: DependentType, env: Env) -> RegistryEntry:
        ast = {"ctx": context_to_list(ctx), "type": ty.to_dict(), "env": env_to_list(env)}
        return self.registry.register(game, description=str(ty), ast=ast)

    def build_from_ast(self, ast: Dict) -> Game:
        ctx = tuple(node_from_dict(d) for d in ast["ctx"])
        return self.fiber(ctx, node_from_dict(ast["type"]), env_from_list(ast["env"]))

    # ---- 上下文与态射 ----

    def context_game(self, ctx: Context) -> Game:
        game = self._contexts.get(ctx)
        if game is None:
            game = context_game(self, ctx)
            self._contexts[ctx] = game
        return game

    def morphism_game(self, term: Term) -> MorphismGame:
        target: Union[DependentType, Context] = codomain(term) if is_morphism(term) else type_of(term)
        return MorphismGame(self, domain(term), target)

    # ---- 实现 ----

    def realize(self, term: Term) -> StrategyOracle:
        cached = self._oracles.get(term)
        if cached is not None:
            return cached
        oracle = self._realize(term, self.morphism_game(term))
        self._oracles[term] = oracle
        return oracle

    def _realize(self, term: Term, game: MorphismGame) -> StrategyOracle:
        name = str(term)
        if isinstance(term, Identity):
            return CopyCat(game, [(("R",), CONTEXT)], name)
        if isinstance(term, Var):
            return CopyCat(game, [(("R",), CONTEXT + ("L",) * term.index + ("R",))], name)
        if isinstance(term, FirstProj):
            return CopyCat(game, [(("R",), CONTEXT + ("L",))], name)
        if isinstance(term, Top):
            return FunctionOracle(game, lambda s: None, name)
        if isinstance(term, Extension):
            return Reframed(pairing(self.realize(term.mor), self.realize(term.term)), game, name)
        if isinstance(term, SubstTm):
            lifted = promotion(self.realize(term.mor), thread_bound=self.thread_bound)
            return Reframed(Composite(lifted, self.realize(term.body), self.bounds.steps), game, name)
        if isinstance(term, Lambda):
            mappings = [(CONTEXT, CONTEXT + ("L",)), (("R", "L", "!"), CONTEXT + ("R",)), (("R", "R"), ("R",))]
            return RetagOracle(game, self.realize(term.body), mappings, name)
        if isinstance(term, LambdaInv):
            mappings = [(CONTEXT + ("L",), CONTEXT), (CONTEXT + ("R",), ("R", "L", "!")), (("R",), ("R", "R"))]
            return RetagOracle(game, self.realize(term.fun), mappings, name)
        if isinstance(term, Numeral):
            return FunctionOracle(game, answer_at(RankedMove(term.value)), name)
        if isinstance(term, Star):
            return FunctionOracle(game, answer_at(CHECK), name)
        if isinstance(term, SuccM):
            return FunctionOracle(game, successor_reply, name)
        if isinstance(term, REmpty):
            return FunctionOracle(game, empty_reply, name)
        if isinstance(term, Code):
            return CodeOracle(self, term, game)
        if isinstance(term, RNat):
            return UnfoldingOracle(self, term, game)
        if isinstance(term, Refl):
            pairs = [(("R", "L", "R"), ("R", "L", "L", "!")), (("R", "R", "R"), ("R", "R", "L", "!"))]
            return CopyCat(game, pairs, name)
        if isinstance(term, PairMor):
            pairs = [(("R", "L"), CONTEXT + ("L", "L")), (("R", "R", "L"), CONTEXT + ("L", "R")),
                     (("R", "R", "R"), CONTEXT + ("R",))]
            return CopyCat(game, pairs, name)
        if isinstance(term, PairInv):
            pairs = [(("R", "L", "L"), CONTEXT + ("L",)), (("R", "L", "R"), CONTEXT + ("R", "L")),
                     (("R", "R"), CONTEXT + ("R", "R"))]
            return CopyCat(game, pairs, name)
        if isinstance(term, ReflInv):
            pairs = [(("R", "L"), CONTEXT + ("L", "L", "L")), (("R", "R"), CONTEXT + ("L", "L", "R"))]
            return CopyCat(game, pairs, name)
        raise GameShapeError(f"无法实现 {term.__class__.__name__}")

    def __repr__(self) -> str:
        return f"Model(entries={len(self.registry)}, bounds={self.bounds.model_dump()})"

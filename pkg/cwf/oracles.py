"""初等策略项用到的策略：换框、点化、编码与 R^N 的按需展开。"""

import logging
from typing import TYPE_CHECKING, Dict, List, Optional

from arena.moves import QUESTION, RankedMove
from arena.position import EMPTY, Position
from core.errors import DivergenceError, InvariantBreach
from engine.combinators import lift, project
from engine.oracle import ResponseStatus, StrategyOracle
from games.game import Extension, Game

from .games import Env, flat_value
from .judgements import is_flat_type, normalize_ty, type_mentions
from .syntax import N, Code, Extension as Ext, Identity, Numeral, RNat, SubstTm, Term

if TYPE_CHECKING:
    from .model import Model

logger = logging.getLogger(__name__)

CONTEXT = ("L", "!")


def component_prefix(k: int) -> tuple:
    """态射游戏左侧第 k 个（从新到旧）分量的标记前缀"""
    return CONTEXT + ("L",) * k + ("R",)


def ask_component(k: int) -> Extension:
    return QUESTION.tagged(*component_prefix(k)), 0


def _reraise(oracle: StrategyOracle, s: Position, outcome) -> None:
    if outcome.status is ResponseStatus.DIVERGED:
        raise DivergenceError(outcome.detail or f"{oracle.name} 在 {s} 上发散", outcome.steps)


class Reframed(StrategyOracle):
    """以另一个游戏为框架转发内部策略的回应"""

    def __init__(self, inner: StrategyOracle, game: Game, name: str = ""):
        super().__init__(game, name or inner.name)
        self.inner = inner

    def next_move(self, s: Position) -> Optional[Extension]:
        outcome = self.inner.respond(s, validate=False)
        _reraise(self.inner, s, outcome)
        return outcome.extension


class PointedOracle(StrategyOracle):
    """策略在环境处的点化：对上下文平坦分量的询问由 env 中的回答代答

    询问落到 env 未知的分量或非平坦分量时卡住，视为无回应。
    """

    def __init__(self, inner: StrategyOracle, env: Env, game: Game, budget: int = 4096):
        super().__init__(game, f"{inner.name}@env")
        self.inner = inner
        self.env = env
        self.budget = budget

    def _lookup(self, move: RankedMove) -> Optional[RankedMove]:
        if not move.has_prefix(CONTEXT):
            return None
        rest = move.tag_path[len(CONTEXT):]
        k = len(rest) - 1
        if k < 0 or rest != ("L",) * k + ("R",) or k >= len(self.env):
            return None
        if self.env[k] is None or flat_value(move) is not None:
            return None
        return self.env[k].tagged(*move.tag_path)

    def _drive(self, u: Position) -> tuple:
        for _ in range(self.budget):
            outcome = self.inner.respond(u, validate=False)
            _reraise(self.inner, u, outcome)
            if not outcome.responded:
                return u, None
            move, j = outcome.extension
            if move.head_tag == "R":
                return u, (move, j)
            answer = self._lookup(move)
            if answer is None:
                return u, None
            u = u.extend(move, j)
            u = u.extend(answer, len(u) - 1)
        raise DivergenceError(f"{self.name} 的环境应答超过 {self.budget} 步", self.budget)

    def next_move(self, s: Position) -> Optional[Extension]:
        u = EMPTY
        external: Dict[int, int] = {}
        for i in range(0, len(s), 2):
            j = s.justifiers[i]
            u = u.extend(s.moves[i].tagged("R"), None if j is None else external[j])
            external[len(u) - 1] = i
            u, reply = self._drive(u)
            if reply is None:
                return None
            move, inner_j = reply
            if inner_j is not None and inner_j not in external:
                raise InvariantBreach(f"{self.inner.name} 的外部走子 {move} 指向了环境中的出现")
            mapped = None if inner_j is None else external[inner_j]
            if i + 1 == len(s):
                return move.untagged(), mapped
            if (move.untagged(), mapped) != (s.moves[i + 1], s.justifiers[i + 1]):
                return None
            u = u.extend(move, inner_j)
            external[len(u) - 1] = i + 1
        return None


class CodeOracle(StrategyOracle):
    """A̲ : U_k：依次（从旧到新）询问 A 提到的平坦分量，再以纤维的名字回答"""

    def __init__(self, model: "Model", term: Code, game: Game):
        super().__init__(game, str(term))
        self.model = model
        self.term = term
        ctx = term.ctx
        self.queried: List[int] = sorted((k for k in type_mentions(normalize_ty(term.ty)) if k < len(ctx)),
                                         reverse=True)
        self.opaque = [k for k in self.queried if not is_flat_type(ctx[-1 - k])]
        if self.opaque:
            self.logger.warning(f"{term} 依赖非平坦分量 {self.opaque}，编码保持沉默")

    def next_move(self, s: Position) -> Optional[Extension]:
        if self.opaque:
            return None
        asked = (len(s) - 1) // 2
        if asked < len(self.queried):
            return ask_component(self.queried[asked])
        if asked > len(self.queried):
            return None
        env: List[Optional[RankedMove]] = [None] * len(self.term.ctx)
        for n, k in enumerate(self.queried):
            answer = s.moves[2 + 2 * n]
            if not answer.has_prefix(component_prefix(k)):
                return None
            env[k] = flat_value(answer)
        name = self.model.code_name(self.term.ctx, self.term.ty, self.term.level, tuple(env))
        return None if name is None else (name.tagged("R"), 0)


class UnfoldingOracle(StrategyOracle):
    """R^N(C, c_z, c_s)：先询问最新的 N 分量得到 k，再按第 k 次展开的策略进行"""

    MAPPINGS = [(CONTEXT + ("L",), CONTEXT), (("R",), ("R",))]

    def __init__(self, model: "Model", term: RNat, game: Game):
        super().__init__(game, str(term))
        self.model = model
        self.term = term
        self.base = term.ctx[:-1]
        self._stages: Dict[int, Term] = {}

    def stage(self, k: int) -> Term:
        """R_0 = c_z，R_{k+1} = c_s{⟨⟨id, k⟩, R_k⟩}"""
        cached = self._stages.get(k)
        if cached is not None:
            return cached
        if k == 0:
            term = self.term.zero_case
        else:
            at = Ext(Identity(self.base), Numeral(self.base, k - 1), N)
            term = SubstTm(self.term.succ_case, Ext(at, self.stage(k - 1), self.term.motive))
        self._stages[k] = term
        return term

    def next_move(self, s: Position) -> Optional[Extension]:
        budget = self.term.budget
        if budget <= 0:
            raise DivergenceError(f"{self.name} 的展开预算为 0", 0)
        if len(s) == 1:
            return ask_component(0)
        if len(s) < 3:
            return None
        answer = s.moves[2]
        if not answer.has_prefix(component_prefix(0)) or not isinstance(answer.ident, int):
            return None
        k = answer.ident
        if k >= budget:
            raise DivergenceError(f"{self.name} 需要 {k + 1} 次展开，超过预算 {budget}", k)
        inner, kept = project(s, self.MAPPINGS)
        oracle = self.model.realize(self.stage(k))
        outcome = oracle.respond(inner, validate=False)
        _reraise(oracle, inner, outcome)
        if not outcome.responded:
            return None
        return lift(outcome.extension, self.MAPPINGS, kept)


def answer_at(value: RankedMove):
    """常值策略：对初始问题立即回答 value"""
    reply = value.tagged("R")

    def respond(s: Position) -> Optional[Extension]:
        return (reply, 0) if len(s) == 1 else None

    return respond


def successor_reply(s: Position) -> Optional[Extension]:
    if len(s) == 1:
        return ask_component(0)
    if len(s) == 3 and s.last.has_prefix(component_prefix(0)) and isinstance(s.last.ident, int):
        return RankedMove(s.last.ident + 1).tagged("R"), 0
    return None


def empty_reply(s: Position) -> Optional[Extension]:
    return ask_component(0) if len(s) == 1 else None

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from arena.moves import CHECK, QUESTION, RankedMove
from arena.position import Position
from core.errors import DecodeError, GameShapeError, LudicError, RegistryError
from core.ludic_context import LudicContext
from core.ludic_message import Trace, TraceEvent
from cwf.model import EXPLORE_BOUND
from cwf.oracles import PointedOracle, Reframed
from cwf.syntax import Term
from engine.checks import EquivalenceResult, equiv_at_depth
from engine.composite import Composite
from engine.oracle import ResponseStatus, StrategyOracle
from games.game import Game
from mltt.declarations import CheckReport, check_source
from mltt.elaborate import Elaborator
from mltt.equality import judgmental_equal, normalize
from mltt.parser import Definition
from mltt.printer import show
from mltt.syntax import NatTy, Star, UnitTy, Universe, numeral_value
from mltt.typecheck import Derivation, check_definition

from .play_session import PlaySession

PathLike = Union[str, Path]


@dataclass
class Elaborated:
    """检查并解释过的定义"""
    definition: Definition
    derivation: Derivation
    term: Term
    oracle: StrategyOracle
    game: Game
    pointed: bool

    @property
    def closed(self) -> bool:
        return not self.definition.telescope


@dataclass
class EvalResult:
    name: str
    kind: str
    status: ResponseStatus
    value: Optional[str] = None
    move: Optional[RankedMove] = None
    normal_form: Optional[str] = None
    agrees: Optional[bool] = None
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "status": self.status.value,
            "value": self.value,
            "move": None if self.move is None else self.move.to_dict(),
            "normal_form": self.normal_form,
            "agrees_with_normalization": self.agrees,
            **self.detail,
        }


def find_composite(oracle: StrategyOracle) -> Optional[Composite]:
    """剥掉转发层，找到最外层的复合策略"""
    while True:
        if isinstance(oracle, Composite):
            return oracle
        if isinstance(oracle, (Reframed, PointedOracle)):
            oracle = oracle.inner
            continue
        return None


class InterpreterService:
    """声明文件 → 解析 → 检查 → 解释 → 交互 的流水线"""

    def __init__(self, context: LudicContext):
        self.context = context
        self.logger = logging.getLogger(self.__class__.__name__)

    @property
    def model(self):
        return self.context.model

    def elaborator(self) -> Elaborator:
        return Elaborator(self.context.bounds.unfold)

    # ---- check ----

    def check(self, path: PathLike) -> CheckReport:
        source = self.context.load(path)
        report = check_source(source)
        self.logger.info(f"检查 {path}: {len(report.results)} 个定义，{len(report.failures())} 个失败")
        return report

    def checked(self, path: PathLike, name: str) -> Tuple[Definition, Derivation]:
        definition = self.context.definition(path, name)
        return definition, check_definition(definition)

    # ---- interp ----

    def elaborate(self, path: PathLike, name: str) -> Elaborated:
        definition, derivation = self.checked(path, name)
        term = self.elaborator().term(definition.telescope, definition.term, definition.ty)
        if definition.telescope:
            oracle = self.model.realize(term)
            return Elaborated(definition, derivation, term, oracle, oracle.game, False)
        pointed = self.model.pointed(term, ())
        return Elaborated(definition, derivation, term, pointed, pointed.game, True)

    def interp(self, path: PathLike, name: str) -> Dict[str, Any]:
        """打印策略项、依赖游戏项与类型游戏的构造号"""
        definition, _ = self.checked(path, name)
        elaborator = self.elaborator()
        tel = definition.telescope
        context = elaborator.context(tel)
        ty = elaborator.type(tel, definition.ty)
        term = elaborator.term(tel, definition.term, definition.ty)
        result: Dict[str, Any] = {
            "name": name,
            "syntax": f"{show(definition.term, tuple(n for n, _ in tel))} : {definition.ty}",
            "context": [str(c) for c in context],
            "dependent_game": str(ty),
            "strategy": str(term),
            "ast": term.to_dict(),
            "construction_number": None,
            "rank": None,
        }
        try:
            if tel:
                entry = self.context.registry.register(self.model.morphism_game(term),
                                                       description=f"{name} 的态射游戏")
            else:
                entry = self.model.register(self.model.fiber((), ty, ()), (), ty, ())
        except (DecodeError, RegistryError, GameShapeError) as e:
            self.logger.warning(f"{name} 的类型游戏无法登记: {e}")
            return result
        result["construction_number"] = entry.number
        result["rank"] = entry.rank
        return result

    # ---- eval ----

    def evaluate(self, path: PathLike, name: str) -> EvalResult:
        """闭项、类型为 N、𝟙 或宇宙：Opponent 问 q，读出 Player 的回答"""
        definition = self.context.definition(path, name)
        if definition.telescope:
            raise LudicError(f"{name} 是上下文 {definition.context.name} 中的开放项，请使用 play")
        ty = normalize(definition.ty)
        if isinstance(ty, NatTy):
            kind = "N"
        elif isinstance(ty, UnitTy):
            kind = "Unit"
        elif isinstance(ty, Universe):
            kind = f"U{ty.level}"
        else:
            raise LudicError(f"{name} 的类型 {ty} 不是 N、Unit 或宇宙，请使用 play")

        elaborated = self.elaborate(path, name)
        outcome = elaborated.oracle.respond(Position.of((QUESTION, None)), validate=False)
        result = EvalResult(name, kind, outcome.status, detail={"steps": outcome.steps})
        if not outcome.responded:
            result.detail["reason"] = outcome.detail
            return result
        move = RankedMove(outcome.move.ident, outcome.move.rank)
        result.move = move
        nf = normalize(definition.term)
        result.normal_form = str(nf)
        if kind == "N":
            result.value = str(move.ident)
            result.agrees = numeral_value(nf) == move.ident
        elif kind == "Unit":
            result.value = "★" if move == CHECK else str(move)
            result.agrees = isinstance(nf, Star) and move == CHECK
        else:
            entry = self.context.registry.decode(move)
            if entry is None:
                raise LudicError(f"{name} 的回答 {move} 不是已登记游戏的名字")
            result.value = f"♯ = {entry.number}"
            result.detail.update({"construction_number": entry.number, "rank": entry.rank,
                                  "description": entry.description})
        self.logger.info(f"eval {name} = {result.value}")
        return result

    # ---- equiv ----

    def equiv(self, path: PathLike, left_name: str, right_name: str,
              depth: Optional[int] = None) -> EquivalenceResult:
        left = self.elaborate(path, left_name)
        right = self.elaborate(path, right_name)
        if left.definition.telescope != right.definition.telescope:
            raise LudicError(f"{left_name} 与 {right_name} 不在同一个上下文中")
        if not judgmental_equal(left.definition.ty, right.definition.ty, left.definition.telescope):
            raise LudicError(f"{left_name} : {left.definition.ty} 与 {right_name} : {right.definition.ty} 的类型不同")
        depth = depth or self.context.bounds.depth
        return equiv_at_depth(left.oracle, right.oracle, depth, EXPLORE_BOUND, game=left.game)

    # ---- play / trace ----

    def play(self, path: PathLike, name: str) -> PlaySession:
        elaborated = self.elaborate(path, name)
        return PlaySession(elaborated.oracle, elaborated.game, self.context.bounds.alphabet, name)

    def trace(self, path: PathLike, name: str, script: Sequence[str], hidden: bool = False) -> Trace:
        """按 Opponent 脚本回放；hidden 时给出最外层复合的内部交互"""
        elaborated = self.elaborate(path, name)
        session = PlaySession(elaborated.oracle, elaborated.game, self.context.bounds.alphabet, name)
        for k, text in enumerate(script, 1):
            try:
                step = session.play(text)
            except LudicError as e:
                raise LudicError(f"脚本第 {k} 步 {text!r} 不合法: {e}") from e
            if step.outcome.status is ResponseStatus.DIVERGED:
                self.logger.warning(f"脚本第 {k} 步后 Player 发散")
                break
            if not step.outcome.responded and k < len(script):
                raise LudicError(f"脚本第 {k} 步之后 Player 没有回应，无法继续第 {k + 1} 步")

        s = session.position
        composite = find_composite(elaborated.oracle) if hidden else None
        if composite is not None:
            inner = s.tagged("R") if elaborated.pointed else s
            trace = composite.interaction(inner)
            if trace.events:
                return trace
            self.logger.warning(f"{name} 的内部交互无法回放，只给出外部走子")
        elif hidden:
            self.logger.info(f"{name} 不是复合策略，没有隐藏走子")
        return external_trace(s)


def external_trace(s: Position) -> Trace:
    events: List[TraceEvent] = []
    for move, j in s:
        events.append(TraceEvent("A" if move.head_tag == "L" else "C", move.to_dict(), j))
    return Trace(events)

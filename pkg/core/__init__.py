"""核心组件模块。

包含命令层的核心组件：
- LudicError 及其子类: 统一的异常层次
- LudicMessage / LudicResponse / TraceEvent: 消息、响应与交互轨迹
- LudicCommand / CommandRegistry: 命令基类与注册表
- core.ludic_context.LudicContext: 会话（已加载的声明、注册表与界限）
- core.ludic_agent.LudicAgent: 会话驱动的基类

后两者依赖模型层，不在包级别导入，避免与底层包的循环导入。
"""

from .errors import (ArenaError, DecodeError, DivergenceError, ElaborationError, GameShapeError,
                     InconsistentStrategiesError, InvariantBreach, LudicError, ParseError, RegistryError,
                     StrategyError, TypeCheckError)
from .ludic_command import CommandRegistry, LudicCommand
from .ludic_message import LudicMessage, LudicMessageType, LudicResponse, LudicStatus, Trace, TraceEvent

__all__ = [
    "ArenaError", "DecodeError", "DivergenceError", "ElaborationError", "GameShapeError",
    "InconsistentStrategiesError", "InvariantBreach", "LudicError", "ParseError", "RegistryError",
    "StrategyError", "TypeCheckError",
    "CommandRegistry", "LudicCommand",
    "LudicMessage", "LudicMessageType", "LudicResponse", "LudicStatus", "Trace", "TraceEvent",
]

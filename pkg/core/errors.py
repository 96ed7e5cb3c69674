"""项目统一的异常层次。

纯函数库操作抛出这里定义的异常；命令层再把它们转换为 LudicResponse。
"""

from typing import Optional


class LudicError(Exception):
    """所有领域异常的基类"""


class ArenaError(LudicError):
    """竞技场或位置结构不合法（例如线程索引不是初始出现）"""


class GameShapeError(LudicError):
    """游戏形状不匹配，例如组合时中间游戏 B 不一致"""


class StrategyError(LudicError):
    """策略不满足 S1/S2，或在非法位置上被询问"""


class InconsistentStrategiesError(LudicError):
    """策略集合不相容，clause 记录违反的条款编号（1、2 或 3）"""

    def __init__(self, clause: int, message: str):
        super().__init__(f"条款 {clause}: {message}")
        self.clause = clause


class RegistryError(LudicError):
    """注册表中找不到游戏或构造号"""


class DecodeError(LudicError):
    """El 无法把回答解码为已注册游戏的名字"""


class ParseError(LudicError):
    """带位置的语法错误"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.bare_message = message


class TypeCheckError(LudicError):
    """类型检查失败，rule 为失败前提所属的规则名"""

    def __init__(self, rule: str, message: str):
        super().__init__(f"[{rule}] {message}")
        self.rule = rule


class ElaborationError(LudicError):
    """推导无法解释为游戏或策略"""


class DivergenceError(LudicError):
    """交互超出步数或展开预算"""

    def __init__(self, message: str, steps: Optional[int] = None):
        super().__init__(message)
        self.steps = steps


class InvariantBreach(LudicError):
    """内部不变量被破坏（例如引擎给出了非法走子）"""

"""命令模块。

每个命令行子命令对应一个 LudicCommand：
- CheckCommand / InterpCommand / EvalCommand: 检查、解释与求值
- PlayCommand / TraceCommand: 对弈与脚本回放
- EquivCommand: 行为等价
- LawsCommand: 律检查套件
"""

from .check_command import CheckCommand
from .equiv_command import EquivCommand
from .eval_command import EvalCommand
from .interp_command import InterpCommand
from .laws_command import LawsCommand
from .play_command import PlayCommand
from .trace_command import TraceCommand

ALL_COMMANDS = (CheckCommand, InterpCommand, EvalCommand, PlayCommand, EquivCommand, TraceCommand, LawsCommand)

__all__ = [
    "ALL_COMMANDS", "CheckCommand", "EquivCommand", "EvalCommand", "InterpCommand", "LawsCommand", "PlayCommand",
    "TraceCommand",
]

"""服务模块。

包含命令背后的服务组件：
- InterpreterService: 声明文件 → 检查 → 解释 → 交互的流水线
- PlaySession: 以用户为 Opponent 的对弈状态
- LawService: 按范围运行律检查套件
"""

from .interpreter_service import EvalResult, InterpreterService
from .law_service import LawService
from .play_session import PlaySession, parse_move

__all__ = ["EvalResult", "InterpreterService", "LawService", "PlaySession", "parse_move"]

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional
import logging

from .ludic_command import CommandRegistry, LudicCommand
from .ludic_context import LudicContext
from .ludic_message import LudicMessage, LudicMessageType, LudicResponse


class LudicAgent(ABC):
    """会话驱动的基类：持有上下文与命令注册表，记录每次命令与结果"""

    def __init__(self, agent_name: str, context: Optional[LudicContext] = None):
        """
        :param agent_name: 智能体名称，也用作日志名的后缀
        :param context: 会话上下文；为 None 时新建一个缺省界限的上下文
        """
        self.agent_name = agent_name
        self.context = context if context is not None else LudicContext()
        self.command_registry = CommandRegistry()
        self.logger = logging.getLogger(f"LudicAgent.{self.agent_name}")
        self._initialize_agent()

    @abstractmethod
    def _initialize_agent(self) -> None:
        """注册命令"""

    def register_command(self, command: LudicCommand) -> None:
        self.command_registry.register_command(command)
        self.logger.debug(f"命令 {command.name} 已注册到 {self.agent_name}")

    def add_message(self, message_type: LudicMessageType, content: Any,
                    metadata: Optional[Dict[str, Any]] = None) -> None:
        """添加消息到会话
        - message_type: LudicMessageType - OPPONENT 或 COMMAND
        - content: Any - 命令名或命令结果的文字
        - metadata: Optional[Dict[str, Any]] - 参数或状态
        - 输出 ： None
        """
        self.context.add_message(LudicMessage(message_type, content, metadata))

    def execute(self, command: str, parameters: Dict[str, Any]) -> LudicResponse:
        """执行一条命令
        功能 ：按名字查找命令并执行
        输入参数 ：command - 命令名；parameters - 命令参数
        输出 ： LudicResponse - 状态、消息与数据，状态对应退出码
        作用 ：命令本身记为 OPPONENT 消息，结果记为 COMMAND 消息
        """
        self.add_message(LudicMessageType.OPPONENT, command, {"parameters": _printable(parameters)})
        response = self.command_registry.execute(command, self.context, parameters)
        self.add_message(LudicMessageType.COMMAND, response.message, {"status": response.status.value})
        if not response.ok:
            self.logger.info(f"命令 {command} 结束，状态 {response.status.value}")
        return response

    def get_agent_info(self) -> Dict[str, Any]:
        return {
            "name": self.agent_name,
            "commands": self.command_registry.list_commands(),
            "message_count": len(self.context.messages),
            "bounds": self.context.bounds.model_dump(),
        }

    def reset_context(self) -> None:
        """保留界限与注册表文件，清空已载入的声明与消息"""
        self.context = LudicContext(self.context.bounds, self.context.registry_path, self.context.session_id)
        self.logger.info(f"{self.agent_name} 上下文已重置")

    def __str__(self) -> str:
        return f"LudicAgent({self.agent_name})"

    def __repr__(self) -> str:
        return f"LudicAgent(name='{self.agent_name}', commands={len(self.command_registry.list_commands())})"


def _printable(parameters: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v if isinstance(v, (str, int, float, bool, list, type(None))) else str(v)
            for k, v in parameters.items()}

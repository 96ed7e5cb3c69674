from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Dict, List
import logging

from .errors import DivergenceError, InvariantBreach, LudicError
from .ludic_message import LudicResponse

if TYPE_CHECKING:
    from .ludic_context import LudicContext


class LudicCommand(ABC):
    """命令的抽象基类"""

    def __init__(self, name: str, description: str, required_params: List[str], parameters_schema: Dict[str, Any]):
        self._name = name
        self._description = description
        self.required_params = required_params
        self.parameters_schema = parameters_schema
        self.logger = logging.getLogger(self.__class__.__name__)

    @property
    def name(self) -> str:
        return self._name

    @property
    def description(self) -> str:
        return self._description

    def get_schema(self) -> Dict[str, Any]:
        return {
            "name": self._name,
            "description": self._description,
            "parameters": self.parameters_schema,
        }

    @abstractmethod
    def run(self, context: "LudicContext", parameters: Dict[str, Any]) -> LudicResponse:
        """执行命令的核心逻辑"""


class CommandRegistry:
    """命令注册表：查找、校验参数并执行，异常一律转换为响应"""

    def __init__(self):
        self._commands: Dict[str, LudicCommand] = {}
        self.logger = logging.getLogger(self.__class__.__name__)

    def register_command(self, command: LudicCommand) -> None:
        if command.name in self._commands:
            raise ValueError(f"命令 '{command.name}' 已被注册。")
        self._commands[command.name] = command

    def get(self, name: str) -> LudicCommand:
        return self._commands[name]

    def __contains__(self, name: str) -> bool:
        return name in self._commands

    def execute(self, name: str, context: "LudicContext", parameters: Dict[str, Any]) -> LudicResponse:
        if name not in self._commands:
            return LudicResponse.error(f"命令 '{name}' 未找到，可用命令: {', '.join(self.list_commands())}")

        command = self._commands[name]
        missing = [p for p in command.required_params if parameters.get(p) is None]
        if missing:
            return LudicResponse.error(f"执行命令 '{name}' 缺少必要参数: {', '.join(missing)}")

        try:
            return command.run(context, parameters)
        except DivergenceError as e:
            return LudicResponse.diverged(f"{name}: 交互发散: {e}", data={"steps": e.steps})
        except InvariantBreach as e:
            self.logger.error(f"执行命令 '{name}' 时内部不变量被破坏: {e}", exc_info=True)
            return LudicResponse.breach(f"{name}: 内部不变量被破坏: {e}")
        except LudicError as e:
            return LudicResponse.error(f"{name}: {e}", data=getattr(e, "data", None))
        except Exception as e:
            self.logger.error(f"执行命令 '{name}' 时发生意外错误: {e}", exc_info=True)
            return LudicResponse.breach(f"{name}: 意外错误: {e}")

    def list_commands(self) -> List[str]:
        return list(self._commands.keys())

    def get_schemas(self) -> List[Dict[str, Any]]:
        return [c.get_schema() for c in self._commands.values()]

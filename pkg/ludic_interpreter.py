from typing import Any, Dict, Optional

from core.ludic_agent import LudicAgent
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from tools import ALL_COMMANDS


class LudicInterpreter(LudicAgent):
    """
    功能 : 命令行背后的解释器，持有一个会话
    初始化内容 :
        - check / interp / eval / play / equiv / trace / laws 七个命令
    每条命令执行后，若会话指定了注册表文件，就把新登记的游戏写回文件，
    使构造号在多次运行之间保持稳定。
    """

    def __init__(self, context: Optional[LudicContext] = None):
        super().__init__("LudicInterpreter", context)

    def _initialize_agent(self) -> None:
        for command in ALL_COMMANDS:
            self.register_command(command())
        self.logger.info(f"LudicInterpreter 初始化完成，共注册 {len(ALL_COMMANDS)} 个命令")

    def execute(self, command: str, parameters: Dict[str, Any]) -> LudicResponse:
        response = super().execute(command, parameters)
        try:
            self.context.save_registry()
        except OSError as e:
            self.logger.error(f"注册表写回失败: {e}", exc_info=True)
            return LudicResponse.error(f"{response.message}\n注册表写回失败: {e}", data=response.data)
        return response

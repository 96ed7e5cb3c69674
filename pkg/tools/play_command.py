from typing import Any, Dict

from core.ludic_command import LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from services.interpreter_service import InterpreterService


class PlayCommand(LudicCommand):
    """建立对弈会话；循环本身由命令行驱动"""

    def __init__(self):
        super().__init__(
            name="play",
            description="以用户为 Opponent 与定义的策略对弈。",
            required_params=["file", "name"],
            parameters_schema={
                "type": "object",
                "properties": {
                    "file": {"type": "string", "description": ".mltt 声明文件路径"},
                    "name": {"type": "string", "description": "定义名"},
                },
                "required": ["file", "name"],
            },
        )

    def run(self, context: LudicContext, parameters: Dict[str, Any]) -> LudicResponse:
        session = InterpreterService(context).play(parameters["file"], parameters["name"])
        context.set_session_data("play", session)
        return LudicResponse.success(f"开始与 {session.name} 对弈", data=session)

from typing import Any, Dict

from core.ludic_command import LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from services.interpreter_service import InterpreterService


class TraceCommand(LudicCommand):
    """按 Opponent 脚本回放，输出 JSON 轨迹"""

    def __init__(self):
        super().__init__(
            name="trace",
            description="按给定的 O 走子脚本回放定义的策略，输出 JSON 轨迹，可包含内部交互走子。",
            required_params=["file", "name", "script"],
            parameters_schema={
                "type": "object",
                "properties": {
                    "file": {"type": "string", "description": ".mltt 声明文件路径"},
                    "name": {"type": "string", "description": "定义名"},
                    "script": {"type": "array", "items": {"type": "string"},
                               "description": "O 走子，每个形如 ident [@ 指针]"},
                    "hidden": {"type": "boolean", "description": "是否包含隐藏的内部走子"},
                },
                "required": ["file", "name", "script"],
            },
        )

    def run(self, context: LudicContext, parameters: Dict[str, Any]) -> LudicResponse:
        hidden = bool(parameters.get("hidden", False))
        trace = InterpreterService(context).trace(parameters["file"], parameters["name"],
                                                  parameters["script"], hidden)
        return LudicResponse.success(trace.to_json(include_hidden=hidden),
                                     data=[e.to_dict() for e in trace.events])

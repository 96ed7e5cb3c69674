from typing import Any, Dict

from core.ludic_command import LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from services.interpreter_service import InterpreterService


class EquivCommand(LudicCommand):
    """深度有界的行为等价"""

    def __init__(self):
        super().__init__(
            name="equiv",
            description="比较两个同类型定义的策略，直到给定深度；不同时给出最短见证。",
            required_params=["file", "left", "right"],
            parameters_schema={
                "type": "object",
                "properties": {
                    "file": {"type": "string", "description": ".mltt 声明文件路径"},
                    "left": {"type": "string", "description": "第一个定义名"},
                    "right": {"type": "string", "description": "第二个定义名"},
                    "depth": {"type": "integer", "description": "位置长度上限，缺省为会话界限"},
                },
                "required": ["file", "left", "right"],
            },
        )

    def run(self, context: LudicContext, parameters: Dict[str, Any]) -> LudicResponse:
        left, right = parameters["left"], parameters["right"]
        result = InterpreterService(context).equiv(parameters["file"], left, right, parameters.get("depth"))
        if result.equivalent:
            return LudicResponse.success(f"{left} ≃ {right}（检查了 {result.checked} 个位置）", data=result.to_dict())
        return LudicResponse.success(
            f"{left} ≄ {right}，见证 {result.witness}: {result.left} / {result.right}", data=result.to_dict())

from typing import Any, Dict

from core.ludic_command import LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from services.interpreter_service import InterpreterService


class InterpCommand(LudicCommand):
    """打印定义的策略项、依赖游戏项与构造号"""

    def __init__(self):
        super().__init__(
            name="interp",
            description="把定义解释为初等策略项与依赖游戏项，并给出类型游戏的构造号。",
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
        result = InterpreterService(context).interp(parameters["file"], parameters["name"])
        number = result["construction_number"]
        numbered = "无" if number is None else f"♯ = {number}（秩 {result['rank']}）"
        lines = [
            result["syntax"],
            f"依赖游戏: {result['dependent_game']}",
            f"策略: {result['strategy']}",
            f"构造号: {numbered}",
        ]
        return LudicResponse.success("\n".join(lines), data=result)

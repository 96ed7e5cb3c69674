from typing import Any, Dict

from core.ludic_command import LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from engine.oracle import ResponseStatus
from services.interpreter_service import InterpreterService


class EvalCommand(LudicCommand):
    """Opponent 问 q，读出闭项的值"""

    def __init__(self):
        super().__init__(
            name="eval",
            description="对类型为 N、Unit 或宇宙的闭项走出开局问题 q，打印 Player 的回答。",
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
        name = parameters["name"]
        result = InterpreterService(context).evaluate(parameters["file"], name)
        if result.status is ResponseStatus.DIVERGED:
            return LudicResponse.diverged(f"{name}: 交互在 {result.detail.get('steps')} 步后发散",
                                          data=result.to_dict())
        if result.status is ResponseStatus.NO_RESPONSE:
            return LudicResponse.error(f"{name}: Player 对 q 没有回应", data=result.to_dict())
        message = f"{name} = {result.value}"
        if "description" in result.detail:
            message += f"（{result.detail['description']}）"
        if result.agrees is False:
            self.logger.error(f"{name} 的交互结果 {result.value} 与正规形 {result.normal_form} 不一致")
            return LudicResponse.breach(f"{message}，但正规形为 {result.normal_form}", data=result.to_dict())
        return LudicResponse.success(message, data=result.to_dict())

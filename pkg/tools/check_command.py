from typing import Any, Dict

from core.ludic_command import LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from services.interpreter_service import InterpreterService


class CheckCommand(LudicCommand):
    """解析并检查声明文件中的全部定义"""

    def __init__(self):
        super().__init__(
            name="check",
            description="解析并类型检查 .mltt 文件，报告每个定义的结果与失败的规则。",
            required_params=["file"],
            parameters_schema={
                "type": "object",
                "properties": {
                    "file": {"type": "string", "description": ".mltt 声明文件路径"},
                },
                "required": ["file"],
            },
        )

    def run(self, context: LudicContext, parameters: Dict[str, Any]) -> LudicResponse:
        report = InterpreterService(context).check(parameters["file"])
        if report.ok:
            return LudicResponse.success(report.summary(), data=report.to_dict())
        return LudicResponse.error(report.summary(), data=report.to_dict())

from typing import Any, Dict

from core.ludic_command import LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicResponse
from services.law_service import LawService


class LawsCommand(LudicCommand):
    """运行律检查套件"""

    def __init__(self):
        super().__init__(
            name="laws",
            description="运行范畴族等式、类型构造律、Îd 可靠性、内涵性、引擎与游戏的检查。",
            required_params=[],
            parameters_schema={
                "type": "object",
                "properties": {
                    "scope": {"type": "string",
                              "description": "cwf、formers、id、intensionality、engine、games、paradox 或 all"},
                },
                "required": [],
            },
        )

    def run(self, context: LudicContext, parameters: Dict[str, Any]) -> LudicResponse:
        reports = LawService(context).run(parameters.get("scope") or "all")
        lines = []
        for report in reports:
            lines.append(("✓ " if report.holds else "✗ ") + report.summary())
            for failure in report.failures:
                witness = "" if failure.witness is None else f"，见证 {failure.witness}"
                lines.append(f"    {failure.law} @ {failure.instance}: {failure.detail}{witness}")
        data = [r.to_dict() for r in reports]
        if all(r.holds for r in reports):
            return LudicResponse.success("\n".join(lines), data=data)
        return LudicResponse.error("\n".join(lines), data=data)

"""声明文件的载入与检查"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

from core.errors import LudicError, ParseError, TypeCheckError

from .parser import Definition, SourceFile, parse_file
from .prelude import prelude, prelude_names
from .typecheck import Derivation, check_definition

logger = logging.getLogger(__name__)


@dataclass
class CheckedDefinition:
    definition: Definition
    derivation: Optional[Derivation] = None
    error: Optional[TypeCheckError] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> Dict:
        data = {"name": self.definition.name, "ok": self.ok, "type": str(self.definition.ty),
                "line": self.definition.location.line}
        if self.error is not None:
            data["rule"] = self.error.rule
            data["error"] = str(self.error)
        return data


@dataclass
class CheckReport:
    source: SourceFile
    results: Dict[str, CheckedDefinition] = field(default_factory=dict)

    @property
    def parse_errors(self) -> List[ParseError]:
        return self.source.errors

    @property
    def ok(self) -> bool:
        return not self.parse_errors and all(r.ok for r in self.results.values())

    def failures(self) -> List[CheckedDefinition]:
        return [r for r in self.results.values() if not r.ok]

    def to_dict(self) -> Dict:
        return {
            "ok": self.ok,
            "parse_errors": [{"line": e.line, "column": e.column, "message": e.bare_message}
                             for e in self.parse_errors],
            "definitions": [r.to_dict() for r in self.results.values()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    def summary(self) -> str:
        lines = [f"{e.line}:{e.column}: 语法错误: {e.bare_message}" for e in self.parse_errors]
        for result in self.results.values():
            if result.ok:
                lines.append(f"✓ {result.definition.name} : {result.definition.ty}")
            else:
                lines.append(f"✗ {result.definition.name}: {result.error}")
        passed = sum(1 for r in self.results.values() if r.ok)
        lines.append(f"{passed}/{len(self.results)} 个定义通过检查")
        return "\n".join(lines)


def load_text(text: str, with_prelude: bool = True) -> SourceFile:
    return parse_file(text, prelude() if with_prelude else None)


def load_file(path: Union[str, Path], with_prelude: bool = True) -> SourceFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise LudicError(f"无法读取 {path}: {e}") from e
    logger.info(f"载入声明文件 {path}")
    return load_text(text, with_prelude)


def check_source(source: SourceFile, include_prelude: bool = False) -> CheckReport:
    """逐个检查定义；一个定义失败不影响其余定义"""
    report = CheckReport(source)
    hidden = frozenset() if include_prelude else prelude_names()
    for name, definition in source.definitions.items():
        if name in hidden:
            continue
        try:
            report.results[name] = CheckedDefinition(definition, check_definition(definition))
        except TypeCheckError as e:
            logger.debug(f"定义 {name} 未通过检查: {e}")
            report.results[name] = CheckedDefinition(definition, error=e)
    return report

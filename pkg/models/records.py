"""JSON 记录：位置、轨迹事件、有限游戏与注册表文件。

领域对象各自提供 to_dict；这里的 pydantic 模型负责读入时的校验。
"""

import json
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator


class MoveRecord(BaseModel):
    ident: Union[int, str]
    rank: int = Field(default=0, ge=0)
    tag_path: List[str] = Field(default_factory=list)


class OccurrenceRecord(MoveRecord):
    justifier: Optional[int] = None


class PositionRecord(BaseModel):
    """位置的 JSON 形式：出现组成的数组，指针只能指向更早的出现"""
    occurrences: List[OccurrenceRecord] = Field(default_factory=list)

    @field_validator("occurrences")
    @classmethod
    def _pointers_point_back(cls, occurrences: List[OccurrenceRecord]) -> List[OccurrenceRecord]:
        for i, occ in enumerate(occurrences):
            if occ.justifier is not None and not 0 <= occ.justifier < i:
                raise ValueError(f"出现 {i} 的指针 {occ.justifier} 不指向更早的出现")
        return occurrences

    @classmethod
    def parse(cls, data: Union[str, List[Dict[str, Any]]]) -> "PositionRecord":
        items = json.loads(data) if isinstance(data, str) else data
        return cls(occurrences=items)

    def to_list(self) -> List[Dict[str, Any]]:
        return [occ.model_dump() for occ in self.occurrences]


class TraceEventRecord(BaseModel):
    component: str
    move: MoveRecord
    justifier: Optional[int] = None
    hidden: bool = False

    @field_validator("component")
    @classmethod
    def _known_component(cls, value: str) -> str:
        if value not in ("A", "B1", "B2", "C"):
            raise ValueError(f"未知的交互分量 {value}")
        return value


class GameRecord(BaseModel):
    """有限游戏 {moves, labels, enables, positions}"""
    moves: List[MoveRecord]
    labels: List[str]
    enables: List[List[Optional[MoveRecord]]]
    positions: List[List[OccurrenceRecord]]

    @field_validator("labels")
    @classmethod
    def _four_labels(cls, labels: List[str]) -> List[str]:
        for label in labels:
            if label not in ("OQ", "OA", "PQ", "PA"):
                raise ValueError(f"未知的标签 {label}")
        return labels

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()


class RegistryEntryRecord(BaseModel):
    number: int = Field(ge=0)
    rank: int = Field(ge=1)
    index: int = Field(ge=0)
    key: str
    description: str = ""
    ast: Optional[Dict[str, Any]] = None


class RegistryFile(BaseModel):
    version: int = 1
    entries: List[RegistryEntryRecord] = Field(default_factory=list)

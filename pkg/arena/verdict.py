from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Verdict:
    """布尔判定加上失败原因；失败时 clause 指明违反的条件"""
    ok: bool
    reason: str = ""
    clause: Optional[str] = None
    index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def accept(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def reject(cls, clause: str, reason: str, index: Optional[int] = None) -> "Verdict":
        return cls(False, reason, clause, index)

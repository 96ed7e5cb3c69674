"""走子、标签与带秩走子"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple, Union

Ident = Union[int, str]


class Polarity(Enum):
    O = "O"
    P = "P"

    def flipped(self) -> "Polarity":
        return Polarity.P if self is Polarity.O else Polarity.O


class Kind(Enum):
    Q = "Q"
    A = "A"


class MoveLabel(Enum):
    """λ_G 的取值，恰有四个"""
    OQ = "OQ"
    OA = "OA"
    PQ = "PQ"
    PA = "PA"

    @property
    def polarity(self) -> Polarity:
        return Polarity(self.value[0])

    @property
    def kind(self) -> Kind:
        return Kind(self.value[1])

    @property
    def is_question(self) -> bool:
        return self.kind is Kind.Q

    def flipped(self) -> "MoveLabel":
        """⊸ 左侧使用的极性翻转"""
        return MoveLabel(self.polarity.flipped().value + self.kind.value)

    @classmethod
    def of(cls, polarity: Polarity, kind: Kind) -> "MoveLabel":
        return cls(polarity.value + kind.value)


@dataclass(frozen=True)
class RankedMove:
    """带秩走子 [m]_k

    ident 对零秩走子是自然数或记号；秩大于零时 ident 是注册游戏的构造号。
    tag_path 记录不交并来源，最外层的构造在最前面。
    """
    ident: Ident
    rank: int = 0
    tag_path: Tuple[str, ...] = ()

    def tagged(self, *tags: str) -> "RankedMove":
        return RankedMove(self.ident, self.rank, tuple(tags) + self.tag_path)

    def untagged(self, depth: int = 1) -> "RankedMove":
        return RankedMove(self.ident, self.rank, self.tag_path[depth:])

    def has_prefix(self, prefix: Tuple[str, ...]) -> bool:
        return self.tag_path[:len(prefix)] == prefix

    def retagged(self, old: Tuple[str, ...], new: Tuple[str, ...]) -> "RankedMove":
        return RankedMove(self.ident, self.rank, new + self.tag_path[len(old):])

    @property
    def head_tag(self) -> str:
        return self.tag_path[0] if self.tag_path else ""

    def sort_key(self) -> Tuple[Any, ...]:
        ident_key = (0, self.ident, "") if isinstance(self.ident, int) else (1, 0, str(self.ident))
        return (ident_key, self.rank, self.tag_path)

    def to_dict(self) -> Dict[str, Any]:
        return {"ident": self.ident, "rank": self.rank, "tag_path": list(self.tag_path)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RankedMove":
        return cls(data["ident"], int(data.get("rank", 0)), tuple(data.get("tag_path", ())))

    def __str__(self) -> str:
        body = str(self.ident) if self.rank == 0 else f"[{self.ident}]_{self.rank}"
        if not self.tag_path:
            return body
        return ".".join(self.tag_path) + ":" + body


QUESTION = RankedMove("q")
CHECK = RankedMove("ok")


def nat(n: int) -> RankedMove:
    return RankedMove(n)

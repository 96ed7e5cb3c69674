"""位置：走子出现序列加上以下标表示的指针"""

import json
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from .moves import RankedMove


@dataclass(frozen=True)
class Position:
    """带指针的序列

    justifiers[i] 为出现 i 的指针目标（严格更早的下标），初始出现为 None。
    视图中被删去目标的指针同样记为 None。
    """
    moves: Tuple[RankedMove, ...] = ()
    justifiers: Tuple[Optional[int], ...] = ()

    def __post_init__(self):
        if len(self.moves) != len(self.justifiers):
            raise ValueError(f"走子数 {len(self.moves)} 与指针数 {len(self.justifiers)} 不一致")

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Tuple[RankedMove, Optional[int]]]:
        return iter(zip(self.moves, self.justifiers))

    def __getitem__(self, index: int) -> RankedMove:
        return self.moves[index]

    def justifier(self, index: int) -> Optional[int]:
        return self.justifiers[index]

    @property
    def last(self) -> RankedMove:
        return self.moves[-1]

    @property
    def is_odd(self) -> bool:
        return len(self.moves) % 2 == 1

    def extend(self, move: RankedMove, justifier: Optional[int] = None) -> "Position":
        if justifier is not None and not 0 <= justifier < len(self.moves):
            raise ValueError(f"指针 {justifier} 超出位置长度 {len(self.moves)}")
        return Position(self.moves + (move,), self.justifiers + (justifier,))

    def prefix(self, length: int) -> "Position":
        return Position(self.moves[:length], self.justifiers[:length])

    def prefixes(self) -> Iterator["Position"]:
        for n in range(len(self.moves) + 1):
            yield self.prefix(n)

    def is_prefix_of(self, other: "Position") -> bool:
        n = len(self.moves)
        return other.moves[:n] == self.moves and other.justifiers[:n] == self.justifiers

    def keep(self, indices: List[int]) -> "Position":
        """只保留给定下标（升序）的出现；指向被删出现的指针变为 None"""
        renumber = {old: new for new, old in enumerate(indices)}
        moves = tuple(self.moves[i] for i in indices)
        justifiers = tuple(
            renumber.get(self.justifiers[i]) if self.justifiers[i] is not None else None
            for i in indices
        )
        return Position(moves, justifiers)

    def restrict(self, predicate: Callable[[RankedMove], bool]) -> "Position":
        return self.keep([i for i, m in enumerate(self.moves) if predicate(m)])

    def restrict_prefix(self, prefix: Tuple[str, ...]) -> "Position":
        """s↾X：保留标记以 prefix 开头的出现并剥去该前缀"""
        kept = self.restrict(lambda m: m.has_prefix(prefix))
        return kept.map_moves(lambda m: m.untagged(len(prefix)))

    def map_moves(self, fn: Callable[[RankedMove], RankedMove]) -> "Position":
        return Position(tuple(fn(m) for m in self.moves), self.justifiers)

    def tagged(self, *tags: str) -> "Position":
        return self.map_moves(lambda m: m.tagged(*tags))

    def initial_indices(self) -> List[int]:
        return [i for i, j in enumerate(self.justifiers) if j is None]

    def hereditary_root(self, index: int) -> int:
        while self.justifiers[index] is not None:
            index = self.justifiers[index]
        return index

    def sort_key(self) -> Tuple[Any, ...]:
        body = tuple((m.sort_key(), -1 if j is None else j) for m, j in self)
        return (len(self.moves), body)

    def to_list(self) -> List[Dict[str, Any]]:
        return [dict(m.to_dict(), justifier=j) for m, j in self]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), ensure_ascii=False, indent=2)

    @classmethod
    def from_list(cls, items: List[Dict[str, Any]]) -> "Position":
        moves = tuple(RankedMove.from_dict(item) for item in items)
        justifiers = tuple(item.get("justifier") for item in items)
        return cls(moves, justifiers)

    @classmethod
    def of(cls, *pairs: Tuple[RankedMove, Optional[int]]) -> "Position":
        return cls(tuple(m for m, _ in pairs), tuple(j for _, j in pairs))

    def __str__(self) -> str:
        if not self.moves:
            return "ε"
        parts = []
        for i, (m, j) in enumerate(self):
            parts.append(f"{m}" if j is None else f"{m}@{j}")
        return " · ".join(parts)


EMPTY = Position()

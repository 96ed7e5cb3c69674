"""游戏注册表与构造号。

构造号为 Cantor 配对 ⟨同秩内的序号, 秩⟩；注册表只追加，
同一个键总是得到同一个构造号，可持久化为 JSON 文件以便多次运行间保持稳定。
"""

import hashlib
import json
import logging
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from arena.moves import RankedMove
from core.errors import RegistryError
from games.constructions import BangGame, LollipopGame, ProductGame, TensorGame
from games.game import FiniteGame, FlatGame, Game, TerminalGame
from models.records import RegistryEntryRecord, RegistryFile

logger = logging.getLogger(__name__)

Builder = Callable[[Dict[str, Any]], Game]


def cantor(x: int, y: int) -> int:
    """⟨x, y⟩ = (x + y)(x + y + 1)/2 + y"""
    return (x + y) * (x + y + 1) // 2 + y


def uncantor(z: int) -> Tuple[int, int]:
    w = int(((8 * z + 1) ** 0.5 - 1) // 2)
    while w * (w + 1) // 2 > z:
        w -= 1
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    y = z - w * (w + 1) // 2
    return w - y, y


def digest(payload: Any) -> str:
    text = json.dumps(payload, ensure_ascii=False, sort_keys=True, default=str)
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:8]


def game_key(game: Game) -> str:
    """游戏的结构键；有 registry_key 属性的游戏直接使用它"""
    key = getattr(game, "registry_key", None)
    if key is not None:
        return key
    if isinstance(game, TerminalGame):
        return "I"
    if isinstance(game, FlatGame):
        return f"flat({game.name})"
    if isinstance(game, FiniteGame):
        return f"finite:{digest(game.to_dict())}"
    if isinstance(game, TensorGame):
        return f"({game_key(game.left)} ⊗ {game_key(game.right)})"
    if isinstance(game, LollipopGame):
        return f"({game_key(game.left)} ⊸ {game_key(game.right)})"
    if isinstance(game, ProductGame):
        return f"({game_key(game.left)} & {game_key(game.right)})"
    if isinstance(game, BangGame):
        return f"!{game_key(game.inner)}"
    raise RegistryError(f"无法为 {game.__class__.__name__} 生成注册键，请显式给出 key")


@dataclass(frozen=True)
class RegistryEntry:
    number: int
    rank: int
    index: int
    key: str
    description: str = ""
    ast: Optional[Dict[str, Any]] = None

    @property
    def name(self) -> RankedMove:
        """游戏的名字 [♯(G)]_{R(G)}"""
        return RankedMove(self.number, self.rank)

    def to_record(self) -> RegistryEntryRecord:
        return RegistryEntryRecord(number=self.number, rank=self.rank, index=self.index, key=self.key,
                                   description=self.description, ast=self.ast)


@dataclass
class GameRegistry:
    """构造过的游戏的全局表

    读写都经过锁；条目一旦加入就不再改变。builder 用于从持久化的 AST 重建游戏。
    """
    path: Optional[Path] = None
    builder: Optional[Builder] = None
    rank_bound: int = 4
    _entries: List[RegistryEntry] = field(default_factory=list)
    _by_key: Dict[str, RegistryEntry] = field(default_factory=dict)
    _by_number: Dict[int, RegistryEntry] = field(default_factory=dict)
    _games: Dict[int, Game] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def __post_init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)
        if self.path is not None:
            self.path = Path(self.path)
            if self.path.exists():
                self.load(self.path)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[RegistryEntry]:
        return iter(list(self._entries))

    def _add(self, key: str, rank: int, description: str, ast: Optional[Dict[str, Any]]) -> RegistryEntry:
        index = sum(1 for e in self._entries if e.rank == rank)
        entry = RegistryEntry(cantor(index, rank), rank, index, key, description, ast)
        self._entries.append(entry)
        self._by_key[key] = entry
        self._by_number[entry.number] = entry
        return entry

    def register(self, game: Game, key: Optional[str] = None, description: str = "",
                 ast: Optional[Dict[str, Any]] = None) -> RegistryEntry:
        """登记游戏并返回条目；同一个键重复登记时返回已有条目"""
        key = key or game_key(game)
        with self._lock:
            existing = self._by_key.get(key)
            if existing is not None:
                self._games.setdefault(existing.number, game)
                return existing
            rank = game.rank(self.rank_bound)
            entry = self._add(key, rank, description or key, ast)
            self._games[entry.number] = game
        self.logger.debug(f"登记游戏 {entry.description}: ♯ = {entry.number}，秩 {entry.rank}")
        return entry

    def lookup(self, number: int) -> RegistryEntry:
        entry = self._by_number.get(number)
        if entry is None:
            raise RegistryError(f"构造号 {number} 未登记")
        return entry

    def find(self, key: str) -> Optional[RegistryEntry]:
        return self._by_key.get(key)

    def game_of(self, number: int) -> Game:
        entry = self.lookup(number)
        game = self._games.get(number)
        if game is not None:
            return game
        if self.builder is None or entry.ast is None:
            raise RegistryError(f"构造号 {number} 的游戏未加载，且无法从 AST 重建")
        game = self.builder(entry.ast)
        with self._lock:
            self._games.setdefault(number, game)
        return game

    def decode(self, move: RankedMove) -> Optional[RegistryEntry]:
        """把回答解码为已登记游戏；不是名字时返回 None"""
        if move.rank < 1 or not isinstance(move.ident, int) or move.tag_path:
            return None
        entry = self._by_number.get(move.ident)
        if entry is None or entry.rank != move.rank:
            return None
        return entry

    def names(self, max_rank: Optional[int] = None) -> List[RankedMove]:
        return [e.name for e in self._entries if max_rank is None or e.rank <= max_rank]

    def is_name(self, move: RankedMove, max_rank: Optional[int] = None) -> bool:
        entry = self.decode(move)
        return entry is not None and (max_rank is None or entry.rank <= max_rank)

    def to_file(self) -> RegistryFile:
        return RegistryFile(entries=[e.to_record() for e in self._entries])

    def save(self, path: Optional[Path] = None) -> Path:
        target = Path(path or self.path or "registry.json")
        target.write_text(self.to_file().model_dump_json(indent=2), encoding="utf-8")
        self.logger.info(f"注册表已保存到 {target}，共 {len(self._entries)} 项")
        return target

    def load(self, path: Path) -> None:
        data = RegistryFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
        with self._lock:
            for record in data.entries:
                if record.key in self._by_key:
                    continue
                if record.number in self._by_number:
                    raise RegistryError(f"注册表文件中的构造号 {record.number} 重复")
                entry = RegistryEntry(record.number, record.rank, record.index, record.key,
                                      record.description, record.ast)
                self._entries.append(entry)
                self._by_key[entry.key] = entry
                self._by_number[entry.number] = entry
        self.logger.info(f"从 {path} 读入 {len(data.entries)} 项")


@dataclass(frozen=True)
class ParadoxViolation:
    number: int
    detail: str


def check_paradox_free(registry: GameRegistry, bound: int = 4) -> List[ParadoxViolation]:
    """每个已加载的游戏：名字的秩等于 R(G)，且大于所有走子的秩，因而名字不是自身的走子"""
    violations: List[ParadoxViolation] = []
    for entry in registry:
        try:
            game = registry.game_of(entry.number)
        except RegistryError:
            continue
        if game.rank(bound) != entry.rank:
            violations.append(ParadoxViolation(entry.number, f"名字的秩 {entry.rank} ≠ R(G) = {game.rank(bound)}"))
        moves = list(game.arena.moves(bound))
        for move in moves:
            if move.rank >= entry.rank:
                violations.append(ParadoxViolation(entry.number, f"走子 {move} 的秩不小于名字的秩 {entry.rank}"))
                break
        if entry.name in moves:
            violations.append(ParadoxViolation(entry.number, f"名字 {entry.name} 是自身的走子"))
    return violations

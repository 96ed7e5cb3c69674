from dataclasses import asdict, dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional
import json
import uuid


class LudicMessageType(Enum):
    '''
        会话记录中的消息类型
        OPPONENT：用户提交的命令与参数（用户总是扮演 Opponent）
        COMMAND：命令的执行结果
    '''
    OPPONENT = "opponent"
    COMMAND = "command"


class LudicStatus(Enum):
    """命令结果状态，对应进程退出码"""
    SUCCESS = "success"
    ERROR = "error"
    DIVERGED = "diverged"
    BREACH = "breach"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]


_EXIT_CODES = {LudicStatus.SUCCESS: 0, LudicStatus.ERROR: 1, LudicStatus.DIVERGED: 2, LudicStatus.BREACH: 3}


@dataclass
class LudicMessage:
    """会话记录中的一条消息"""
    type: LudicMessageType
    content: Any
    metadata: Optional[Dict[str, Any]] = None
    id: str = field(default_factory=lambda: str(uuid.uuid4()))
    timestamp: str = field(default_factory=lambda: datetime.now().isoformat())

    def __post_init__(self):
        if self.metadata is None:
            self.metadata = {}

    def to_dict(self) -> Dict[str, Any]:
        record = asdict(self)
        record["type"] = self.type.value
        return record


@dataclass
class LudicResponse:
    """标准化的命令响应"""
    status: LudicStatus
    message: str
    data: Optional[Any] = None

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    @property
    def ok(self) -> bool:
        return self.status is LudicStatus.SUCCESS

    def to_dict(self) -> Dict[str, Any]:
        return {"status": self.status.value, "message": self.message, "data": self.data}

    @classmethod
    def success(cls, message: str, data: Any = None) -> 'LudicResponse':
        return cls(LudicStatus.SUCCESS, message, data)

    @classmethod
    def error(cls, message: str, data: Any = None) -> 'LudicResponse':
        return cls(LudicStatus.ERROR, message, data)

    @classmethod
    def diverged(cls, message: str, data: Any = None) -> 'LudicResponse':
        """交互超出预算"""
        return cls(LudicStatus.DIVERGED, message, data)

    @classmethod
    def breach(cls, message: str, data: Any = None) -> 'LudicResponse':
        """内部不变量被破坏"""
        return cls(LudicStatus.BREACH, message, data)


@dataclass(frozen=True)
class TraceEvent:
    """交互轨迹中的一步；component 取 A、B1、B2、C 之一"""
    component: str
    move: Dict[str, Any]
    justifier: Optional[int]
    hidden: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class Trace:
    events: List[TraceEvent] = field(default_factory=list)

    def visible(self) -> List[TraceEvent]:
        return [e for e in self.events if not e.hidden]

    def to_json(self, include_hidden: bool = True) -> str:
        events = self.events if include_hidden else self.visible()
        return json.dumps([e.to_dict() for e in events], ensure_ascii=False, indent=2)

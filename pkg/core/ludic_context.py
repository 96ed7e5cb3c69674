from pathlib import Path
from typing import Any, Dict, List, Optional, Union
import logging

from cwf.model import Model
from mltt.declarations import load_file
from mltt.parser import Definition, SourceFile
from models.bounds import Bounds
from predicative.registry import GameRegistry, ParadoxViolation, check_paradox_free

from .errors import LudicError
from .ludic_message import LudicMessage, LudicMessageType


class LudicContext:
    """一次会话的运行时状态

    持有已载入的声明文件、注册表（可选地落在 registry_path）、界限与模型。
    界限变化时模型随之重建，注册表保持不变，已分配的构造号因此稳定。
    """

    def __init__(self, bounds: Optional[Bounds] = None, registry_path: Optional[Union[str, Path]] = None,
                 session_id: str = "default_session"):
        self.session_id = session_id
        self.bounds = bounds or Bounds()
        self.registry_path = Path(registry_path) if registry_path else None
        self.registry = GameRegistry(path=self.registry_path)
        self.model = Model(self.registry, self.bounds)
        self.sources: Dict[str, SourceFile] = {}
        self.messages: List[LudicMessage] = []
        self.session_data: Dict[str, Any] = {}
        self.logger = logging.getLogger(f"LudicContext.{session_id}")

    # ---- 声明 ----

    def load(self, path: Union[str, Path], reload: bool = False) -> SourceFile:
        """
        :param path: 声明文件路径，按绝对路径缓存
        :param reload: 为 True 时忽略缓存重新解析
        """
        key = str(Path(path).resolve())
        if reload or key not in self.sources:
            self.sources[key] = load_file(path)
            self.logger.info(f"载入 {path}: {len(self.sources[key].definitions)} 个定义")
        return self.sources[key]

    def definition(self, path: Union[str, Path], name: str) -> Definition:
        source = self.load(path)
        definition = source.definitions.get(name)
        if definition is None:
            raise LudicError(f"{path} 中没有名为 {name} 的定义")
        return definition

    # ---- 界限与注册表 ----

    def set_bounds(self, bounds: Bounds) -> None:
        self.bounds = bounds
        self.model = Model(self.registry, bounds)
        self.logger.debug(f"界限更新为 {bounds.model_dump()}")

    def check_registry(self) -> List[ParadoxViolation]:
        return check_paradox_free(self.registry)

    def save_registry(self) -> Optional[Path]:
        """只有指定了注册表文件时才写盘"""
        if self.registry_path is None:
            return None
        return self.registry.save(self.registry_path)

    # ---- 消息 ----

    def add_message(self, message: LudicMessage) -> None:
        self.messages.append(message)
        self.logger.debug(f"添加消息: {message.type.value} - {message.id}")

    def get_messages(self, message_type: Optional[LudicMessageType] = None,
                     limit: Optional[int] = None) -> List[LudicMessage]:
        """获取会话消息
        功能 ：按类型过滤消息，并只保留最近的 limit 条
        输入参数 ：message_type - 为 None 时不过滤；limit - 为 None 时全部返回
        输出 ： List[LudicMessage]
        """
        messages = self.messages
        if message_type:
            messages = [msg for msg in messages if msg.type == message_type]
        if limit:
            messages = messages[-limit:]
        return messages

    def set_session_data(self, key: str, value: Any) -> None:
        self.session_data[key] = value
        self.logger.debug(f"设置会话数据: {key}")

    def get_session_data(self, key: str, default: Any = None) -> Any:
        return self.session_data.get(key, default)

    def export_context(self) -> Dict[str, Any]:
        """导出可 JSON 序列化的会话快照：界限、注册表文件、已载入的文件与全部消息"""
        return {
            "session_id": self.session_id,
            "bounds": self.bounds.model_dump(),
            "registry": None if self.registry_path is None else str(self.registry_path),
            "sources": sorted(self.sources),
            "messages": [msg.to_dict() for msg in self.messages],
        }

    def __str__(self) -> str:
        return (f"LudicContext(session={self.session_id}, sources={len(self.sources)}, "
                f"registry={len(self.registry)})")

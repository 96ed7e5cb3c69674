"""
数据模型

包含以下组件：
- Bounds: 会话界限
- MoveRecord / PositionRecord / TraceEventRecord / GameRecord: JSON 记录的校验模型
- RegistryEntryRecord / RegistryFile: 注册表文件
"""

from .bounds import Bounds
from .records import (GameRecord, MoveRecord, OccurrenceRecord, PositionRecord, RegistryEntryRecord,
                      RegistryFile, TraceEventRecord)

__all__ = [
    "Bounds", "GameRecord", "MoveRecord", "OccurrenceRecord", "PositionRecord", "RegistryEntryRecord",
    "RegistryFile", "TraceEventRecord",
]

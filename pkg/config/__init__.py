"""配置模块。

包含系统配置管理：
- LudicConfig: 配置管理器（.env、环境变量与命令行覆盖）
"""

from .ludic_config import LudicConfig

__all__ = ["LudicConfig"]

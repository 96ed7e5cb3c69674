import os
from typing import Any, Dict, List, Optional
from dotenv import load_dotenv
import logging

from models.bounds import Bounds

BOUND_KEYS = ("alphabet", "depth", "unfold", "steps", "thread_bound")


class LudicConfig:
    """解释器配置

    先读 .env，再从环境变量构造嵌套字典；命令行参数通过 set 覆盖。
    """

    def __init__(self, env_file: Optional[str] = None):
        # env_file 为 None 时沿目录向上查找 .env
        load_dotenv(env_file)

        self._config = self._load_config()
        self._setup_logging()

    def _load_config(self) -> Dict[str, Any]:
        return {
            # 界限
            "bounds": {
                "alphabet": int(os.getenv("LUDIC_ALPHABET", "32")),
                "depth": int(os.getenv("LUDIC_DEPTH", "10")),
                "unfold": int(os.getenv("LUDIC_UNFOLD", "64")),
                "steps": int(os.getenv("LUDIC_STEPS", "4096")),
                "thread_bound": int(os.getenv("LUDIC_THREADS", "3")),
            },

            # 注册表文件，未设置时只在内存中
            "registry": {
                "path": os.getenv("LUDIC_REGISTRY") or None,
            },

            "logging": {
                "level": os.getenv("LOG_LEVEL", "WARNING"),
                "format": os.getenv("LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
                "file": os.getenv("LOG_FILE", None),
            },

            "mode": {
                "debug_mode": os.getenv("DEBUG_MODE", "false").lower() == "true",
            },

            # play 循环里的退出词
            "commands": {
                "quit_words": [w.strip() for w in os.getenv("LUDIC_QUIT_WORDS", "quit,exit,退出").split(",")
                               if w.strip()],
            },
        }

    def _setup_logging(self) -> None:
        settings = self._config["logging"]
        formatter = logging.Formatter(settings["format"])
        root = logging.getLogger()
        root.setLevel(getattr(logging, settings["level"].upper(), logging.WARNING))

        # 控制台处理器只加一次
        if not any(isinstance(h, logging.StreamHandler) and getattr(h.stream, "name", None) in ("<stdout>", "<stderr>")
                   for h in root.handlers):
            console = logging.StreamHandler()
            console.setFormatter(formatter)
            root.addHandler(console)

        if settings["file"]:
            to_file = logging.FileHandler(settings["file"], encoding="utf-8")
            to_file.setFormatter(formatter)
            root.addHandler(to_file)

    def get(self, key: str, default: Any = None) -> Any:
        """按点号路径取值，例如 bounds.depth"""
        node: Any = self._config
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def set(self, key: str, value: Any) -> None:
        *parents, leaf = key.split(".")
        node = self._config
        for part in parents:
            node = node.setdefault(part, {})
        node[leaf] = value

    def get_bounds(self) -> Bounds:
        return Bounds(**{k: self._config["bounds"][k] for k in BOUND_KEYS})

    def get_registry_path(self) -> Optional[str]:
        return self._config["registry"]["path"]

    def is_debug_mode(self) -> bool:
        return self._config["mode"]["debug_mode"]

    def get_quit_words(self) -> List[str]:
        return self._config["commands"]["quit_words"]

    def validate_config(self) -> bool:
        """界限必须全部严格为正"""
        valid = True
        for key in BOUND_KEYS:
            value = self.get(f"bounds.{key}")
            if not isinstance(value, int) or value <= 0:
                logging.error(f"配置项 bounds.{key} 必须是正整数，当前为 {value!r}")
                valid = False
        return valid

    def __str__(self) -> str:
        bounds = ", ".join(f"{k}={self.get('bounds.' + k)}" for k in BOUND_KEYS)
        return f"LudicConfig({bounds}, registry={self.get_registry_path()})"


# 全局配置实例
config = LudicConfig()

"""
谓词游戏层

包含以下组件：
- GameRegistry: 构造号（Cantor 配对）、名字与持久化
- PredicativeGame: ∮S、∫、谓词子游戏关系
- UniverseGame / code_of / el: 宇宙游戏与编码、解码
- pli_lollipop / PLIStrategy: 逐点线性蕴涵的积，广义 copy-cat 与 dereliction
"""

from .games import (BOTTOM, PredicativeGame, circle, from_finite, is_predicative_subgame, parallel_union,
                    predicative_union, strategy_set, strategy_tag)
from .pli import (PLIGame, PLIStrategy, UniformityReport, check_uniform, component_games, compose_pli,
                  generalized_copy_cat, generalized_dereliction, lift_to_morphism, paradox_report,
                  pli_lollipop, pli_strategy, project_strategy, single_thread)
from .registry import (GameRegistry, ParadoxViolation, RegistryEntry, cantor, check_paradox_free, digest,
                       game_key, uncantor)
from .universe import UniverseGame, code_of, el, el_entry, is_code_of_level, universe

__all__ = [
    "BOTTOM", "PredicativeGame", "circle", "from_finite", "is_predicative_subgame", "parallel_union",
    "predicative_union", "strategy_set", "strategy_tag",
    "PLIGame", "PLIStrategy", "UniformityReport", "check_uniform", "component_games", "compose_pli",
    "generalized_copy_cat", "generalized_dereliction", "lift_to_morphism", "paradox_report",
    "pli_lollipop", "pli_strategy", "project_strategy", "single_thread",
    "GameRegistry", "ParadoxViolation", "RegistryEntry", "cantor", "check_paradox_free", "digest",
    "game_key", "uncantor",
    "UniverseGame", "code_of", "el", "el_entry", "is_code_of_level", "universe",
]

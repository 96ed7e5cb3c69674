"""
游戏层

包含以下组件：
- Game / FiniteGame / FlatGame / TerminalGame: 惰性游戏与显式有限游戏
- 构造: ⊗、⊸、&、! 与 ⇒
- validate_game / is_subgame: 结构谓词与子游戏关系
- StrategyTable: 树形式策略、策略穷举、相容与完备的策略集合
- compose_games / check_covering: 游戏的复合与覆盖引理
- enumerate_small_games: 小游戏穷举
"""

from .composition import (A_TAG, B1_TAG, B2_TAG, C_TAG, CoveringReport, InteractionArena, SideArena,
                          check_covering, component_of, compose_games, in_copy_relation, interactions,
                          restrict_external, restrict_left, restrict_middle, restrict_right)
from .constructions import (DEFAULT_THREAD_BOUND, BangGame, LollipopGame, ProductGame, TensorGame, bang,
                            implication, lollipop, product, tensor)
from .enumeration import check_correspondence, enumerate_small_games
from .game import (ArenaGame, Extension, FiniteGame, FlatGame, Game, TerminalGame, bool_game, empty_game, flat_game,
                   nat_game, unit_game)
from .strategy_table import (StrategyTable, check_consistency, is_complete, is_consistent, strategies_on,
                             tree_form, union_game)
from .validation import PREDICATES, GameReport, is_subgame, validate_game

__all__ = [
    "A_TAG", "B1_TAG", "B2_TAG", "C_TAG", "CoveringReport", "InteractionArena", "SideArena",
    "check_covering", "component_of", "compose_games", "in_copy_relation", "interactions",
    "restrict_external", "restrict_left", "restrict_middle", "restrict_right",
    "DEFAULT_THREAD_BOUND", "BangGame", "LollipopGame", "ProductGame", "TensorGame", "bang",
    "implication", "lollipop", "product", "tensor",
    "check_correspondence", "enumerate_small_games",
    "ArenaGame", "Extension", "FiniteGame", "FlatGame", "Game", "TerminalGame", "bool_game", "empty_game",
    "flat_game", "nat_game", "unit_game",
    "StrategyTable", "check_consistency", "is_complete", "is_consistent", "strategies_on",
    "tree_form", "union_game",
    "PREDICATES", "GameReport", "is_subgame", "validate_game",
]

"""
策略引擎

包含以下组件：
- StrategyOracle: 下一步函数形式的策略，三态回应
- CopyCat / dereliction: 拷贝策略
- Composite: 并行复合加隐藏的交互机，可输出含隐藏走子的轨迹
- tensor_strategies / pairing / promotion: 策略构造
- check_innocent 等: 四个 WPG 约束的有界检查与行为等价
- check_interaction_theorem: 构造的交互定理
"""

from .basic import answer, bottom, double, lazy_constant, numeral, strict_constant, successor, unary
from .checks import (CheckResult, EquivalenceResult, NoetherianVerdict, check_all, check_innocent,
                     check_noetherian, check_total, check_well_bracketed, equiv_at_depth, explore,
                     oracle_plays, strategy_game)
from .combinators import (Promotion, RetagOracle, RouteOracle, ThreadPolicy, pairing, project, promotion,
                          tensor_strategies)
from .composite import DEFAULT_STEP_BUDGET, Composite, InteractionState, compose
from .copycat import CopyCat, copy_cat, dereliction
from .oracle import (FunctionOracle, ResponseOutcome, ResponseStatus, StrategyOracle, TableOracle,
                     lollipop_sides, table_from_oracle)
from .theorems import (ConstrainedGame, LawReport, check_composition_law, check_interaction_theorem,
                       check_pairing_law, check_promotion_law, check_tensor_law)

__all__ = [
    "answer", "bottom", "double", "lazy_constant", "numeral", "strict_constant", "successor", "unary",
    "CheckResult", "EquivalenceResult", "NoetherianVerdict", "check_all", "check_innocent",
    "check_noetherian", "check_total", "check_well_bracketed", "equiv_at_depth", "explore",
    "oracle_plays", "strategy_game",
    "Promotion", "RetagOracle", "RouteOracle", "ThreadPolicy", "pairing", "project", "promotion",
    "tensor_strategies",
    "DEFAULT_STEP_BUDGET", "Composite", "InteractionState", "compose",
    "CopyCat", "copy_cat", "dereliction",
    "FunctionOracle", "ResponseOutcome", "ResponseStatus", "StrategyOracle", "TableOracle",
    "lollipop_sides", "table_from_oracle",
    "ConstrainedGame", "LawReport", "check_composition_law", "check_interaction_theorem",
    "check_pairing_law", "check_promotion_law", "check_tensor_law",
]

"""
范畴族模型层

包含以下组件：
- syntax: 依赖游戏项与初等策略项的语法树及其 JSON
- judgements: 定义域、值域、类型、规范化、秩
- Model: 纤维求值、项的实现、编码与注册
- FamilyGame / PiHatGame / IdHatGame / MorphismGame: 依赖游戏在环境处的游戏
- operations: 范畴族结构与各类型构造的项层接口
- LawSuite: 范畴族等式与类型构造律的检查
- IntensionalityChecks: 等式反射、函数外延性、UIP、Streicher 判据与单价公理
"""

from .games import (Env, FamilyGame, IdHatGame, MorphismGame, NamedGame, PiHatGame, context_game, env_from_list,
                    env_to_list, observed_env)
from .intensionality import IntensionalityChecks, IntensionalityReport, lazy_zero, strict_zero
from .judgements import (codomain, domain, is_morphism, lift, normalize_tm, normalize_ty, refl_context, type_of,
                         type_rank, weaken)
from .laws import LawCheck, LawSuite, SuiteReport, default_flat_games
from .model import EXPLORE_BOUND, Model, fs_game
from .operations import (app, el, en, endo_code, equiv, eval_dependent, fsn_code, id_hat, instantiate, pi_hat,
                         r_empty, r_id, r_nat, r_nat_at, r_sigma, r_unit, refl_mor, sigma_hat, succ)
from .syntax import (EMPTY_TY, TERMINAL, UNIT, N, Code, Const, Context, DependentType, ElOf, Extension, Family,
                     FirstProj, Identity, IdTy, Lambda, LambdaInv, Numeral, PairInv, PairMor, PiTy, REmpty, Refl,
                     ReflInv, RNat, SigmaTy, Star, SubstTm, SubstTy, SuccM, Term, Top, Univ, Var, node_from_dict)

__all__ = [
    "Env", "FamilyGame", "IdHatGame", "MorphismGame", "NamedGame", "PiHatGame", "context_game", "env_from_list",
    "env_to_list", "observed_env",
    "IntensionalityChecks", "IntensionalityReport", "lazy_zero", "strict_zero",
    "codomain", "domain", "is_morphism", "lift", "normalize_tm", "normalize_ty", "refl_context", "type_of",
    "type_rank", "weaken",
    "LawCheck", "LawSuite", "SuiteReport", "default_flat_games",
    "EXPLORE_BOUND", "Model", "fs_game",
    "app", "el", "en", "endo_code", "equiv", "eval_dependent", "fsn_code", "id_hat", "instantiate", "pi_hat",
    "r_empty", "r_id", "r_nat", "r_nat_at", "r_sigma", "r_unit", "refl_mor", "sigma_hat", "succ",
    "EMPTY_TY", "TERMINAL", "UNIT", "N", "Code", "Const", "Context", "DependentType", "ElOf", "Extension", "Family",
    "FirstProj", "Identity", "IdTy", "Lambda", "LambdaInv", "Numeral", "PairInv", "PairMor", "PiTy", "REmpty",
    "Refl", "ReflInv", "RNat", "SigmaTy", "Star", "SubstTm", "SubstTy", "SuccM", "Term", "Top", "Univ", "Var",
    "node_from_dict",
]

"""
MLTT 前端

包含以下组件：
- lexer / parser: 源文本到 de Bruijn 语法，带位置的语法错误
- syntax / printer: 语法树、代入与可回读的打印
- TypeChecker: 带秩的双向检查，产出推导树
- equality: 改写到正规形判定判断性相等
- Elaborator: 检查过的语法到范畴族模型的解释
- contextual: 上下文项与 Σ(Δ)
- declarations / prelude: 声明文件的载入与检查
"""

from .contextual import ContextualTerm, SigmaTelescope, agrees_with_extension, contextual_term, extension_morphism
from .declarations import CheckedDefinition, CheckReport, check_source, load_file, load_text
from .elaborate import Elaborator, elaborate_context, elaborate_definition, elaborate_term, elaborate_type
from .equality import canonical, fst_of, judgmental_equal, normalize, snd_of
from .lexer import SourceLocation, Token, lex
from .parser import ContextDecl, Definition, Parser, SourceFile, parse_expr, parse_file, parse_telescope
from .prelude import PRELUDE, prelude
from .printer import show
from .syntax import Expr, numeral, numeral_value
from .typecheck import Derivation, TypeChecker, check_definition, typecheck

__all__ = [
    "ContextualTerm", "SigmaTelescope", "agrees_with_extension", "contextual_term", "extension_morphism",
    "CheckedDefinition", "CheckReport", "check_source", "load_file", "load_text",
    "Elaborator", "elaborate_context", "elaborate_definition", "elaborate_term", "elaborate_type",
    "canonical", "fst_of", "judgmental_equal", "normalize", "snd_of",
    "SourceLocation", "Token", "lex",
    "ContextDecl", "Definition", "Parser", "SourceFile", "parse_expr", "parse_file", "parse_telescope",
    "PRELUDE", "prelude",
    "show",
    "Expr", "numeral", "numeral_value",
    "Derivation", "TypeChecker", "check_definition", "typecheck",
]

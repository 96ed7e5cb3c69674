"""前导库：每个源文件之前载入的定义

内建常量 FSN : N → U0 与 ENDO : U0 → U0 由解析器直接识别，无需在此声明。
"""

from functools import lru_cache

from .parser import SourceFile, parse_file

PRELUDE = """\
-- 自然数上的常用函数
def double : N -> N = fun (n : N) -> R_N(x. N, zero, x y. succ (succ y), n)
def add : N -> N -> N = fun (m : N) (n : N) -> R_N(x. N, m, x y. succ y, n)
def pred : N -> N = fun (n : N) -> R_N(x. N, zero, x y. x, n)

-- 逐点相同、内涵不同的两个零函数
def lazy_zero : N -> N = fun (n : N) -> zero
def strict_zero : N -> N = fun (n : N) -> R_N(x. N, zero, x y. y, n)
"""


@lru_cache(maxsize=1)
def _prelude() -> SourceFile:
    source = parse_file(PRELUDE)
    if source.errors:
        raise RuntimeError(f"前导库解析失败: {source.errors[0]}")
    return source


def prelude() -> SourceFile:
    """返回前导库的副本，调用者可以在其上继续添加声明"""
    base = _prelude()
    return SourceFile(dict(base.contexts), dict(base.definitions), [])


def prelude_names() -> frozenset:
    return frozenset(_prelude().definitions)

"""MLTT 的抽象语法。

解析后所有变量都是 de Bruijn 下标（0 是最近的绑定），绑定名只用于打印，
不参与相等比较，所以 α 等价就是结构相等。
类型与项共用 Expr；is_type_expr 按语法类别区分两者（Tarski 式宇宙）。
"""

from dataclasses import dataclass, field, fields, replace
from typing import Callable, ClassVar, Dict, Sequence, Tuple


class Expr:
    """语法树节点；BINDS 记录每个子节点之下新增的绑定个数"""

    BINDS: ClassVar[Dict[str, int]] = {}

    def binds(self, name: str) -> int:
        return self.BINDS.get(name, 0)

    def children(self) -> Tuple[Tuple[str, "Expr"], ...]:
        return tuple((f.name, getattr(self, f.name)) for f in fields(self)
                     if isinstance(getattr(self, f.name), Expr))

    def __str__(self) -> str:
        from .printer import show
        return show(self)


# ---- 类型 ----

@dataclass(frozen=True)
class UnitTy(Expr):
    pass


@dataclass(frozen=True)
class EmptyTy(Expr):
    pass


@dataclass(frozen=True)
class NatTy(Expr):
    pass


@dataclass(frozen=True)
class Universe(Expr):
    level: int


@dataclass(frozen=True)
class Pi(Expr):
    dom: Expr
    cod: Expr
    name: str = field(default="x", compare=False)

    BINDS = {"cod": 1}


@dataclass(frozen=True)
class Sigma(Expr):
    dom: Expr
    cod: Expr
    name: str = field(default="x", compare=False)

    BINDS = {"cod": 1}


@dataclass(frozen=True)
class Id(Expr):
    ty: Expr
    left: Expr
    right: Expr


@dataclass(frozen=True)
class El(Expr):
    code: Expr


# ---- 项 ----

@dataclass(frozen=True)
class Var(Expr):
    index: int
    name: str = field(default="", compare=False)


@dataclass(frozen=True)
class Builtin(Expr):
    """内建常量：FSN : N → U0，ENDO : U0 → U0"""
    name: str


@dataclass(frozen=True)
class En(Expr):
    """En(A)：检查器给出的类型编码，没有同余规则"""
    ty: Expr


@dataclass(frozen=True)
class Star(Expr):
    pass


@dataclass(frozen=True)
class Zero(Expr):
    pass


@dataclass(frozen=True)
class Succ(Expr):
    arg: Expr


@dataclass(frozen=True)
class Lam(Expr):
    dom: Expr
    body: Expr
    name: str = field(default="x", compare=False)

    BINDS = {"body": 1}


@dataclass(frozen=True)
class App(Expr):
    fun: Expr
    arg: Expr


@dataclass(frozen=True)
class Pair(Expr):
    fst: Expr
    snd: Expr


@dataclass(frozen=True)
class Refl(Expr):
    term: Expr


@dataclass(frozen=True)
class RUnit(Expr):
    """R^𝟙(x. C, c, a)"""
    motive: Expr
    case: Expr
    target: Expr
    names: Tuple[str, ...] = field(default=("x",), compare=False)

    BINDS = {"motive": 1}


@dataclass(frozen=True)
class REmpty(Expr):
    """R^𝟘(x. C, a)"""
    motive: Expr
    target: Expr
    names: Tuple[str, ...] = field(default=("x",), compare=False)

    BINDS = {"motive": 1}


@dataclass(frozen=True)
class RNat(Expr):
    """R^N(x. C, c₀, x y. c_s, n)"""
    motive: Expr
    zero_case: Expr
    succ_case: Expr
    target: Expr
    names: Tuple[str, ...] = field(default=("x", "x", "y"), compare=False)

    BINDS = {"motive": 1, "succ_case": 2}


@dataclass(frozen=True)
class RSigma(Expr):
    """R^Σ(z. C, x y. g, p)"""
    motive: Expr
    case: Expr
    target: Expr
    names: Tuple[str, ...] = field(default=("z", "x", "y"), compare=False)

    BINDS = {"motive": 1, "case": 2}


@dataclass(frozen=True)
class RId(Expr):
    """R^=(x y p. C, z. c, a, a', q)"""
    motive: Expr
    case: Expr
    left: Expr
    right: Expr
    proof: Expr
    names: Tuple[str, ...] = field(default=("x", "y", "p", "z"), compare=False)

    BINDS = {"motive": 3, "case": 1}


TYPE_FORMERS = (UnitTy, EmptyTy, NatTy, Universe, Pi, Sigma, Id, El)
ELIMINATORS = (RUnit, REmpty, RNat, RSigma, RId)

UNIT, EMPTY, NAT = UnitTy(), EmptyTy(), NatTy()

BUILTIN_TYPES: Dict[str, Expr] = {
    "FSN": Pi(NAT, Universe(0), "n"),
    "ENDO": Pi(Universe(0), Universe(0), "a"),
}

Telescope = Tuple[Tuple[str, Expr], ...]


def is_type_expr(e: Expr) -> bool:
    return isinstance(e, TYPE_FORMERS)


def numeral(n: int) -> Expr:
    e: Expr = Zero()
    for _ in range(n):
        e = Succ(e)
    return e


def numeral_value(e: Expr):
    """succ^k(zero) 的 k；不是数字时返回 None"""
    k = 0
    while isinstance(e, Succ):
        e, k = e.arg, k + 1
    return k if isinstance(e, Zero) else None


def arrow(dom: Expr, cod: Expr) -> Expr:
    """非依赖函数类型 A → B，cod 位于 A 的外层上下文"""
    return Pi(dom, shift(cod, 1), "_")


# ---- de Bruijn 操作 ----

def transform(e: Expr, on_var: Callable[[Var, int], Expr], depth: int = 0) -> Expr:
    """自底向上改写变量；depth 为当前位置之上的局部绑定数"""
    if isinstance(e, Var):
        return on_var(e, depth)
    changes = {name: transform(child, on_var, depth + e.binds(name)) for name, child in e.children()}
    return replace(e, **changes) if changes else e


def shift(e: Expr, by: int, cutoff: int = 0) -> Expr:
    if by == 0:
        return e

    def on_var(v: Var, depth: int) -> Expr:
        if v.index >= cutoff + depth:
            return Var(v.index + by, v.name)
        return v

    return transform(e, on_var)


def instantiate(body: Expr, value: Expr) -> Expr:
    """body[value/v₀]；value 位于 body 外层的上下文"""

    def on_var(v: Var, depth: int) -> Expr:
        if v.index == depth:
            return shift(value, depth)
        if v.index > depth:
            return Var(v.index - 1, v.name)
        return v

    return transform(body, on_var)


def instantiate_all(body: Expr, values: Sequence[Expr]) -> Expr:
    """body 位于 Θ 加 len(values) 个绑定之上，values 按从外到内排列且都位于 Θ"""
    n = len(values)
    for k, value in enumerate(reversed(values)):
        body = instantiate(body, shift(value, n - 1 - k))
    return body


def rebind(body: Expr, values: Sequence[Expr], extra: int) -> Expr:
    """body 位于 Γ 加 len(values) 个绑定之上；values 位于 Γ 加 extra 个绑定之上"""
    return instantiate_all(shift(body, extra, cutoff=len(values)), values)


def occurs(e: Expr, index: int) -> bool:
    found = []

    def on_var(v: Var, depth: int) -> Expr:
        if v.index == index + depth:
            found.append(v)
        return v

    transform(e, on_var)
    return bool(found)


def lookup(ctx: Telescope, index: int) -> Expr:
    """Γ 中第 index 个（从新到旧）变量的类型，已移到 Γ 之上"""
    _, ty = ctx[-1 - index]
    return shift(ty, index + 1)

"""依赖游戏项与初等策略项的语法树。

上下文是类型的元组，按从旧到新排列；变量用 de Bruijn 下标，0 是最新的分量。
所有节点都是不可变的数据类，可哈希，并序列化为带 kind 字段的稳定 JSON。
"""

import json
from dataclasses import dataclass, fields, is_dataclass
from typing import Any, Dict, Tuple, Type

from core.errors import DecodeError


class Node:
    """语法树节点的公共基类"""

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.__class__.__name__}
        for f in fields(self):
            data[f.name] = _encode(getattr(self, f.name))
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


class DependentType(Node):
    """依赖游戏项：在上下文的每个策略处给出一个游戏"""


class Term(Node):
    """初等策略项：项或上下文态射"""


Context = Tuple[DependentType, ...]


# ---- 依赖游戏项 ----

@dataclass(frozen=True)
class Const(DependentType):
    """常量游戏：N、Unit、Empty 或 I"""
    name: str

    def __str__(self) -> str:
        return {"Unit": "𝟙", "Empty": "𝟘"}.get(self.name, self.name)


@dataclass(frozen=True)
class Univ(DependentType):
    level: int

    def __str__(self) -> str:
        return f"U{self.level}"


@dataclass(frozen=True)
class ElOf(DependentType):
    code: Term
    level: int

    def __str__(self) -> str:
        return f"El({self.code})"


@dataclass(frozen=True)
class SubstTy(DependentType):
    body: DependentType
    mor: Term

    def __str__(self) -> str:
        return f"{self.body}{{{self.mor}}}"


@dataclass(frozen=True)
class PiTy(DependentType):
    dom: DependentType
    cod: DependentType

    def __str__(self) -> str:
        return f"Π({self.dom}, {self.cod})"


@dataclass(frozen=True)
class SigmaTy(DependentType):
    dom: DependentType
    cod: DependentType

    def __str__(self) -> str:
        return f"Σ({self.dom}, {self.cod})"


@dataclass(frozen=True)
class IdTy(DependentType):
    ty: DependentType
    left: Term
    right: Term

    def __str__(self) -> str:
        return f"Id_{self.ty}({self.left}, {self.right})"


@dataclass(frozen=True)
class Family(DependentType):
    """内建的依赖游戏，依赖最新的分量：FSN 以 N 为指标，ENDO 以 U_level 为指标"""
    name: str
    level: int = 0

    def __str__(self) -> str:
        return f"{self.name}(v0)" if self.name == "FSN" else f"{self.name}_{self.level}(v0)"


N = Const("N")
UNIT = Const("Unit")
EMPTY_TY = Const("Empty")
TERMINAL = Const("I")


# ---- 初等策略项 ----

@dataclass(frozen=True)
class Identity(Term):
    """der_Γ : Γ → Γ"""
    ctx: Context

    def __str__(self) -> str:
        return "id"


@dataclass(frozen=True)
class Top(Term):
    """⊤ : Γ → ◊"""
    ctx: Context

    def __str__(self) -> str:
        return "⊤"


@dataclass(frozen=True)
class FirstProj(Term):
    """p(A) : Γ.A → Γ"""
    ctx: Context

    def __str__(self) -> str:
        return "p"


@dataclass(frozen=True)
class Var(Term):
    """v_k：上下文中第 k 个（从新到旧）分量的 dereliction"""
    ctx: Context
    index: int

    def __str__(self) -> str:
        return f"v{self.index}"


@dataclass(frozen=True)
class Extension(Term):
    """⟨φ, τ⟩ : Δ → Γ.A，ty 为 Γ 上的 A"""
    mor: Term
    term: Term
    ty: DependentType

    def __str__(self) -> str:
        return f"⟨{self.mor}, {self.term}⟩"


@dataclass(frozen=True)
class SubstTm(Term):
    """a{φ} = a • φ；body 为态射时就是态射的复合"""
    body: Term
    mor: Term

    def __str__(self) -> str:
        return f"{self.body}{{{self.mor}}}"


@dataclass(frozen=True)
class Lambda(Term):
    body: Term

    def __str__(self) -> str:
        return f"Λ({self.body})"


@dataclass(frozen=True)
class LambdaInv(Term):
    fun: Term

    def __str__(self) -> str:
        return f"Λ⁻¹({self.fun})"


@dataclass(frozen=True)
class Numeral(Term):
    ctx: Context
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Star(Term):
    ctx: Context

    def __str__(self) -> str:
        return "⋆"


@dataclass(frozen=True)
class SuccM(Term):
    """Γ.N ⊢ s : N，先询问最新的 N 分量再回答 n+1"""
    ctx: Context

    def __str__(self) -> str:
        return "succ"


@dataclass(frozen=True)
class Code(Term):
    """A̲ : U_level，查询 A 提到的平坦分量后回答 A 的名字"""
    ctx: Context
    ty: DependentType
    level: int

    def __str__(self) -> str:
        return f"⌜{self.ty}⌝"


@dataclass(frozen=True)
class RNat(Term):
    """Γ.N ⊢ R^N(C, c_z, c_s) : C，按需展开不动点，budget 为展开次数上限"""
    ctx: Context
    motive: DependentType
    zero_case: Term
    succ_case: Term
    budget: int = 64

    def __str__(self) -> str:
        return f"R^N({self.motive}, {self.zero_case}, {self.succ_case})"


@dataclass(frozen=True)
class REmpty(Term):
    """Γ.𝟘 ⊢ R^𝟘(C) : C，把第一步改为在 𝟘 分量中提问"""
    ctx: Context
    motive: DependentType

    def __str__(self) -> str:
        return f"R^𝟘({self.motive})"


@dataclass(frozen=True)
class Refl(Term):
    """refl：Îd 上的 flip"""
    ctx: Context
    ty: DependentType
    term: Term

    def __str__(self) -> str:
        return f"refl({self.term})"


@dataclass(frozen=True)
class PairMor(Term):
    """Pair : Γ.A.B → Γ.Σ(A, B)"""
    ctx: Context
    dom: DependentType
    cod: DependentType

    def __str__(self) -> str:
        return "Pair"


@dataclass(frozen=True)
class PairInv(Term):
    """Pair⁻¹ : Γ.Σ(A, B) → Γ.A.B"""
    ctx: Context
    dom: DependentType
    cod: DependentType

    def __str__(self) -> str:
        return "Pair⁻¹"


@dataclass(frozen=True)
class ReflInv(Term):
    """Refl⁻¹ : Γ.A.A⁺.Id → Γ.A"""
    ctx: Context
    ty: DependentType

    def __str__(self) -> str:
        return "Refl⁻¹"


NODE_KINDS: Dict[str, Type[Node]] = {
    cls.__name__: cls
    for cls in (Const, Univ, ElOf, SubstTy, PiTy, SigmaTy, IdTy, Family,
                Identity, Top, FirstProj, Var, Extension, SubstTm, Lambda, LambdaInv, Numeral, Star,
                SuccM, Code, RNat, REmpty, Refl, PairMor, PairInv, ReflInv)
}


def _encode(value: Any) -> Any:
    if isinstance(value, Node):
        return value.to_dict()
    if isinstance(value, tuple):
        return {"ctx": [_encode(v) for v in value]}
    return value


def _decode(value: Any) -> Any:
    if isinstance(value, dict) and "ctx" in value:
        return tuple(_decode(v) for v in value["ctx"])
    if isinstance(value, dict) and "kind" in value:
        return node_from_dict(value)
    return value


def node_from_dict(data: Dict[str, Any]) -> Node:
    cls = NODE_KINDS.get(data.get("kind", ""))
    if cls is None or not is_dataclass(cls):
        raise DecodeError(f"未知的语法节点 {data.get('kind')!r}")
    kwargs = {f.name: _decode(data[f.name]) for f in fields(cls) if f.name in data}
    return cls(**kwargs)


def context_to_list(ctx: Context) -> list:
    return [ty.to_dict() for ty in ctx]


def show_context(ctx: Context) -> str:
    return "◊" if not ctx else "◊." + ".".join(str(ty) for ty in ctx)

"""把 de Bruijn 语法打印回源文本，输出可被 parse_expr 重新读入"""

from typing import List, Sequence, Tuple

from .lexer import KEYWORDS
from .syntax import (BUILTIN_TYPES, App, Builtin, El, EmptyTy, En, Expr, Id, Lam, NatTy, Pair, Pi, RId, REmpty,
                     Refl, RNat, RSigma, RUnit, Sigma, Star, Succ, UnitTy, Universe, Var, Zero, numeral_value,
                     occurs)

LOOSE, APP, ATOM = 0, 1, 2

RESERVED = KEYWORDS | set(BUILTIN_TYPES)


def fresh(name: str, names: Sequence[str], used: bool = True) -> str:
    if name == "_" and not used:
        return name
    base = "x" if name in ("", "_") else name.rstrip("0123456789") or "x"
    candidate, k = (name if name not in ("", "_") else base), 0
    while candidate in names or candidate in RESERVED:
        k += 1
        candidate = f"{base}{k}"
    return candidate


def _wrap(text: str, level: int, needed: int) -> str:
    return f"({text})" if level < needed else text


class Printer:
    def __init__(self, names: Sequence[str] = ()):
        self.names: List[str] = list(names)

    def bind(self, name: str, body: Expr, depth: int = 0) -> str:
        """为 body 中下标 depth 的绑定选名并压栈"""
        chosen = fresh(name, self.names, occurs(body, depth))
        self.names.append(chosen)
        return chosen

    def scoped(self, names: Tuple[str, ...], body: Expr) -> str:
        chosen = []
        for k, name in enumerate(names):
            chosen.append(self.bind(name, body, len(names) - 1 - k))
        text = self.show(body, LOOSE)
        del self.names[len(self.names) - len(names):]
        return f"{' '.join(chosen)}. {text}" if names else text

    def show(self, e: Expr, needed: int = LOOSE) -> str:
        match e:
            case Var(index=i):
                return self.names[-1 - i] if i < len(self.names) else f"#{i}"
            case UnitTy():
                return "Unit"
            case EmptyTy():
                return "Empty"
            case NatTy():
                return "N"
            case Universe(level=k):
                return f"U{k}"
            case Builtin(name=name):
                return name
            case Star():
                return "star"
            case Zero():
                return "zero"
            case Succ(arg=arg):
                value = numeral_value(e)
                if value is not None:
                    return str(value)
                return _wrap(f"succ {self.show(arg, ATOM)}", APP, needed)
            case Refl(term=term):
                return _wrap(f"refl {self.show(term, ATOM)}", APP, needed)
            case El(code=code):
                return _wrap(f"El {self.show(code, ATOM)}", APP, needed)
            case En(ty=ty):
                return _wrap(f"En {self.show(ty, ATOM)}", APP, needed)
            case Id(ty=ty, left=left, right=right):
                parts = " ".join(self.show(x, ATOM) for x in (ty, left, right))
                return _wrap(f"Id {parts}", APP, needed)
            case App(fun=fun, arg=arg):
                return _wrap(f"{self.show(fun, APP)} {self.show(arg, ATOM)}", APP, needed)
            case Pair(fst=fst, snd=snd):
                return f"({self.show(fst)}, {self.show(snd)})"
            case Pi(dom=dom, cod=cod, name=name) if not occurs(cod, 0):
                left = self.show(dom, APP)
                self.names.append("_")
                right = self.show(cod, LOOSE)
                self.names.pop()
                return _wrap(f"{left} -> {right}", LOOSE, needed)
            case Pi(dom=dom, cod=cod, name=name) | Sigma(dom=dom, cod=cod, name=name):
                former = "Pi" if isinstance(e, Pi) else "Sigma"
                dom_text = self.show(dom)
                var = self.bind(name, cod)
                body = self.show(cod)
                self.names.pop()
                return _wrap(f"{former} ({var} : {dom_text}) . {body}", LOOSE, needed)
            case Lam(dom=dom, body=body, name=name):
                dom_text = self.show(dom)
                var = self.bind(name, body)
                text = self.show(body)
                self.names.pop()
                return _wrap(f"fun ({var} : {dom_text}) -> {text}", LOOSE, needed)
            case RUnit(motive=c, case=case, target=a, names=names):
                return f"R_1({self.scoped(names[:1], c)}, {self.show(case)}, {self.show(a)})"
            case REmpty(motive=c, target=a, names=names):
                return f"R_0({self.scoped(names[:1], c)}, {self.show(a)})"
            case RNat(motive=c, zero_case=z, succ_case=s, target=n, names=names):
                return (f"R_N({self.scoped(names[:1], c)}, {self.show(z)}, "
                        f"{self.scoped(names[1:3], s)}, {self.show(n)})")
            case RSigma(motive=c, case=g, target=p, names=names):
                return f"R_S({self.scoped(names[:1], c)}, {self.scoped(names[1:3], g)}, {self.show(p)})"
            case RId(motive=c, case=case, left=a, right=b, proof=q, names=names):
                return (f"R_Id({self.scoped(names[:3], c)}, {self.scoped(names[3:4], case)}, "
                        f"{self.show(a)}, {self.show(b)}, {self.show(q)})")
        raise TypeError(f"无法打印 {type(e).__name__}")


def show(e: Expr, names: Sequence[str] = ()) -> str:
    return Printer(names).show(e)

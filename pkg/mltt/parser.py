"""MLTT 源文件的递归下降解析

文法（省略空白与 -- 注释）：

    file     := (ctxdecl | def)*
    ctxdecl  := 'ctx' IDENT '=' '(' [IDENT ':' expr (',' IDENT ':' expr)*] ')'
    def      := 'def' IDENT ['in' IDENT] ':' expr '=' expr
    expr     := 'fun' binders '->' expr | 'Pi' binders '.' expr | 'Sigma' binders '.' expr
              | app ['->' expr]
    binders  := ('(' IDENT+ ':' expr ')')+
    app      := prefix prefix*
    prefix   := ('succ' | 'refl' | 'El' | 'En') atom | 'Id' atom atom atom | atom
    atom     := IDENT | NUMBER | U<k> | Unit | Empty | N | star | zero
              | '(' expr (',' expr)* ')' | R_x '(' scoped (',' scoped)* ')'
    scoped   := [IDENT+ '.'] expr

定义在引用处内联；闭定义处处可用，带上下文的定义只能在同一上下文中引用。
"""

import logging
from dataclasses import dataclass, field
from typing import Deque, Dict, List, Optional, Sequence, Tuple

from core.errors import ParseError

from .lexer import EOF, SourceLocation, Token, lex
from .syntax import (BUILTIN_TYPES, EMPTY, NAT, UNIT, App, Builtin, El, En, Expr, Id, Lam, Pair, Pi, RId, REmpty,
                     Refl, RNat, RSigma, RUnit, Sigma, Star, Succ, Telescope, Universe, Var, Zero, arrow, numeral,
                     shift)

logger = logging.getLogger(__name__)

# 各消去子每个参数的绑定个数
ELIMINATOR_SHAPES: Dict[str, Tuple[int, ...]] = {
    "R_1": (1, 0, 0),
    "R_0": (1, 0),
    "R_N": (1, 0, 2, 0),
    "R_S": (1, 2, 0),
    "R_Id": (3, 1, 0, 0, 0),
}


@dataclass(frozen=True)
class ContextDecl:
    name: str
    telescope: Telescope
    location: SourceLocation = field(default=SourceLocation(), compare=False)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.telescope)


@dataclass(frozen=True)
class Definition:
    name: str
    ty: Expr
    term: Expr
    context: Optional[ContextDecl] = None
    location: SourceLocation = field(default=SourceLocation(), compare=False)

    @property
    def telescope(self) -> Telescope:
        return self.context.telescope if self.context else ()


@dataclass
class SourceFile:
    contexts: Dict[str, ContextDecl] = field(default_factory=dict)
    definitions: Dict[str, Definition] = field(default_factory=dict)
    errors: List[ParseError] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


class Parser:
    """在一串记号上解析；scope 是当前可见的局部变量名，最新的在末尾"""

    def __init__(self, tokens: Deque[Token], source: Optional[SourceFile] = None):
        self.tokens = tokens
        self.source = source or SourceFile()
        self.scope: List[str] = []
        self.context: Optional[ContextDecl] = None
        self.logger = logging.getLogger(self.__class__.__name__)

    # ---- 记号 ----

    def peek(self, offset: int = 0) -> Token:
        if offset < len(self.tokens):
            return self.tokens[offset]
        return self.tokens[-1]

    def advance(self) -> Token:
        token = self.tokens[0]
        if token.kind != EOF:
            self.tokens.popleft()
        return token

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, token.location.line, token.location.column)

    def expect(self, text: str) -> Token:
        token = self.peek()
        if not token.is_(text):
            shown = token.text or "文件结尾"
            raise self.error(f"期望 '{text}'，得到 '{shown}'")
        return self.advance()

    def ident(self) -> Token:
        token = self.peek()
        if token.kind != "ident":
            raise self.error(f"期望标识符，得到 '{token.text or '文件结尾'}'")
        return self.advance()

    # ---- 顶层 ----

    def parse_file(self) -> SourceFile:
        while self.peek().kind != EOF:
            try:
                if self.peek().is_("ctx"):
                    self.context_decl()
                elif self.peek().is_("def"):
                    self.definition()
                else:
                    token = self.advance()
                    raise self.error(f"期望 'def' 或 'ctx'，得到 '{token.text}'", token)
            except ParseError as e:
                self.logger.debug(f"解析错误，跳到下一个声明: {e}")
                self.source.errors.append(e)
                self.recover()
        return self.source

    def recover(self):
        """跳到下一个 def 或 ctx；声明关键字已被消耗，总有进展"""
        while self.peek().kind != EOF and not (self.peek().is_("def") or self.peek().is_("ctx")):
            self.advance()

    def context_decl(self) -> ContextDecl:
        start = self.expect("ctx")
        name = self.ident().text
        if name in self.source.contexts:
            raise self.error(f"上下文 {name} 重复声明", start)
        self.expect("=")
        self.expect("(")
        entries: List[Tuple[str, Expr]] = []
        self.scope, self.context = [], None
        if not self.peek().is_(")"):
            while True:
                var = self.ident().text
                self.expect(":")
                entries.append((var, self.expr()))
                self.scope.append(var)
                if not self.peek().is_(","):
                    break
                self.advance()
        self.expect(")")
        self.scope = []
        decl = ContextDecl(name, tuple(entries), start.location)
        self.source.contexts[name] = decl
        return decl

    def definition(self) -> Definition:
        start = self.expect("def")
        name = self.ident().text
        if name in self.source.definitions:
            raise self.error(f"定义 {name} 重复", start)
        context = None
        if self.peek().is_("in"):
            self.advance()
            token = self.ident()
            context = self.source.contexts.get(token.text)
            if context is None:
                raise self.error(f"未知上下文 {token.text}", token)
        self.context = context
        self.scope = list(context.names) if context else []
        try:
            self.expect(":")
            ty = self.expr()
            self.expect("=")
            term = self.expr()
        finally:
            self.scope, self.context = [], None
        definition = Definition(name, ty, term, context, start.location)
        self.source.definitions[name] = definition
        return definition

    # ---- 表达式 ----

    def expr(self) -> Expr:
        token = self.peek()
        if token.is_("fun"):
            self.advance()
            binders = self.binders()
            self.expect("->")
            return self.close(binders, Lam)
        if token.is_("Pi") or token.is_("Sigma"):
            self.advance()
            binders = self.binders()
            self.expect(".")
            return self.close(binders, Pi if token.text == "Pi" else Sigma)
        left = self.app()
        if self.peek().is_("->"):
            self.advance()
            return arrow(left, self.expr())
        return left

    def binders(self) -> List[Tuple[str, Expr]]:
        """读入绑定组并把名字压入作用域；调用者负责弹出"""
        result: List[Tuple[str, Expr]] = []
        if not self.peek().is_("("):
            raise self.error("期望绑定 '(x : A)'")
        while self.peek().is_("("):
            self.advance()
            names = [self.ident().text]
            while self.peek().kind == "ident":
                names.append(self.advance().text)
            self.expect(":")
            ty = self.expr()
            self.expect(")")
            for offset, name in enumerate(names):
                result.append((name, shift(ty, offset)))
                self.scope.append(name)
        return result

    def close(self, binders: List[Tuple[str, Expr]], former) -> Expr:
        body = self.expr()
        for name, ty in reversed(binders):
            self.scope.pop()
            body = former(ty, body, name)
        return body

    def starts_atom(self, token: Token) -> bool:
        if token.kind in ("ident", "number", "universe"):
            return True
        return token.kind == "keyword" and token.text in (
            "Unit", "Empty", "N", "star", "zero", "succ", "refl", "El", "En", "Id", *ELIMINATOR_SHAPES) \
            or token.is_("(")

    def app(self) -> Expr:
        head = self.prefix()
        while self.starts_atom(self.peek()):
            head = App(head, self.prefix())
        return head

    def prefix(self) -> Expr:
        token = self.peek()
        if token.kind == "keyword":
            if token.text == "succ":
                self.advance()
                return Succ(self.prefix())
            if token.text == "refl":
                self.advance()
                return Refl(self.prefix())
            if token.text == "El":
                self.advance()
                return El(self.prefix())
            if token.text == "En":
                self.advance()
                return En(self.prefix())
            if token.text == "Id":
                self.advance()
                return Id(self.atom(), self.atom(), self.atom())
        return self.atom()

    def atom(self) -> Expr:
        token = self.peek()
        if token.kind == "ident":
            self.advance()
            return self.resolve(token)
        if token.kind == "number":
            self.advance()
            return numeral(int(token.text))
        if token.kind == "universe":
            self.advance()
            return Universe(int(token.text[1:]))
        if token.kind == "keyword":
            constants = {"Unit": UNIT, "Empty": EMPTY, "N": NAT, "star": Star(), "zero": Zero()}
            if token.text in constants:
                self.advance()
                return constants[token.text]
            if token.text in ELIMINATOR_SHAPES:
                return self.eliminator()
            if token.text in ("succ", "refl", "El", "En", "Id"):
                return self.prefix()
        if token.is_("("):
            self.advance()
            items = [self.expr()]
            while self.peek().is_(","):
                self.advance()
                items.append(self.expr())
            self.expect(")")
            result = items[-1]
            for item in reversed(items[:-1]):
                result = Pair(item, result)
            return result
        raise self.error(f"意外的记号 '{token.text or '文件结尾'}'")

    def resolve(self, token: Token) -> Expr:
        name = token.text
        if name != "_":
            for index, bound in enumerate(reversed(self.scope)):
                if bound == name:
                    return Var(index, name)
        definition = self.source.definitions.get(name)
        if definition is not None:
            return self.inline(definition, token)
        if name in BUILTIN_TYPES:
            return Builtin(name)
        raise self.error(f"未绑定的变量 {name}", token)

    def inline(self, definition: Definition, token: Token) -> Expr:
        if definition.context is None:
            return shift(definition.term, len(self.scope))
        if self.context is None or self.context.name != definition.context.name:
            raise self.error(f"定义 {definition.name} 位于上下文 {definition.context.name}，不能在此引用", token)
        return shift(definition.term, len(self.scope) - len(definition.context.telescope))

    def scoped(self, expected: int) -> Tuple[Tuple[str, ...], Expr]:
        names: List[str] = []
        offset = 0
        while self.peek(offset).kind == "ident":
            offset += 1
        if offset and self.peek(offset).is_("."):
            names = [self.advance().text for _ in range(offset)]
            self.expect(".")
        if names and len(names) != expected:
            raise self.error(f"这里需要 {expected} 个绑定，得到 {len(names)} 个")
        if not names:
            names = ["_"] * expected
        self.scope.extend(names)
        try:
            body = self.expr()
        finally:
            del self.scope[len(self.scope) - len(names):]
        return tuple(names), body

    def eliminator(self) -> Expr:
        keyword = self.advance()
        shape = ELIMINATOR_SHAPES[keyword.text]
        self.expect("(")
        parts: List[Tuple[Tuple[str, ...], Expr]] = []
        for position, binds in enumerate(shape):
            if position:
                self.expect(",")
            parts.append(self.scoped(binds))
        self.expect(")")
        names = tuple(name for part_names, _ in parts for name in part_names)
        bodies = [body for _, body in parts]
        builders = {
            "R_1": lambda: RUnit(*bodies, names=names),
            "R_0": lambda: REmpty(*bodies, names=names),
            "R_N": lambda: RNat(*bodies, names=names),
            "R_S": lambda: RSigma(*bodies, names=names),
            "R_Id": lambda: RId(*bodies, names=names),
        }
        return builders[keyword.text]()


def parse_file(text: str, source: Optional[SourceFile] = None) -> SourceFile:
    """解析整个文件；source 给出时在其已有声明之上继续（如前导库）"""
    try:
        tokens = lex(text)
    except ParseError as e:
        result = source or SourceFile()
        result.errors.append(e)
        return result
    if source is not None:
        source = SourceFile(dict(source.contexts), dict(source.definitions), [])
    return Parser(tokens, source).parse_file()


def parse_expr(text: str, names: Sequence[str] = (), source: Optional[SourceFile] = None) -> Expr:
    """解析单个表达式；names 是外层上下文的变量名，从旧到新"""
    parser = Parser(lex(text), source)
    parser.scope = list(names)
    expr = parser.expr()
    if parser.peek().kind != EOF:
        raise parser.error(f"表达式后有多余的记号 '{parser.peek().text}'")
    return expr


def parse_telescope(text: str, source: Optional[SourceFile] = None) -> Telescope:
    """解析 '(x : A, y : B)' 形式的上下文"""
    scratch = SourceFile(dict(source.contexts), dict(source.definitions)) if source else SourceFile()
    parser = Parser(lex(f"ctx _ = {text}"), scratch)
    decl = parser.context_decl()
    if parser.peek().kind != EOF:
        raise parser.error("上下文后有多余的记号")
    return decl.telescope

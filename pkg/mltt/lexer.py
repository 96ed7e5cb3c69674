"""MLTT 源文本的词法分析"""

import re
from collections import deque
from dataclasses import dataclass
from typing import Deque

from core.errors import ParseError

KEYWORDS = frozenset({
    "def", "ctx", "in", "Pi", "Sigma", "fun", "Id", "El", "En", "succ", "refl", "star", "zero",
    "Unit", "Empty", "N", "R_1", "R_0", "R_N", "R_S", "R_Id",
})

SYMBOLS = ("->", "(", ")", ",", ":", ".", "=")

_TOKEN = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>--[^\n]*)
  | (?P<universe>U(?P<level>[0-9]+)(?![A-Za-z0-9_']))
  | (?P<number>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<symbol>->|[(),:.=])
""", re.VERBOSE)


@dataclass(frozen=True)
class SourceLocation:
    line: int = 1
    column: int = 1

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    location: SourceLocation

    def is_(self, text: str) -> bool:
        return self.kind in ("keyword", "symbol") and self.text == text


EOF = "eof"


def lex(source: str) -> Deque[Token]:
    """切分为带位置的记号，末尾附加一个 eof 记号"""
    tokens: Deque[Token] = deque()
    line, line_start, index = 1, 0, 0
    while index < len(source):
        match = _TOKEN.match(source, index)
        if match is None:
            raise ParseError(f"无法识别的字符 {source[index]!r}", line, index - line_start + 1)
        kind = match.lastgroup
        if kind == "level":
            kind = "universe"
        location = SourceLocation(line, index - line_start + 1)
        text = match.group(0)
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind == "ident":
            tokens.append(Token("keyword" if text in KEYWORDS else "ident", text, location))
        elif kind in ("universe", "number", "symbol"):
            tokens.append(Token(kind, text, location))
        index = match.end()
    tokens.append(Token(EOF, "", SourceLocation(line, index - line_start + 1)))
    return tokens

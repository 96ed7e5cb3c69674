"""copy-cat 与 dereliction。

CopyCat 由若干 (值域前缀, 定义域前缀) 对描述：Opponent 在一侧走子，
Player 在对应的另一侧走出相同的走子，指针镜像到伙伴出现上。
"""

import logging
from typing import List, Optional, Sequence, Tuple

from arena.position import Position
from core.errors import StrategyError
from games.constructions import BangGame, LollipopGame
from games.game import Extension, Game

from .oracle import StrategyOracle

logger = logging.getLogger(__name__)

Prefix = Tuple[str, ...]
CopyPair = Tuple[Prefix, Prefix]


class CopyCat(StrategyOracle):
    """按前缀对镜像 Opponent 走子的策略；偶数位置上走子两两成对"""

    def __init__(self, game: Game, pairs: Sequence[CopyPair], name: str = "cp"):
        super().__init__(game, name)
        self.pairs: List[CopyPair] = [(tuple(c), tuple(d)) for c, d in pairs]

    def next_move(self, s: Position) -> Optional[Extension]:
        last = len(s) - 1
        move = s.last
        j = s.justifiers[last]
        if j is None:
            for codomain, domain in sorted(self.pairs, key=lambda p: -len(p[0])):
                if move.has_prefix(codomain):
                    return move.retagged(codomain, domain), last
            return None
        partner = j ^ 1
        if partner >= len(s):
            return None
        best: Optional[Tuple[int, Prefix, Prefix]] = None
        for codomain, domain in self.pairs:
            for mine, other in ((codomain, domain), (domain, codomain)):
                if not (move.has_prefix(mine) and s.moves[j].has_prefix(mine)):
                    continue
                if not s.moves[partner].has_prefix(other):
                    continue
                if best is None or len(mine) > best[0]:
                    best = (len(mine), mine, other)
        if best is None:
            return None
        _, mine, other = best
        return move.retagged(mine, other), partner


def copy_cat(game: Game) -> CopyCat:
    """cp_A : A ⊸ A"""
    return CopyCat(LollipopGame(game, game), [(("R",), ("L",))], name="cp")


def dereliction(game: Game, thread_bound: int = 3) -> CopyCat:
    """der_A : !A ⊸ A，要求 A 良开"""
    if not game.well_opened:
        raise StrategyError(f"dereliction 要求良开的游戏，{game!r} 不是")
    return CopyCat(LollipopGame(BangGame(game, thread_bound), game), [(("R",), ("L", "!"))], name="der")

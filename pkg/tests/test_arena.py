"""竞技场层测试：标签、使能、视图、合法性与线程"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arena.arena import (BangArena, ExplicitArena, LollipopArena, SumArena, finite_flat_arena, nat_flat_arena,
                         validate_arena)
from arena.moves import CHECK, QUESTION, MoveLabel, RankedMove
from arena.position import EMPTY, Position
from arena.views import is_legal, legal_extension, o_view, p_view, p_view_indices, thread, threads
from core.errors import ArenaError
from games.game import ArenaGame

from conftest import pos, random_play

N = nat_flat_arena()
Q = QUESTION


def test_flat_labels():
    assert N.label(Q) is MoveLabel.OQ
    assert N.label(RankedMove(3)) is MoveLabel.PA
    assert N.label(RankedMove("x")) is None
    assert N.is_initial(Q)
    assert not N.is_initial(RankedMove(0))


def test_ranked_move_tags():
    m = RankedMove(2).tagged("L", "!")
    assert m.tag_path == ("L", "!")
    assert m.untagged() == RankedMove(2).tagged("!")
    assert m.retagged(("L", "!"), ("R",)) == RankedMove(2).tagged("R")
    assert str(RankedMove(7, 2)) == "[7]_2"


def test_lollipop_flips_left_labels():
    arena = LollipopArena(N, N)
    assert arena.label(Q.tagged("L")) is MoveLabel.PQ
    assert arena.label(RankedMove(4).tagged("L")) is MoveLabel.OA
    assert arena.enables(None, Q.tagged("R"))
    assert not arena.enables(None, Q.tagged("L"))
    assert arena.enables(Q.tagged("R"), Q.tagged("L"))


def test_sum_arena_keeps_sides_apart():
    arena = SumArena(N, finite_flat_arena("Unit", [CHECK]))
    assert arena.enables(Q.tagged("R"), CHECK.tagged("R"))
    assert not arena.enables(Q.tagged("L"), CHECK.tagged("R"))


@pytest.mark.parametrize("arena", [N, LollipopArena(N, N), BangArena(N), LollipopArena(BangArena(N), N)])
def test_constructed_arenas_are_valid(arena):
    assert validate_arena(arena, 3) == []


def test_validate_arena_reports_root_answer():
    a = RankedMove("a")
    arena = ExplicitArena({a: MoveLabel.PA}, frozenset({(None, a)}))
    clauses = {v.clause for v in validate_arena(arena)}
    assert "E1" in clauses


def test_keep_drops_pointers_to_removed_occurrences():
    s = pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (RankedMove(3).tagged("L"), 1))
    kept = s.keep([1, 2])
    assert kept.justifiers == (None, 0)
    assert s.restrict_prefix(("L",)).moves == (Q, RankedMove(3))


def test_legal_lollipop_play():
    arena = LollipopArena(N, N)
    s = pos((Q.tagged("R"), None), (Q.tagged("L"), 0), (RankedMove(3).tagged("L"), 1),
            (RankedMove(4).tagged("R"), 0))
    assert is_legal(arena, s)


@pytest.mark.parametrize("s,clause", [
    (pos((Q.tagged("R"), None), (Q.tagged("R"), None)), "alternation"),
    (pos((Q.tagged("R"), None), (RankedMove(3).tagged("L"), 0)), "justification"),
    (pos((Q.tagged("L"), None),), "justification"),
])
def test_illegal_plays_name_the_clause(s, clause):
    verdict = is_legal(LollipopArena(N, N), s)
    assert not verdict
    assert verdict.clause == clause


def test_visibility_violation():
    arena = LollipopArena(BangArena(N), N)
    ask = Q.tagged("L", "!")
    s = pos((Q.tagged("R"), None), (ask, 0), (RankedMove(3).tagged("L", "!"), 1), (ask, 0))
    assert is_legal(arena, s)
    verdict = legal_extension(arena, s, RankedMove(4).tagged("L", "!"), 1)
    assert not verdict
    assert verdict.clause == "visibility"
    assert legal_extension(arena, s, RankedMove(4).tagged("L", "!"), 3)


def test_views():
    arena = LollipopArena(BangArena(N), N)
    ask = Q.tagged("L", "!")
    s = pos((Q.tagged("R"), None), (ask, 0), (RankedMove(3).tagged("L", "!"), 1), (ask, 0))
    assert p_view_indices(s, arena) == [0, 1, 2, 3]
    assert o_view(s, arena).moves == (Q.tagged("R"), ask)
    assert len(p_view(EMPTY)) == 0


def test_threads_split_by_hereditary_root():
    s = pos((Q, None), (RankedMove(1), 0), (Q, None), (RankedMove(2), 2))
    parts = threads(s)
    assert [t.moves for t in parts] == [(Q, RankedMove(1)), (Q, RankedMove(2))]
    with pytest.raises(ArenaError):
        thread(s, [1])


def test_position_serialisation():
    s = pos((Q.tagged("R"), None), (RankedMove(5).tagged("R"), 0))
    assert Position.from_list(s.to_list()) == s
    assert str(s) == "R:q · R:5@0"


PLAY_GAME = ArenaGame(LollipopArena(BangArena(N), N))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=20), max_size=7))
def test_legality_is_prefix_closed(choices):
    s = random_play(PLAY_GAME, choices)
    for t in s.prefixes():
        assert is_legal(PLAY_GAME.arena, t)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=20), max_size=7))
def test_p_view_is_idempotent(choices):
    arena = PLAY_GAME.arena
    s = random_play(PLAY_GAME, choices)
    view = p_view(s, arena)
    assert p_view(view, arena) == view

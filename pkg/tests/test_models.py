"""输入校验模型测试"""

import pytest
from pydantic import ValidationError

from arena.moves import QUESTION, RankedMove
from arena.position import Position
from models.bounds import Bounds
from models.records import GameRecord, PositionRecord, TraceEventRecord

from conftest import pos


def test_bounds_defaults_and_overrides():
    bounds = Bounds()
    assert (bounds.alphabet, bounds.depth, bounds.steps) == (32, 10, 4096)
    tighter = bounds.with_overrides(depth=4, alphabet=None)
    assert tighter.depth == 4
    assert tighter.alphabet == 32
    assert bounds.depth == 10


@pytest.mark.parametrize("field", ["alphabet", "depth", "unfold", "steps", "thread_bound"])
def test_bounds_must_be_positive(field):
    with pytest.raises(ValidationError):
        Bounds(**{field: 0})


def test_bounds_are_frozen():
    with pytest.raises(ValidationError):
        Bounds().depth = 3


def test_position_record_rejects_forward_pointers():
    with pytest.raises(ValidationError):
        PositionRecord.parse('[{"ident": "q", "justifier": 1}, {"ident": 3, "justifier": 0}]')
    with pytest.raises(ValidationError):
        PositionRecord.parse([{"ident": "q", "justifier": 0}])


def test_position_record_feeds_positions():
    s = pos((QUESTION.tagged("R"), None), (RankedMove(5).tagged("R"), 0))
    record = PositionRecord.parse(s.to_list())
    assert Position.from_list(record.to_list()) == s


def test_trace_event_component():
    TraceEventRecord(component="B1", move={"ident": "q"}, justifier=0, hidden=True)
    with pytest.raises(ValidationError):
        TraceEventRecord(component="D", move={"ident": "q"})


def test_game_record_labels():
    with pytest.raises(ValidationError):
        GameRecord(moves=[{"ident": "q"}], labels=["XQ"], enables=[[None, {"ident": "q"}]], positions=[])

"""解释器服务测试：求值、对弈、轨迹、等价与注册表持久化"""

import pytest

from arena.views import is_legal
from core.errors import LudicError
from core.ludic_context import LudicContext
from engine.oracle import ResponseStatus
from models.bounds import Bounds
from services.interpreter_service import InterpreterService
from services.law_service import LawService
from services.play_session import parse_move

from conftest import CORPUS

FUNCTIONS = CORPUS / "functions.mltt"
NUMERALS = CORPUS / "numerals.mltt"


@pytest.fixture
def context() -> LudicContext:
    return LudicContext(Bounds())


@pytest.fixture
def service(context) -> InterpreterService:
    return InterpreterService(context)


@pytest.fixture
def numerals_file(tmp_path):
    lines = []
    for k in range(33):
        lines.append(f"def num{k} : N = " + "succ (" * k + "zero" + ")" * k)
    path = tmp_path / "numerals.mltt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def arithmetic_file(tmp_path):
    path = tmp_path / "arith.mltt"
    path.write_text(
        "def doubled : N = double 3\n"
        "def literal : N = 6\n"
        "def summed : N = add 3 3\n"
        "def other : N = 7\n"
        "def slow : N = R_N(x. N, zero, x y. succ y, 5)\n",
        encoding="utf-8")
    return path


# ---- eval ----

@pytest.mark.parametrize("k", range(33))
def test_eval_numerals_agrees_with_normalization(service, numerals_file, k):
    result = service.evaluate(numerals_file, f"num{k}")
    assert result.status is ResponseStatus.RESPONDED
    assert result.value == str(k)
    assert result.agrees is True


@pytest.mark.parametrize("name, value", [("six", "6"), ("seven", "7"), ("four", "4")])
def test_eval_through_interaction(service, name, value):
    result = service.evaluate(FUNCTIONS, name)
    assert result.value == value
    assert result.agrees


def test_eval_unit(service):
    result = service.evaluate(NUMERALS, "unit_value")
    assert result.kind == "Unit"
    assert result.value == "★"
    assert result.agrees


def test_eval_code_decodes_a_registered_name(service, context):
    result = service.evaluate(CORPUS / "universes.mltt", "nat_code")
    assert result.kind == "U0"
    entry = context.registry.decode(result.move)
    assert entry is not None
    assert result.detail["construction_number"] == entry.number


def test_eval_rejects_functions_and_open_terms(service):
    with pytest.raises(LudicError, match="play"):
        service.evaluate(FUNCTIONS, "succ_then_double")
    with pytest.raises(LudicError, match="play"):
        service.evaluate(CORPUS / "contexts.mltt", "sum")


def test_eval_reports_divergence_distinctly(arithmetic_file):
    service = InterpreterService(LudicContext(Bounds(unfold=2)))
    result = service.evaluate(arithmetic_file, "slow")
    assert result.status is ResponseStatus.DIVERGED
    assert result.value is None


def test_unknown_definition(service):
    with pytest.raises(LudicError, match="missing"):
        service.evaluate(NUMERALS, "missing")


# ---- play ----

def test_parse_move_forms():
    move, j, explicit = parse_move("L.!:q @ 1")
    assert (move.ident, move.tag_path, j, explicit) == ("q", ("L", "!"), 1, True)
    move, j, explicit = parse_move("3")
    assert (move.ident, j, explicit) == (3, None, False)
    move, _, _ = parse_move("[4]_2")
    assert (move.ident, move.rank) == (4, 2)
    with pytest.raises(LudicError):
        parse_move("q @")


def test_play_against_double(service):
    session = service.play(FUNCTIONS, "double")
    first = session.play("q")
    assert first.outcome.responded and first.outcome.move.ident == "q"
    second = session.play("3")
    assert second.outcome.move.ident == 6
    assert second.outcome.justifier == 0
    assert is_legal(session.game.arena, session.position)


@pytest.mark.parametrize("n", range(11))
def test_play_succ_then_double(service, n):
    session = service.play(FUNCTIONS, "succ_then_double")
    session.play("q")
    step = session.play(str(n))
    assert step.outcome.move.ident == 2 * (n + 1)


def test_play_bad_justifier_is_explained(service):
    session = service.play(FUNCTIONS, "double")
    session.play("q")
    with pytest.raises(LudicError, match="justification"):
        session.play("3 @ 0")
    assert len(session.position) == 2


def test_undo_removes_the_last_pair(service):
    session = service.play(FUNCTIONS, "double")
    session.play("q")
    session.play("3")
    assert len(session.position) == 4
    assert len(session.undo()) == 2
    assert len(session.undo()) == 0
    with pytest.raises(LudicError):
        session.undo()


def test_moves_and_views(service):
    session = service.play(FUNCTIONS, "double")
    opening = session.legal_moves()
    assert opening and all(j is None for _, j in opening)
    session.play("q")
    views = session.views()
    assert set(views) == {"P-view", "O-view"}
    assert len(views["P-view"]) == 2


# ---- trace ----

def test_trace_shows_hidden_interaction(service):
    trace = service.trace(FUNCTIONS, "six", ["q"], hidden=True)
    hidden = [e for e in trace.events if e.hidden]
    assert hidden
    assert {e.component for e in hidden} <= {"B1", "B2"}
    assert trace.visible()[-1].move["ident"] == 6


def test_trace_without_hidden_moves(service):
    trace = service.trace(FUNCTIONS, "double", ["q", "2"])
    assert not any(e.hidden for e in trace.events)
    assert [e.move["ident"] for e in trace.events] == ["q", "q", 2, 4]
    assert trace.events[0].component == "C"
    assert trace.events[1].component == "A"


def test_trace_names_the_illegal_step(service):
    with pytest.raises(LudicError, match="第 2 步"):
        service.trace(NUMERALS, "three", ["q", "7"])


# ---- equiv ----

def test_lazy_and_strict_zero_are_distinguished(service):
    result = service.equiv(FUNCTIONS, "lazy_zero", "strict_zero", 4)
    assert not result.equivalent
    assert len(result.witness) == 1


def test_equal_values_are_equivalent(service, arithmetic_file):
    assert service.equiv(arithmetic_file, "doubled", "literal").equivalent
    assert service.equiv(arithmetic_file, "doubled", "summed").equivalent
    assert not service.equiv(arithmetic_file, "literal", "other").equivalent


def test_equiv_requires_equal_types(service):
    with pytest.raises(LudicError):
        service.equiv(FUNCTIONS, "six", "succ_then_double")


# ---- interp 与注册表 ----

def test_interp_prints_terms_and_construction_number(service):
    result = service.interp(NUMERALS, "three")
    assert result["dependent_game"] == "N"
    assert isinstance(result["construction_number"], int)
    assert result["rank"] == 1


def test_construction_numbers_stable_across_runs(tmp_path):
    path = tmp_path / "registry.json"
    first = LudicContext(Bounds(), path)
    service = InterpreterService(first)
    numbers = {name: service.interp(FUNCTIONS, name)["construction_number"] for name in ("six", "double")}
    first.save_registry()

    second = LudicContext(Bounds(), path)
    service = InterpreterService(second)
    again = {name: service.interp(FUNCTIONS, name)["construction_number"] for name in ("double", "six")}
    assert again == numbers
    assert not second.check_registry()


# ---- laws ----

def test_law_service_scopes(context):
    laws = LawService(context)
    assert laws.engine(samples=5, depth=6).holds
    assert laws.paradox().holds
    with pytest.raises(LudicError):
        laws.run("nonsense")


@pytest.mark.slow
def test_law_service_cwf_scope(context):
    [report] = LawService(context).run("cwf")
    assert report.holds
    assert len(report.laws_passed) == 8

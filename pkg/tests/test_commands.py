"""命令层、配置与命令行入口测试"""

import json

import pytest

from config.ludic_config import LudicConfig
from core.errors import DivergenceError, InvariantBreach, LudicError
from core.ludic_command import CommandRegistry, LudicCommand
from core.ludic_context import LudicContext
from core.ludic_message import LudicMessageType, LudicResponse, LudicStatus
from ludic_interpreter import LudicInterpreter
from main_ludic import apply_overrides, build_parser, main, parameters_of, run_play
from models.bounds import Bounds
from services.interpreter_service import InterpreterService

from conftest import CORPUS


class RaisingCommand(LudicCommand):
    def __init__(self, name: str, error: Exception):
        super().__init__(name, "总是抛出异常", ["x"], {"type": "object"})
        self.error = error

    def run(self, context, parameters):
        raise self.error


class EchoCommand(LudicCommand):
    def __init__(self):
        super().__init__("echo", "原样返回参数", ["x"], {"type": "object"})

    def run(self, context, parameters):
        return LudicResponse.success(str(parameters["x"]))


@pytest.fixture
def commands() -> CommandRegistry:
    registry = CommandRegistry()
    registry.register_command(EchoCommand())
    registry.register_command(RaisingCommand("diverge", DivergenceError("超出预算", steps=12)))
    registry.register_command(RaisingCommand("breach", InvariantBreach("非法回应")))
    registry.register_command(RaisingCommand("domain", LudicError("没有这个定义")))
    registry.register_command(RaisingCommand("crash", ZeroDivisionError("division by zero")))
    return registry


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for key in ("LUDIC_ALPHABET", "LUDIC_DEPTH", "LUDIC_UNFOLD", "LUDIC_STEPS", "LUDIC_THREADS",
                "LUDIC_REGISTRY", "LUDIC_QUIT_WORDS", "DEBUG_MODE", "LOG_FILE"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    return monkeypatch


# ---- 命令注册表 ----

def test_unknown_command_and_missing_parameter(commands):
    context = LudicContext()
    response = commands.execute("nope", context, {})
    assert response.status is LudicStatus.ERROR
    assert "echo" in response.message
    response = commands.execute("echo", context, {"x": None})
    assert response.status is LudicStatus.ERROR
    assert "x" in response.message
    assert commands.execute("echo", context, {"x": 3}).message == "3"


def test_duplicate_registration_is_rejected(commands):
    with pytest.raises(ValueError):
        commands.register_command(EchoCommand())


@pytest.mark.parametrize("name, status, exit_code", [
    ("diverge", LudicStatus.DIVERGED, 2),
    ("breach", LudicStatus.BREACH, 3),
    ("domain", LudicStatus.ERROR, 1),
    ("crash", LudicStatus.BREACH, 3),
])
def test_exceptions_become_responses(commands, name, status, exit_code):
    response = commands.execute(name, LudicContext(), {"x": 1})
    assert response.status is status
    assert response.exit_code == exit_code
    assert not response.ok


def test_divergence_keeps_the_step_count(commands):
    response = commands.execute("diverge", LudicContext(), {"x": 1})
    assert response.data == {"steps": 12}


# ---- 解释器 ----

def test_interpreter_registers_every_command():
    agent = LudicInterpreter()
    info = agent.get_agent_info()
    assert set(info["commands"]) == {"check", "interp", "eval", "play", "equiv", "trace", "laws"}
    assert info["bounds"]["alphabet"] == 32


def test_interpreter_records_messages():
    agent = LudicInterpreter()
    response = agent.execute("eval", {"file": str(CORPUS / "numerals.mltt"), "name": "five"})
    assert response.ok
    assert response.message == "five = 5"
    kinds = [m.type for m in agent.context.get_messages()]
    assert kinds == [LudicMessageType.OPPONENT, LudicMessageType.COMMAND]


def test_interpreter_saves_the_registry(tmp_path):
    path = tmp_path / "registry.json"
    agent = LudicInterpreter(LudicContext(Bounds(), path))
    response = agent.execute("interp", {"file": str(CORPUS / "functions.mltt"), "name": "six"})
    assert response.ok
    assert path.exists()
    assert json.loads(path.read_text(encoding="utf-8"))


def test_check_command_reports_failures():
    agent = LudicInterpreter()
    assert agent.execute("check", {"file": str(CORPUS / "functions.mltt")}).ok
    response = agent.execute("check", {"file": str(CORPUS / "ill_typed.mltt")})
    assert response.status is LudicStatus.ERROR


def test_equiv_command_reports_a_witness():
    agent = LudicInterpreter()
    response = agent.execute("equiv", {"file": str(CORPUS / "functions.mltt"),
                                       "left": "lazy_zero", "right": "strict_zero", "depth": 4})
    assert response.ok
    assert response.data["equivalent"] is False


# ---- 配置 ----

def test_config_reads_environment(clean_env):
    clean_env.setenv("LUDIC_DEPTH", "6")
    clean_env.setenv("LUDIC_QUIT_WORDS", "bye, stop")
    config = LudicConfig()
    assert config.get("bounds.depth") == 6
    assert config.get_bounds().depth == 6
    assert config.get_quit_words() == ["bye", "stop"]
    assert config.get_registry_path() is None
    assert config.validate_config()


def test_config_rejects_non_positive_bounds(clean_env):
    clean_env.setenv("LUDIC_ALPHABET", "0")
    assert not LudicConfig().validate_config()


def test_config_dotted_keys(clean_env):
    config = LudicConfig()
    assert config.get("bounds.missing", "fallback") == "fallback"
    config.set("extra.nested.value", 1)
    assert config.get("extra.nested.value") == 1


def test_command_line_overrides_configuration(clean_env):
    config = LudicConfig()
    args = build_parser().parse_args(["--depth", "3", "--registry", "r.json", "eval", "f.mltt", "x"])
    apply_overrides(config, args)
    assert config.get_bounds().depth == 3
    assert config.get_bounds().alphabet == 32
    assert config.get_registry_path() == "r.json"
    assert parameters_of(args) == {"file": "f.mltt", "name": "x"}


def test_trace_parameters_merge_script_file(clean_env, tmp_path):
    script = tmp_path / "script.json"
    script.write_text('["2"]', encoding="utf-8")
    args = build_parser().parse_args(["trace", "f.mltt", "double", "q", "--script", str(script), "--hidden"])
    params = parameters_of(args)
    assert params["script"] == ["q", "2"]
    assert params["hidden"] is True


# ---- 命令行入口 ----

def test_main_exit_codes(clean_env, tmp_path, capsys):
    slow = tmp_path / "slow.mltt"
    slow.write_text("def slow : N = R_N(x. N, zero, x y. succ y, 5)\n", encoding="utf-8")
    assert main(["check", str(CORPUS / "functions.mltt")]) == 0
    assert main(["check", str(CORPUS / "ill_typed.mltt")]) == 1
    assert main(["eval", str(CORPUS / "numerals.mltt"), "three"]) == 0
    assert "three = 3" in capsys.readouterr().out
    assert main(["--unfold", "2", "eval", str(slow), "slow"]) == 2
    assert main(["--depth", "0", "eval", str(CORPUS / "numerals.mltt"), "three"]) == 1


def test_main_trace_json(clean_env, capsys):
    code = main(["--json", "trace", str(CORPUS / "functions.mltt"), "six", "q", "--hidden"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "success"
    components = {event["component"] for event in payload["data"]}
    assert {"B1", "B2"} & components
    visible = [event for event in payload["data"] if not event["hidden"]]
    assert visible[-1]["move"]["ident"] == 6


def test_play_loop_with_scripted_input():
    session = InterpreterService(LudicContext()).play(CORPUS / "functions.mltt", "double")
    inputs = iter(["q", "3", "view", "undo", "", "bogus", "quit"])
    written = []
    code = run_play(session, read=lambda prompt: next(inputs), write=written.append)
    assert code == 0
    replies = [line for line in written if line.startswith("P:")]
    assert len(replies) == 2
    assert "6" in replies[1]
    assert any("P-view" in line for line in written)
    assert len(session.position) == 2


def test_play_loop_stops_at_end_of_input():
    session = InterpreterService(LudicContext()).play(CORPUS / "functions.mltt", "double")

    def read(prompt):
        raise EOFError

    assert run_play(session, read=read, write=lambda line: None) == 0


def test_context_export_lists_sources_and_messages(tmp_path):
    agent = LudicInterpreter(LudicContext(Bounds(depth=4), tmp_path / "registry.json", "s1"))
    response = agent.execute("play", {"file": str(CORPUS / "functions.mltt"), "name": "double"})
    assert response.ok
    assert agent.context.get_session_data("play") is response.data
    exported = agent.context.export_context()
    assert exported["session_id"] == "s1"
    assert exported["bounds"]["depth"] == 4
    assert exported["sources"] == [str((CORPUS / "functions.mltt").resolve())]
    assert [m["type"] for m in exported["messages"]] == ["opponent", "command"]
    assert json.dumps(exported, ensure_ascii=False)


def test_schemas_and_reset():
    agent = LudicInterpreter(LudicContext(Bounds(depth=4)))
    schemas = {s["name"]: s for s in agent.command_registry.get_schemas()}
    assert schemas["equiv"]["parameters"]["required"] == ["file", "left", "right"]
    agent.execute("check", {"file": str(CORPUS / "numerals.mltt")})
    agent.reset_context()
    assert agent.context.bounds.depth == 4
    assert not agent.context.messages
    assert not agent.context.sources


def test_new_bounds_keep_construction_numbers():
    context = LudicContext()
    service = InterpreterService(context)
    before = service.interp(CORPUS / "numerals.mltt", "three")["construction_number"]
    context.set_bounds(Bounds(alphabet=8))
    assert context.model.bounds.alphabet == 8
    assert service.interp(CORPUS / "numerals.mltt", "three")["construction_number"] == before

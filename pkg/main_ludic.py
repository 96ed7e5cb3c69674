import argparse
import json
import logging
import sys
from typing import Callable, Iterable, List, Optional

from config.ludic_config import LudicConfig
from core.errors import InvariantBreach, LudicError
from core.ludic_context import LudicContext
from core.ludic_message import LudicStatus
from engine.oracle import ResponseStatus
from ludic_interpreter import LudicInterpreter
from services.play_session import PlaySession, show_position

PLAY_HELP = """输入 O 走子：ident [@ 指针]，例如 q、3、L.!:q @ 1
命令：undo 撤销上一对走子；moves 列出合法 O 走子；view 显示 P/O 视图；quit 退出"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ludic", description="MLTT 的博弈语义解释器")
    parser.add_argument("--alphabet", type=int, help="平坦游戏中回答的上界（缺省 32）")
    parser.add_argument("--depth", type=int, help="行为比较与探索的位置长度上限（缺省 10）")
    parser.add_argument("--unfold", type=int, help="R_N 的展开预算（缺省 64）")
    parser.add_argument("--steps", type=int, help="内部交互的步数预算（缺省 4096）")
    parser.add_argument("--registry", help="注册表文件路径")
    parser.add_argument("--env-file", help="额外的 .env 文件")
    parser.add_argument("--json", action="store_true", help="以 JSON 输出命令结果")

    commands = parser.add_subparsers(dest="command", required=True)
    check = commands.add_parser("check", help="解析并类型检查")
    check.add_argument("file")
    for name, text in (("interp", "打印策略项与依赖游戏项"), ("eval", "求闭项的值"), ("play", "交互对弈")):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("file")
        sub.add_argument("name")
    equiv = commands.add_parser("equiv", help="深度有界的行为等价")
    equiv.add_argument("file")
    equiv.add_argument("left")
    equiv.add_argument("right")
    equiv.add_argument("bound", nargs="?", type=int, help="比较深度，缺省为 --depth")
    trace = commands.add_parser("trace", help="按 O 走子脚本回放并输出 JSON 轨迹")
    trace.add_argument("file")
    trace.add_argument("name")
    trace.add_argument("moves", nargs="*", help="O 走子，每个形如 ident[@指针]")
    trace.add_argument("--script", help="JSON 数组形式的脚本文件")
    trace.add_argument("--hidden", action="store_true", help="包含内部交互走子")
    laws = commands.add_parser("laws", help="运行律检查套件")
    laws.add_argument("scope", nargs="?", default="all")
    return parser


def apply_overrides(config: LudicConfig, args: argparse.Namespace) -> None:
    """命令行参数覆盖配置"""
    for flag, key in (("alphabet", "alphabet"), ("depth", "depth"), ("unfold", "unfold"), ("steps", "steps")):
        value = getattr(args, flag)
        if value is not None:
            config.set(f"bounds.{key}", value)
    if args.registry:
        config.set("registry.path", args.registry)


def parameters_of(args: argparse.Namespace) -> dict:
    if args.command == "check":
        return {"file": args.file}
    if args.command in ("interp", "eval", "play"):
        return {"file": args.file, "name": args.name}
    if args.command == "equiv":
        return {"file": args.file, "left": args.left, "right": args.right, "depth": args.bound}
    if args.command == "trace":
        script: List[str] = list(args.moves)
        if args.script:
            with open(args.script, encoding="utf-8") as f:
                script += [str(m) for m in json.load(f)]
        return {"file": args.file, "name": args.name, "script": script, "hidden": args.hidden}
    return {"scope": args.scope}


def run_play(session: PlaySession, read: Callable[[str], str] = input, write: Callable[[str], None] = print,
             quit_words: Iterable[str] = ("quit", "exit", "退出")) -> int:
    """对弈循环；返回退出码"""
    quit_words = set(quit_words)
    write(PLAY_HELP)
    while True:
        write(show_position(session.position))
        try:
            line = read("O> ").strip()
        except (EOFError, KeyboardInterrupt):
            write("")
            return 0
        if not line:
            continue
        if line in quit_words:
            return 0
        if line == "help":
            write(PLAY_HELP)
            continue
        if line == "undo":
            try:
                session.undo()
            except LudicError as e:
                write(str(e))
            continue
        if line == "moves":
            moves = session.legal_moves()
            write(", ".join(str(m) if j is None else f"{m} @ {j}" for m, j in moves) or "（没有合法的 O 走子）")
            continue
        if line == "view":
            for label, view in session.views().items():
                write(f"{label}:\n{show_position(view)}")
            continue
        try:
            step = session.play(line)
        except InvariantBreach as e:
            write(f"内部不变量被破坏: {e}")
            return LudicStatus.BREACH.exit_code
        except LudicError as e:
            write(str(e))
            continue
        outcome = step.outcome
        if outcome.status is ResponseStatus.RESPONDED:
            pointer = "" if outcome.justifier is None else f" @ {outcome.justifier}"
            write(f"P: {outcome.move}{pointer}")
        elif outcome.status is ResponseStatus.DIVERGED:
            write(f"Player 发散（{outcome.detail}），可以 undo")
        else:
            write("Player 没有回应，可以 undo")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = LudicConfig(args.env_file)
    apply_overrides(config, args)
    if not config.validate_config():
        print(f"[ludic] 配置无效: {config}", file=sys.stderr)
        return LudicStatus.ERROR.exit_code
    if config.is_debug_mode():
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        context = LudicContext(config.get_bounds(), config.get_registry_path())
        agent = LudicInterpreter(context)
    except LudicError as e:
        print(f"[ludic] 启动失败: {e}", file=sys.stderr)
        return LudicStatus.ERROR.exit_code

    response = agent.execute(args.command, parameters_of(args))
    if args.command == "play" and response.ok:
        code = run_play(response.data, quit_words=config.get_quit_words())
        context.save_registry()
        return code

    if args.json:
        payload = response.to_dict()
        if args.command == "trace" and response.ok:
            payload["data"] = json.loads(response.message)
        print(json.dumps(payload, ensure_ascii=False, indent=2, default=str))
    else:
        stream = sys.stdout if response.ok else sys.stderr
        print(response.message, file=stream)
    return response.exit_code


if __name__ == "__main__":
    sys.exit(main())

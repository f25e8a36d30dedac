"""Command-line entry point: ``chessarm {repl,exec,validate,size,workspace}``.

Exit status: 0 success, 1 command/validation failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import cmd
import csv
import json
import math
import sys
from pathlib import Path

from . import dynamics
from .chessbot import IkMode, validate_board_reach
from .commands import QUERY_HELP
from .config import Config, load_config
from .engine import Engine
from .errors import ChessArmError, CommandSyntaxError, ConfigError, UnreachableBoard
from .kinematics import PlanarArm
from .trace_io import trace_to_csv, trace_to_json
from .workspace import sample_workspace

EXIT_OK, EXIT_COMMAND, EXIT_CONFIG = 0, 1, 2


def _err(exc: BaseException, prefix: str = "") -> None:
    name = exc.name if isinstance(exc, ChessArmError) else type(exc).__name__
    print(f"error: {prefix}{name}: {exc}", file=sys.stderr)


def _load(args) -> Config:
    cfg = load_config(args.config) if args.config else Config()
    if args.mode:
        cfg = Config(cfg.board, cfg.arm, IkMode(args.mode), cfg.trace_cap)
    return cfg


def _make_engine(cfg: Config) -> Engine:
    return Engine(cfg.board, cfg.chess_arm(), cfg.ik_mode, cfg.trace_cap)


def _render_trace(trace, cfg: Config, fmt: str) -> str:
    return trace_to_csv(trace) if fmt == "csv" else trace_to_json(trace, cfg.to_dict())


def _emit_trace(engine: Engine, cfg: Config, args) -> None:
    text = _render_trace(engine.trace, cfg, args.format)
    if args.trace:
        Path(args.trace).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if getattr(args, "plot", None):
        from .plotting import plot_trace

        plot_trace(engine.trace, args.plot)


def _format_step(step) -> str:
    if step.op == "rotate":
        return f"  rotate {step.joint} by {step.delta:+.6f} rad  ({step.phase.value})"
    return f"  {step.op}"


class Repl(cmd.Cmd):
    prompt = "chessbot> "
    intro = "Chess-arm command engine. Type 'help' for the query forms, 'quit' to leave."

    def __init__(self, engine: Engine, stdin=None, stdout=None):
        super().__init__(stdin=stdin, stdout=stdout)
        if stdin is not None:
            self.use_rawinput = False
        self.engine = engine
        self.failed = False

    def emptyline(self):
        return False

    def default(self, line):
        if line == "EOF":
            self.stdout.write("\n")
            return True
        try:
            steps = self.engine.run_line(line)
        except CommandSyntaxError as exc:
            self.stdout.write(f"syntax error: {exc}\n")
            self.failed = True
            return False
        except ChessArmError as exc:
            self.stdout.write(f"{exc.name}: {exc}\n")
            self.failed = True
            return False
        for step in steps or ():
            self.stdout.write(_format_step(step) + "\n")
        return False

    # Command keywords are routed through default() rather than do_* methods
    # so that "go", "move", ... reach the parser unchanged.
    def onecmd(self, line):
        text = line.strip()
        if not text:
            return self.emptyline()
        word = text.split()[0].lower()
        if word in ("help", "?"):
            return self.do_help("")
        if word in ("quit", "exit"):
            return True
        if word == "state":
            return self.do_state("")
        return self.default(text)

    def do_help(self, arg):
        for form, text in QUERY_HELP:
            self.stdout.write(f"  {form:<30} {text}\n")
        self.stdout.write(f"  {'state':<30} Shows the joint registers and gripper\n")
        self.stdout.write(f"  {'quit':<30} Leaves the REPL\n")
        return False

    def do_state(self, arg):
        s = self.engine.state
        self.stdout.write(
            f"  J1={s.teta1:+.6f} J2={s.teta2:+.6f} J3={s.teta:+.6f} J4={s.teta3:+.6f}"
            f"  xf={s.xf:g} yf={s.yf:g} gripper={s.gripper.value}\n"
        )
        return False


def cmd_repl(args) -> int:
    cfg = _load(args)
    engine = _make_engine(cfg)
    Repl(engine).cmdloop()
    if args.trace:
        Path(args.trace).write_text(_render_trace(engine.trace, cfg, args.format), encoding="utf-8")
    return EXIT_OK


def cmd_exec(args) -> int:
    cfg = _load(args)
    engine = _make_engine(cfg)
    try:
        lines = Path(args.script).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        _err(exc)
        return EXIT_COMMAND
    status = EXIT_OK
    for lineno, line in enumerate(lines, 1):
        try:
            engine.run_line(line)
        except ChessArmError as exc:
            _err(exc, f"{args.script}:{lineno}: ")
            status = EXIT_COMMAND
            break
    _emit_trace(engine, cfg, args)
    return status


def cmd_validate(args) -> int:
    cfg = _load(args)
    board, arm = cfg.board, cfg.chess_arm()
    report = validate_board_reach(arm, board, cfg.ik_mode)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["x", "y", "xf", "yf", "reachable", "error"])
    for c in report.cells:
        out.writerow([c.cell[0], c.cell[1], repr(c.center[0]), repr(c.center[1]), int(c.reachable), c.error or ""])
    print(
        f"# mode={report.mode.value} link_d={arm.link_d:g} reachable={report.reachable_count}"
        f" unreachable={report.unreachable_count} home={'ok' if report.home.reachable else report.home.error}"
        f" ok={int(report.ok)}"
    )
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_dict(), indent=1) + "\n", encoding="utf-8")
    if args.plot:
        from .plotting import plot_reach_report

        plot_reach_report(report, board, args.plot)
    return EXIT_OK if report.ok else EXIT_COMMAND


_SIZE_KEYS = {
    "moments": {"l1": "l1", "l2": "l2", "l3": "l3", "w1": "w1", "w2": "w2", "w3": "w3", "w4": "w4"},
    "spin": {"m_arm": "m_arm", "m": "m_payload", "m_payload": "m_payload", "L": "length",
             "length": "length", "omega": "omega", "t": "time", "time": "time"},
    "gripper": {"F": "grip_force", "grip_force": "grip_force", "L_jaw": "jaw_length",
                "jaw_length": "jaw_length", "M_part": "part_mass", "part_mass": "part_mass",
                "a_total": "accel_total", "a": "accel_total", "accel_total": "accel_total"},
    "tip": {"R": "radius", "radius": "radius", "f": "freq", "freq": "freq"},
}


def _parse_pairs(group: str, pairs) -> dict:
    keys = _SIZE_KEYS[group]
    out = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or name not in keys:
            raise ConfigError(f"--{group}: expected one of {sorted(keys)} as key=value, got {pair!r}")
        try:
            out[keys[name]] = float(value)
        except ValueError:
            raise ConfigError(f"--{group}: {name} is not a number: {value!r}") from None
    return out


def _build(cls, group, pairs):
    try:
        return cls(**_parse_pairs(group, pairs))
    except (TypeError, ValueError, ChessArmError) as exc:
        raise ConfigError(f"--{group}: {exc}") from None


def cmd_size(args) -> int:
    rows = []
    if args.moments is not None:
        m1, m2 = dynamics.joint_moments(_build(dynamics.LoadSpec3, "moments", args.moments))
        rows += [("moments", "M1", m1), ("moments", "M2", m2)]
    if args.spin is not None:
        spec = _build(dynamics.SpinSpec, "spin", args.spin)
        for name, v in zip(("tau_arm", "tau_obj", "tau_motor"), dynamics.spin_up_torque(spec)):
            rows.append(("spin", name, v))
    if args.gripper is not None:
        spec = _build(dynamics.GripperSpec, "gripper", args.gripper)
        for name, v in zip(("tau_gripper", "tau_part", "tau_total"), dynamics.gripper_torque(spec)):
            rows.append(("gripper", name, v))
    if args.tip is not None:
        tip = _parse_pairs("tip", args.tip)
        if set(tip) != {"radius", "freq"}:
            raise ConfigError("--tip needs R=... and f=...")
        rows.append(("tip", "V", dynamics.tip_speed(**tip)))
    if not rows:
        raise ConfigError("size: give at least one of --moments, --spin, --gripper, --tip")
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["group", "quantity", "value"])
    for g, q, v in rows:
        out.writerow([g, q, repr(v)])
    return EXIT_OK


def cmd_workspace(args) -> int:
    cfg = _load(args)
    conv = math.radians if args.degrees else float
    shoulder = (0.0, math.pi) if args.shoulder is None else tuple(conv(v) for v in args.shoulder)
    elbow = (0.0, math.pi) if args.elbow is None else tuple(conv(v) for v in args.elbow)
    d = cfg.chess_arm().link_d
    arm = PlanarArm(
        l1=args.l1 if args.l1 is not None else d,
        l2=args.l2 if args.l2 is not None else d,
        l0=args.l0 if args.l0 is not None else cfg.arm.column_height,
        shoulder_limits=shoulder,
        elbow_limits=elbow,
    )
    cloud = sample_workspace(arm, args.resolution)
    sink = open(args.output, "w", encoding="utf-8", newline="") if args.output else sys.stdout
    try:
        out = csv.writer(sink, lineterminator="\n")
        out.writerow(["x", "y"])
        for x, y in cloud.points:
            out.writerow([repr(float(x)), repr(float(y))])
    finally:
        if sink is not sys.stdout:
            sink.close()
    if args.plot:
        from .plotting import plot_workspace

        plot_workspace(cloud, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--mode", choices=[m.value for m in IkMode], help="override the config's IK mode")
    common.add_argument("--trace", help="write the motion trace to this file")
    common.add_argument("--format", choices=["json", "csv"], default="json", help="trace format")

    parser = argparse.ArgumentParser(prog="chessarm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repl", parents=[common], help="interactive command loop")
    p.set_defaults(func=cmd_repl)

    p = sub.add_parser("exec", parents=[common], help="run a command script")
    p.add_argument("script")
    p.add_argument("--plot", help="write a joint-angle figure (PNG/PDF/SVG)")
    p.set_defaults(func=cmd_exec)

    p = sub.add_parser("validate", parents=[common], help="check every board cell is reachable")
    p.add_argument("--json", help="write the full reach report as JSON")
    p.add_argument("--plot", help="write a board reachability figure")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("size", parents=[common], help="evaluate torque and speed formulas")
    p.add_argument("--moments", nargs="+", metavar="K=V", help="l1 l2 l3 w1 w2 w3 w4")
    p.add_argument("--spin", nargs="+", metavar="K=V", help="m_arm m L omega t")
    p.add_argument("--gripper", nargs="+", metavar="K=V", help="F L_jaw M_part a_total")
    p.add_argument("--tip", nargs="+", metavar="K=V", help="R f")
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("workspace", parents=[common], help="sample the planar workspace as CSV")
    p.add_argument("--l0", type=float)
    p.add_argument("--l1", type=float)
    p.add_argument("--l2", type=float)
    p.add_argument("--shoulder", nargs=2, type=float, metavar=("LO", "HI"), help="limits, default 0..pi")
    p.add_argument("--elbow", nargs=2, type=float, metavar=("LO", "HI"), help="limits, default 0..pi")
    p.add_argument("--degrees", action="store_true", help="limits are given in degrees")
    p.add_argument("--resolution", type=int, default=100)
    p.add_argument("--output", "-o", help="CSV path (default stdout)")
    p.add_argument("--plot", help="write a scatter figure of the cloud")
    p.set_defaults(func=cmd_workspace)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, UnreachableBoard) as exc:
        _err(exc)
        return EXIT_CONFIG
    except ChessArmError as exc:
        _err(exc)
        return EXIT_COMMAND
    except ValueError as exc:
        # invariant violations in user-supplied parameters
        _err(exc)
        return EXIT_CONFIG


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

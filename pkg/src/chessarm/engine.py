"""Deterministic interpreter that turns commands into joint rotations.

Joint targets are absolute: each motion computes the target angle from the
board geometry and emits the difference from the current register. Registers
are only ever advanced by the emitted deltas, so replaying a trace reproduces
them exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .chessbot import (
    COLUMNS,
    HOME,
    ROWS,
    BoardModel,
    ChessArm,
    IkMode,
    raw_center,
    base_yaw,
    chess_ik,
    validate_board_reach,
)
from .commands import (
    Command,
    GoToX,
    GoToY,
    Grab,
    MoveFrom,
    MoveTo,
    Release,
    ReturnToO,
    format_command,
    is_blank,
    parse_command,
)
from .errors import CellOutOfRange, GripperStateError, RotationBoundError, TraceCapExceeded, UnreachableBoard

DEFAULT_TRACE_CAP = 1_000_000

# Joint name -> ArmState register it drives.
REGISTERS = {"J1": "teta1", "J2": "teta2", "J3": "teta", "J4": "teta3"}


class Gripper(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


class Phase(str, enum.Enum):
    GO_TO_X = "go_to_x"
    GO_TO_Y = "go_to_y"
    LIFT = "lift"
    LOWER = "lower"
    GRAB = "grab"
    RELEASE = "release"


@dataclass(frozen=True)
class ArmState:
    teta1: float = 0.0
    teta2: float = 0.0
    teta3: float = 0.0
    teta: float = 0.0
    xf: float = 0.0
    yf: float = 0.0
    gripper: Gripper = Gripper.OPEN
    lifted: bool = False
    lift_delta: float = 0.0  # J2 delta of the pending lift, undone by the lower

    def angles(self) -> dict[str, float]:
        return {joint: getattr(self, reg) for joint, reg in REGISTERS.items()}


@dataclass(frozen=True)
class MotionStep:
    op: str  # "rotate" | "grab" | "release"
    joint: str | None = None
    delta: float | None = None
    phase: Phase | None = None

    def __post_init__(self):
        if self.op == "rotate":
            if self.joint not in REGISTERS:
                raise ValueError(f"unknown joint {self.joint!r}")
            if not math.isfinite(self.delta) or abs(self.delta) > math.pi:
                raise RotationBoundError(f"{self.joint} step {self.delta!r} exceeds pi")
        elif self.op not in ("grab", "release"):
            raise ValueError(f"unknown op {self.op!r}")


@dataclass(frozen=True)
class MotionTrace:
    steps: tuple[MotionStep, ...] = ()
    # (index of first step, normalized command text) per executed command
    annotations: tuple[tuple[int, str], ...] = ()

    def __len__(self):
        return len(self.steps)

    def command_of(self, index: int) -> int:
        """Index into ``annotations`` of the command that emitted step ``index``."""
        owner = -1
        for k, (start, _) in enumerate(self.annotations):
            if start <= index:
                owner = k
            else:
                break
        return owner


def init_state(board: BoardModel, arm: ChessArm, mode: IkMode = IkMode.STANDARD) -> ArmState:
    report = validate_board_reach(arm, board, mode)
    if not (report.ok and report.home.reachable):
        raise UnreachableBoard(report)
    L = board.side_length
    return ArmState(xf=L / 16, yf=L / 16 + board.dif)


class _Run:
    """Accumulates steps and state for one command; discarded on error."""

    def __init__(self, state, board, arm, mode):
        self.state = state
        self.board = board
        self.arm = arm
        self.mode = mode
        self.steps = []

    def rotate(self, joint, delta, phase):
        self.steps.append(MotionStep("rotate", joint, delta, phase))
        reg = REGISTERS[joint]
        self.state = replace(self.state, **{reg: getattr(self.state, reg) + delta})

    def go_to_x(self, x):
        xf = raw_center(self.board, x, 0)[0]
        target = base_yaw((xf, self.state.yf), self.mode)
        self.rotate("J1", target - self.state.teta1, Phase.GO_TO_X)
        self.state = replace(self.state, xf=xf)

    def go_to_y(self, y):
        yf = raw_center(self.board, 0, y)[1]
        t = chess_ik(self.arm, (self.state.xf, yf), self.mode)
        s = self.state
        d2, d4, d3 = t.theta2 - s.teta2, t.theta3 - s.teta3, t.theta - s.teta
        # Shoulder first, then wrist, then elbow, so the gripper clears the pieces.
        self.rotate("J2", d2, Phase.GO_TO_Y)
        self.rotate("J4", d4, Phase.GO_TO_Y)
        self.rotate("J3", d3, Phase.GO_TO_Y)
        self.state = replace(self.state, yf=yf)

    def lift(self):
        delta = -self.state.teta2 / 2
        self.rotate("J2", delta, Phase.LIFT)
        self.state = replace(self.state, lifted=True, lift_delta=delta)

    def lower(self):
        self.rotate("J2", -self.state.lift_delta, Phase.LOWER)
        self.state = replace(self.state, lifted=False, lift_delta=0.0)

    def grab(self):
        if self.state.gripper is not Gripper.OPEN:
            raise GripperStateError("grab with the gripper already closed")
        self.steps.append(MotionStep("grab", phase=Phase.GRAB))
        self.state = replace(self.state, gripper=Gripper.CLOSED)

    def release(self):
        if self.state.gripper is not Gripper.CLOSED:
            raise GripperStateError("release with the gripper already open")
        self.steps.append(MotionStep("release", phase=Phase.RELEASE))
        self.state = replace(self.state, gripper=Gripper.OPEN)


def _check_cell(x=None, y=None):
    if x is not None and x not in COLUMNS:
        raise CellOutOfRange(f"column {x} outside {COLUMNS.start}..{COLUMNS.stop - 1}")
    if y is not None and y not in ROWS:
        raise CellOutOfRange(f"row {y} outside {ROWS.start}..{ROWS.stop - 1}")


def execute(
    state: ArmState,
    cmd: Command,
    board: BoardModel,
    arm: ChessArm,
    mode: IkMode = IkMode.STANDARD,
) -> tuple[ArmState, tuple[MotionStep, ...]]:
    """Run one command. Pure: the input state is never modified."""
    run = _Run(state, board, arm, mode)
    match cmd:
        case GoToX(x):
            _check_cell(x=x)
            run.go_to_x(x)
        case GoToY(y):
            _check_cell(y=y)
            run.go_to_y(y)
        case MoveTo(x, y):
            _check_cell(x, y)
            run.go_to_x(x)
            run.go_to_y(y)
        case MoveFrom(x, y, x1, y1):
            _check_cell(x, y)
            _check_cell(x1, y1)
            run.go_to_x(x)
            run.go_to_y(y)
            run.grab()
            run.lift()
            run.go_to_x(x1)
            run.lower()
            run.go_to_y(y1)
            run.release()
        case ReturnToO():
            run.lift()
            run.go_to_x(HOME[0])
            run.lower()
            run.go_to_y(HOME[1])
        case Grab():
            run.grab()
        case Release():
            run.release()
        case _:
            raise TypeError(f"not a command: {cmd!r}")
    return run.state, tuple(run.steps)


def replay(steps, start: ArmState | None = None) -> ArmState:
    """Apply rotation and gripper steps to ``start`` (registers and gripper only)."""
    state = start or ArmState()
    for step in steps:
        if step.op == "rotate":
            reg = REGISTERS[step.joint]
            state = replace(state, **{reg: getattr(state, reg) + step.delta})
        else:
            state = replace(state, gripper=Gripper.CLOSED if step.op == "grab" else Gripper.OPEN)
    return state


class Engine:
    """One arm, one state, one growing trace. Commands run strictly in order."""

    def __init__(
        self,
        board: BoardModel,
        arm: ChessArm,
        mode: IkMode = IkMode.STANDARD,
        trace_cap: int = DEFAULT_TRACE_CAP,
    ):
        self.board = board
        self.arm = arm
        self.mode = mode
        self.trace_cap = trace_cap
        self.state = init_state(board, arm, mode)
        self.initial_state = self.state
        self._steps = []
        self._annotations = []

    def run(self, cmd: Command) -> tuple[MotionStep, ...]:
        new_state, steps = execute(self.state, cmd, self.board, self.arm, self.mode)
        if len(self._steps) + len(steps) > self.trace_cap:
            raise TraceCapExceeded(f"trace would exceed {self.trace_cap} steps")
        self._annotations.append((len(self._steps), format_command(cmd)))
        self._steps.extend(steps)
        self.state = new_state
        return steps

    def run_line(self, line: str) -> tuple[MotionStep, ...] | None:
        if is_blank(line):
            return None
        return self.run(parse_command(line))

    @property
    def trace(self) -> MotionTrace:
        return MotionTrace(tuple(self._steps), tuple(self._annotations))


@dataclass(frozen=True)
class Violation:
    rule: str  # "a".."d"
    index: int  # offending step, or len(trace) for end-of-trace problems
    message: str


def check_trace(trace: MotionTrace) -> list[Violation]:
    """Audit a trace for the pick-and-place safety rules.

    a. while holding a piece, J1 only turns with the shoulder lifted;
    b. every lift is lowered again before the release (and no stray lowers);
    c. grab and release strictly alternate, starting with grab;
    d. every go-to-y segment turns J2, then J4, then J3.
    """
    out = []
    steps = trace.steps
    holding = lifted = False
    i = 0
    while i < len(steps):
        step = steps[i]
        if step.phase is Phase.GO_TO_Y:
            seg = steps[i : i + 3]
            joints = [s.joint for s in seg if s.phase is Phase.GO_TO_Y]
            if joints != ["J2", "J4", "J3"]:
                out.append(Violation("d", i, f"go-to-y segment turns {joints}, want ['J2', 'J4', 'J3']"))
                i += 1
                continue
            i += 3
            continue
        if step.op == "grab":
            if holding:
                out.append(Violation("c", i, "grab while already holding"))
            holding = True
        elif step.op == "release":
            if not holding:
                out.append(Violation("c", i, "release without a grab"))
            if lifted:
                out.append(Violation("b", i, "release while the shoulder is still lifted"))
            holding = False
        elif step.phase is Phase.LIFT:
            if lifted:
                out.append(Violation("b", i, "second lift before lowering"))
            lifted = True
        elif step.phase is Phase.LOWER:
            if not lifted:
                out.append(Violation("b", i, "lower without a lift"))
            lifted = False
        elif step.joint == "J1" and holding and not lifted:
            out.append(Violation("a", i, "J1 turns while holding a piece with the shoulder down"))
        i += 1
    if lifted:
        out.append(Violation("b", len(steps), "trace ends with the shoulder lifted"))
    return out

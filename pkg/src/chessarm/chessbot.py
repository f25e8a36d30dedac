"""Chessboard geometry and the four-revolute chess arm.

Board frame: origin O at the robot's base axis, +y pointing across the board,
columns -3..4 left to right (cell centres symmetric about x = 0) and rows 1..8
from the near edge. The near edge of the board is ``dif`` from the base.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import AsinDomain, CellOutOfRange, IkFailure, NonPositiveLink
from .kinematics import CLAMP_EPS, AnglePair, Branch, PlanarArm, fk_planar, ik_planar

COLUMNS = range(-3, 5)
ROWS = range(1, 9)
HOME = (0, 0)


class IkMode(enum.Enum):
    PAPER_LITERAL = "paper"
    STANDARD = "standard"


@dataclass(frozen=True)
class BoardModel:
    side_length: float
    dif: float = 0.0

    def __post_init__(self):
        if self.side_length <= 0:
            raise ValueError("side_length must be positive")
        if self.dif < 0:
            raise ValueError("dif must be non-negative")

    @property
    def cell_side(self) -> float:
        return self.side_length / 8

    def cells(self):
        return [(x, y) for y in ROWS for x in COLUMNS]


@dataclass(frozen=True)
class ChessArm:
    """Base column ``h``, two links of length ``d`` and a downward gripper.

    The last link hangs ``h - D_G`` below the wrist and the gripper adds
    ``D_G``, so with the wrist level with the shoulder the jaws touch the board.
    """

    column_height: float
    link_d: float
    gripper_length: float = 0.0

    def __post_init__(self):
        if self.link_d <= 0:
            raise ValueError("link_d must be positive")
        if self.gripper_length < 0 or self.gripper_length > self.column_height:
            raise ValueError("need 0 <= gripper_length <= column_height")

    @property
    def gripper_drop(self) -> float:
        return self.column_height - self.gripper_length

    def vertical_plane_arm(self) -> PlanarArm:
        return PlanarArm(l1=self.link_d, l2=self.link_d, l0=self.column_height)


@dataclass(frozen=True)
class JointTargets:
    """Absolute joint targets.

    ``theta2`` is the shoulder elevation above horizontal and ``theta`` the
    forearm's deviation from straight down; the wrist turns by
    ``theta3 = -theta`` so the gripper always points at the board.
    """

    theta1: float
    theta2: float
    theta: float
    theta3: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "theta3", -self.theta)


def raw_center(board: BoardModel, x: int, y: int) -> tuple[float, float]:
    L = board.side_length
    return x * L / 8 - L / 16, y * L / 8 - L / 16 + board.dif


def cell_center(board: BoardModel, cell: tuple[int, int]) -> tuple[float, float]:
    x, y = cell
    if x not in COLUMNS or y not in ROWS:
        raise CellOutOfRange(f"cell ({x}, {y}) outside columns -3..4, rows 1..8")
    return raw_center(board, x, y)


def home_center(board: BoardModel) -> tuple[float, float]:
    """Centre of the off-board home cell (0, 0) used by ``return to o``."""
    return raw_center(board, *HOME)


def default_link_length(board: BoardModel) -> float:
    d = (15 * board.side_length - 16 * board.dif) / 32
    if d <= 0:
        raise NonPositiveLink(f"link length {d} from L={board.side_length}, dif={board.dif}")
    return d


def base_yaw(target: tuple[float, float], mode: IkMode = IkMode.STANDARD) -> float:
    xf, yf = target
    if yf <= 0:
        raise IkFailure(f"target y {yf} is not in front of the base")
    if mode is IkMode.PAPER_LITERAL:
        return math.atan(xf / yf)
    return math.atan2(xf, yf)


def chess_ik(arm: ChessArm, target: tuple[float, float], mode: IkMode = IkMode.STANDARD) -> JointTargets:
    theta1 = base_yaw(target, mode)
    xf, yf = target
    if mode is IkMode.PAPER_LITERAL:
        ratio = yf / arm.link_d
        if abs(ratio) > 1.0 + CLAMP_EPS:
            raise AsinDomain(ratio)
        theta2 = math.asin(max(-1.0, min(1.0, ratio)))
        return JointTargets(theta1, theta2, math.pi / 2 - theta2)

    reach = math.hypot(xf, yf)
    # The wrist sits level with the shoulder (L4 + D_G = h), so the vertical
    # offset of the two-link target is zero. ELBOW_DOWN keeps the elbow above
    # the reach line.
    angles = ik_planar(arm.vertical_plane_arm(), (reach, 0.0), Branch.ELBOW_DOWN)
    return JointTargets(theta1, angles.shoulder, angles.elbow_abs + math.pi / 2)


def gripper_reach(arm: ChessArm, targets: JointTargets) -> tuple[float, float]:
    """Horizontal distance and height above the board of the gripper tip."""
    pose = fk_planar(arm.vertical_plane_arm(), AnglePair(targets.theta2, targets.theta - math.pi / 2))
    return pose.x, pose.y - arm.gripper_drop - arm.gripper_length


@dataclass(frozen=True)
class CellReach:
    cell: tuple[int, int]
    center: tuple[float, float]
    reachable: bool
    error: str | None = None
    targets: JointTargets | None = None

    def to_dict(self):
        out = {
            "x": self.cell[0],
            "y": self.cell[1],
            "xf": self.center[0],
            "yf": self.center[1],
            "reachable": self.reachable,
            "error": self.error,
        }
        if self.targets is not None:
            t = self.targets
            out["targets"] = {"theta1": t.theta1, "theta2": t.theta2, "theta": t.theta, "theta3": t.theta3}
        return out


@dataclass(frozen=True)
class ReachReport:
    mode: IkMode
    cells: tuple[CellReach, ...]
    home: CellReach

    @property
    def reachable_count(self) -> int:
        return sum(c.reachable for c in self.cells)

    @property
    def unreachable_count(self) -> int:
        return len(self.cells) - self.reachable_count

    @property
    def ok(self) -> bool:
        return self.unreachable_count == 0

    def failures(self):
        return [c for c in self.cells if not c.reachable]

    def to_dict(self):
        return {
            "mode": self.mode.value,
            "ok": self.ok,
            "reachable": self.reachable_count,
            "unreachable": self.unreachable_count,
            "home": self.home.to_dict(),
            "cells": [c.to_dict() for c in self.cells],
        }


def _probe(arm, cell, center, mode) -> CellReach:
    try:
        targets = chess_ik(arm, center, mode)
    except IkFailure as exc:
        return CellReach(cell, center, False, type(exc).__name__)
    return CellReach(cell, center, True, None, targets)


def validate_board_reach(arm: ChessArm, board: BoardModel, mode: IkMode = IkMode.STANDARD) -> ReachReport:
    cells = tuple(_probe(arm, c, cell_center(board, c), mode) for c in board.cells())
    home = _probe(arm, HOME, home_center(board), mode)
    return ReachReport(mode, cells, home)

"""Kinematics, sizing and motion sequencing for a chess-playing robot arm."""

from .chessbot import (
    BoardModel,
    ChessArm,
    IkMode,
    JointTargets,
    ReachReport,
    cell_center,
    chess_ik,
    default_link_length,
    validate_board_reach,
)
from .commands import format_command, parse_command, parse_script
from .dynamics import (
    GripperSpec,
    LoadSpec3,
    SpinSpec,
    gripper_torque,
    joint_moments,
    spin_up_torque,
    static_moment_generic,
    tip_speed,
)
from .engine import ArmState, Engine, MotionStep, MotionTrace, check_trace, execute, init_state
from .errors import *  # noqa: F401,F403
from .kinematics import (
    AnglePair,
    Branch,
    Joint,
    JointChain,
    JointKind,
    PlanarArm,
    Pose2,
    dof_feasible,
    fk_planar,
    ik_planar,
    within_limits,
)
from .workspace import classify_structure, reachable, sample_workspace

__version__ = "0.1.0"

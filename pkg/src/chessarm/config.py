"""JSON configuration for the board, the arm and the engine.

Lengths share one user-chosen unit; the examples use millimetres.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .chessbot import BoardModel, ChessArm, IkMode, default_link_length
from .engine import DEFAULT_TRACE_CAP
from .errors import ConfigError, NonPositiveLink


@dataclass(frozen=True)
class ArmConfig:
    column_height: float = 150.0
    link_d: float | None = 200.0  # None: derive from the board
    gripper_length: float = 50.0


@dataclass(frozen=True)
class Config:
    board: BoardModel = field(default_factory=lambda: BoardModel(320.0, 40.0))
    arm: ArmConfig = field(default_factory=ArmConfig)
    ik_mode: IkMode = IkMode.STANDARD
    trace_cap: int = DEFAULT_TRACE_CAP

    def chess_arm(self) -> ChessArm:
        d = self.arm.link_d
        if d is None:
            try:
                d = default_link_length(self.board)
            except NonPositiveLink as exc:
                raise ConfigError(str(exc)) from exc
        try:
            return ChessArm(self.arm.column_height, d, self.arm.gripper_length)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def to_dict(self) -> dict:
        return {
            "board": {"side_length": self.board.side_length, "dif": self.board.dif},
            "arm": {
                "column_height": self.arm.column_height,
                "link_d": self.arm.link_d,
                "gripper_length": self.arm.gripper_length,
            },
            "ik_mode": self.ik_mode.value,
            "trace_cap": self.trace_cap,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        try:
            board = data.get("board", {})
            arm = data.get("arm", {})
            defaults = ArmConfig()
            link_d = arm.get("link_d", defaults.link_d)
            cfg = cls(
                board=BoardModel(float(board["side_length"]), float(board.get("dif", 0.0))),
                arm=ArmConfig(
                    float(arm.get("column_height", defaults.column_height)),
                    None if link_d is None else float(link_d),
                    float(arm.get("gripper_length", defaults.gripper_length)),
                ),
                ik_mode=IkMode(data.get("ik_mode", "standard")),
                trace_cap=int(data.get("trace_cap", DEFAULT_TRACE_CAP)),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ConfigError(f"invalid config: {exc}") from exc
        if cfg.arm.column_height <= 0 or cfg.arm.gripper_length < 0:
            raise ConfigError("arm lengths must be positive")
        if cfg.arm.link_d is not None and cfg.arm.link_d <= 0:
            raise ConfigError("link_d must be positive")
        if cfg.trace_cap <= 0:
            raise ConfigError("trace_cap must be positive")
        return cfg


def load_config(path) -> Config:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be an object")
    return Config.from_dict(data)


def save_config(config: Config, path) -> None:
    Path(path).write_text(json.dumps(config.to_dict(), indent=2) + "\n", encoding="utf-8")

import csv
import io
import json

import pytest

from chessarm.chessbot import BoardModel, ChessArm, IkMode
from chessarm.config import ArmConfig, Config, load_config, save_config
from chessarm.engine import Engine, MotionTrace, replay
from chessarm.errors import ConfigError
from chessarm.trace_io import trace_from_json, trace_to_csv, trace_to_json

SCRIPT = ["move from [2, 3] to [4, 5]", "go to x -1", "return to o", "grab", "release"]


@pytest.fixture
def trace():
    engine = Engine(BoardModel(32, 4), ChessArm(10, 20, 3))
    for line in SCRIPT:
        engine.run_line(line)
    return engine.trace


def test_json_round_trip(trace):
    config = Config().to_dict()
    back, cfg = trace_from_json(trace_to_json(trace, config))
    assert back == trace
    assert cfg == config
    assert replay(back.steps) == replay(trace.steps)


def test_json_layout(trace):
    data = json.loads(trace_to_json(trace))
    header = data[0]["header"]
    assert header["format"] == "chessarm-trace" and header["steps"] == len(trace)
    assert [c["text"] for c in header["commands"]] == SCRIPT
    first = data[1]
    assert first == {"op": "rotate", "joint": "J1", "delta_rad": trace.steps[0].delta, "phase": "go_to_x", "command": 0}
    assert data[5]["op"] == "grab" and "joint" not in data[5]


def test_json_is_byte_stable(trace):
    assert trace_to_json(trace) == trace_to_json(MotionTrace(trace.steps, trace.annotations))


def test_json_rejects_headerless():
    with pytest.raises(ValueError):
        trace_from_json("[]")
    with pytest.raises(ValueError):
        trace_from_json('[{"op": "grab"}]')


def test_csv_layout(trace):
    rows = list(csv.reader(io.StringIO(trace_to_csv(trace))))
    assert rows[0] == ["step", "op", "joint", "delta_rad"]
    assert len(rows) == len(trace) + 1
    assert [int(r[0]) for r in rows[1:]] == list(range(len(trace)))
    for row, step in zip(rows[1:], trace.steps):
        if step.op == "rotate":
            assert float(row[3]) == step.delta  # repr keeps every bit
        else:
            assert row[2:] == ["", ""]


def test_config_round_trip(tmp_path):
    cfg = Config(BoardModel(400, 30), ArmConfig(120, None, 40), IkMode.PAPER_LITERAL, 500)
    path = tmp_path / "cfg.json"
    save_config(cfg, path)
    assert load_config(path) == cfg


def test_config_defaults():
    cfg = Config.from_dict({"board": {"side_length": 320}})
    assert cfg.arm == ArmConfig() and cfg.ik_mode is IkMode.STANDARD
    assert cfg.chess_arm().link_d == 200


def test_derived_link_length():
    cfg = Config(BoardModel(32, 4), ArmConfig(10, None, 2))
    assert cfg.chess_arm().link_d == 13


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"board": {"side_length": -1}},
        {"board": {"side_length": 32}, "ik_mode": "sideways"},
        {"board": {"side_length": 32}, "arm": {"link_d": 0}},
        {"board": {"side_length": 32}, "arm": {"column_height": 10, "gripper_length": 20}},
        {"board": {"side_length": 32}, "trace_cap": 0},
        {"board": "big"},
    ],
)
def test_bad_config(data):
    with pytest.raises(ConfigError):
        Config.from_dict(data).chess_arm()


def test_bad_config_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    with pytest.raises(ConfigError):
        load_config(path)
    path.write_text("[1]")
    with pytest.raises(ConfigError):
        load_config(path)
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")

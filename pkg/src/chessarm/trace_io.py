"""Trace export and import (JSON and CSV)."""

from __future__ import annotations

import csv
import io
import json

from .engine import MotionStep, MotionTrace, Phase

FORMAT_NAME = "chessarm-trace"
FORMAT_VERSION = 1


def _step_dict(step: MotionStep, index: int, command: int) -> dict:
    if step.op == "rotate":
        out = {"op": "rotate", "joint": step.joint, "delta_rad": step.delta}
    else:
        out = {"op": step.op}
    out["phase"] = step.phase.value if step.phase is not None else None
    out["command"] = command
    return out


def trace_to_json(trace: MotionTrace, config: dict | None = None) -> str:
    """JSON array: a header object followed by one object per step.

    Output depends only on its inputs, so equal traces give equal bytes.
    """
    header = {
        "header": {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "config": config,
            "commands": [{"start": start, "text": text} for start, text in trace.annotations],
            "steps": len(trace.steps),
        }
    }
    payload = [header]
    payload.extend(_step_dict(s, i, trace.command_of(i)) for i, s in enumerate(trace.steps))
    return json.dumps(payload, indent=1) + "\n"


def trace_from_json(text: str) -> tuple[MotionTrace, dict | None]:
    data = json.loads(text)
    if not data or "header" not in data[0]:
        raise ValueError("trace JSON must start with a header object")
    header = data[0]["header"]
    steps = []
    for item in data[1:]:
        phase = Phase(item["phase"]) if item.get("phase") else None
        if item["op"] == "rotate":
            steps.append(MotionStep("rotate", item["joint"], float(item["delta_rad"]), phase))
        else:
            steps.append(MotionStep(item["op"], phase=phase))
    annotations = tuple((c["start"], c["text"]) for c in header.get("commands", []))
    return MotionTrace(tuple(steps), annotations), header.get("config")


def trace_to_csv(trace: MotionTrace) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["step", "op", "joint", "delta_rad"])
    for i, s in enumerate(trace.steps):
        if s.op == "rotate":
            writer.writerow([i, s.op, s.joint, repr(s.delta)])
        else:
            writer.writerow([i, s.op, "", ""])
    return buf.getvalue()

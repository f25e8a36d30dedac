"""Figures written next to the CLI's delimited output.

Uses the object-oriented matplotlib API (no pyplot global state), so it is
safe to call from scripts and tests without a display.
"""

from __future__ import annotations

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure
from matplotlib.patches import Circle, Rectangle

from .chessbot import BoardModel, ReachReport
from .engine import REGISTERS, MotionTrace
from .workspace import WorkspaceCloud

FIGSIZE = (6.0, 6.0)
DPI = 120


def _save(fig, path):
    FigureCanvasAgg(fig)
    fig.savefig(path, dpi=DPI, bbox_inches="tight")


def plot_workspace(cloud: WorkspaceCloud, path) -> None:
    arm = cloud.arm
    fig = Figure(figsize=FIGSIZE)
    ax = fig.add_subplot()
    ax.scatter(cloud.points[:, 0], cloud.points[:, 1], s=1, c="tab:blue", alpha=0.4, linewidths=0)
    for r in {arm.max_reach, arm.min_reach} - {0.0}:
        ax.add_patch(Circle((0.0, arm.l0), r, fill=False, ls="--", lw=0.8, ec="0.3"))
    ax.plot([0.0], [arm.l0], "k+")
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(f"workspace  l1={arm.l1:g}  l2={arm.l2:g}  n={len(cloud)}")
    _save(fig, path)


def plot_reach_report(report: ReachReport, board: BoardModel, path) -> None:
    fig = Figure(figsize=FIGSIZE)
    ax = fig.add_subplot()
    s = board.cell_side
    for c in report.cells:
        xf, yf = c.center
        color = "tab:green" if c.reachable else "tab:red"
        ax.add_patch(Rectangle((xf - s / 2, yf - s / 2), s, s, fc=color, ec="k", lw=0.5, alpha=0.6))
    ax.plot([0.0], [0.0], "ko")
    hx, hy = report.home.center
    ax.plot([hx], [hy], "k^" if report.home.reachable else "rx")
    L = board.side_length
    ax.set_xlim(-L / 2 - s, L / 2 + s)
    ax.set_ylim(-s, L + board.dif + s)
    ax.set_aspect("equal")
    ax.set_title(f"{report.mode.value}: {report.reachable_count}/{len(report.cells)} cells reachable")
    _save(fig, path)


def plot_trace(trace: MotionTrace, path) -> None:
    """Joint registers after each step."""
    fig = Figure(figsize=(8.0, 4.0))
    ax = fig.add_subplot()
    n = len(trace.steps)
    series = {j: np.zeros(n + 1) for j in REGISTERS}
    for i, step in enumerate(trace.steps, 1):
        for j in REGISTERS:
            series[j][i] = series[j][i - 1]
        if step.op == "rotate":
            series[step.joint][i] += step.delta
    for j, ys in series.items():
        ax.step(np.arange(n + 1), ys, where="post", label=j)
    for start, _ in trace.annotations:
        ax.axvline(start, color="0.85", lw=0.5, zorder=0)
    ax.set_xlabel("step")
    ax.set_ylabel("angle [rad]")
    ax.legend(loc="best", fontsize="small")
    _save(fig, path)

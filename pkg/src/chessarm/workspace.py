"""Workspace sampling, reachability queries and base-structure classes."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import IkFailure, Singular, TooFewJoints
from .kinematics import Branch, JointChain, PlanarArm, angle_in_interval, ik_planar

# Angular slack when checking IK output against joint limits. Near full
# stretch or fold the recovered angles are only good to about sqrt(eps).
LIMIT_TOL = 1e-7


class Coordinates(enum.Enum):
    CARTESIAN = "Cartesian"
    CYLINDRICAL = "Cylindrical"
    SPHERICAL = "Spherical"
    TORICAL = "Torical"
    ANTHROPOMORPHIC = "Anthropomorphic"
    NONE = "None"


class StructureCode(enum.Enum):
    PPP = "PPP"
    RPP_PRP = "RPP_PRP"
    RRP = "RRP"
    RRP_PRR_TORICAL = "RRP_PRR_torical"
    RRR = "RRR"
    OTHER = "Other"


@dataclass(frozen=True)
class StructureClass:
    code: StructureCode
    industry_share: float | None
    coordinate_system: Coordinates


# Share of industrial arms (percent) and the coordinate system each base suits.
STRUCTURES = {
    StructureCode.PPP: StructureClass(StructureCode.PPP, 14, Coordinates.CARTESIAN),
    StructureCode.RPP_PRP: StructureClass(StructureCode.RPP_PRP, 47, Coordinates.CYLINDRICAL),
    StructureCode.RRP: StructureClass(StructureCode.RRP, 13, Coordinates.SPHERICAL),
    StructureCode.RRP_PRR_TORICAL: StructureClass(StructureCode.RRP_PRR_TORICAL, 1, Coordinates.TORICAL),
    StructureCode.RRR: StructureClass(StructureCode.RRR, 25, Coordinates.ANTHROPOMORPHIC),
    StructureCode.OTHER: StructureClass(StructureCode.OTHER, None, Coordinates.NONE),
}


def classify_structure(chain: JointChain, coordinates: Coordinates | None = None) -> StructureClass:
    """Classify by the kinds of the first three joints, ignoring their order.

    Two revolutes and one prismatic map to the spherical class unless the
    caller says the arm is torical.
    """
    if len(chain.joints) < 3:
        raise TooFewJoints(f"need at least 3 joints, got {len(chain.joints)}")
    key = "".join(sorted(chain.code[:3]))
    if key == "PPP":
        code = StructureCode.PPP
    elif key == "PPR":
        code = StructureCode.RPP_PRP
    elif key == "PRR":
        code = StructureCode.RRP_PRR_TORICAL if coordinates is Coordinates.TORICAL else StructureCode.RRP
    elif key == "RRR":
        code = StructureCode.RRR
    else:
        code = StructureCode.OTHER
    return STRUCTURES[code]


@dataclass(frozen=True)
class WorkspaceCloud:
    arm: PlanarArm
    points: np.ndarray  # (resolution**2, 2), base frame
    resolution: int

    def __len__(self):
        return len(self.points)


def _grid_angles(arm: PlanarArm, resolution: int):
    shoulder = np.linspace(*arm.shoulder_limits, resolution)
    elbow = np.linspace(*arm.elbow_limits, resolution)
    return np.meshgrid(shoulder, elbow, indexing="ij")


def sample_workspace(arm: PlanarArm, resolution: int) -> WorkspaceCloud:
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    phi, theta = _grid_angles(arm, resolution)
    x = arm.l1 * np.cos(phi) + arm.l2 * np.cos(theta)
    y = arm.l0 + arm.l1 * np.sin(phi) + arm.l2 * np.sin(theta)
    points = np.column_stack([x.ravel(), y.ravel()])
    return WorkspaceCloud(arm, points, resolution)


def _folded_pose_in_limits(arm: PlanarArm) -> bool:
    # Equal links folded back on the shoulder: elbow_abs = shoulder + pi for any shoulder.
    slo, shi = arm.shoulder_limits
    elo, ehi = arm.elbow_limits[0] - math.pi, arm.elbow_limits[1] - math.pi
    return angle_in_interval(slo, elo, ehi, LIMIT_TOL) or angle_in_interval(elo, slo, shi, LIMIT_TOL)


def reachable(arm: PlanarArm, point: tuple[float, float]) -> bool:
    """Whether ``point`` (base frame) has an IK solution inside the joint limits."""
    target = (point[0], point[1] - arm.l0)
    for branch in Branch:
        try:
            angles = ik_planar(arm, target, branch)
        except Singular:
            return _folded_pose_in_limits(arm)
        except IkFailure:
            return False
        if angle_in_interval(angles.shoulder, *arm.shoulder_limits, LIMIT_TOL) and angle_in_interval(
            angles.elbow_abs, *arm.elbow_limits, LIMIT_TOL
        ):
            return True
    return False


def sample_pitch(arm: PlanarArm, resolution: int) -> float:
    """Largest tip displacement between neighbouring grid samples."""
    ds = (arm.shoulder_limits[1] - arm.shoulder_limits[0]) / (resolution - 1)
    de = (arm.elbow_limits[1] - arm.elbow_limits[0]) / (resolution - 1)
    return max(arm.l1 * ds, arm.l2 * de)


def default_cell_size(cloud: WorkspaceCloud) -> float:
    return sample_pitch(cloud.arm, cloud.resolution) / 2


def _triangles(cloud: WorkspaceCloud) -> np.ndarray:
    """Split every angle-grid quad's image into two triangles, shape (T, 3, 2)."""
    n = cloud.resolution
    g = cloud.points.reshape(n, n, 2)
    a, b, c, d = g[:-1, :-1], g[1:, :-1], g[1:, 1:], g[:-1, 1:]
    tri = np.concatenate([np.stack([a, b, c], axis=-2), np.stack([a, c, d], axis=-2)])
    return tri.reshape(-1, 3, 2)


def covered_cells(cloud: WorkspaceCloud, cell: float) -> np.ndarray:
    """Grid cells (anchored at the shoulder) whose centre lies in the sampled image.

    The image is the union of the triangulated angle-grid quads, so cells can
    be finer than the sample pitch without leaving holes.
    """
    tri = _triangles(cloud) - np.array([0.0, cloud.arm.l0])
    p0, p1, p2 = tri[:, 0], tri[:, 1], tri[:, 2]
    e1, e2 = p1 - p0, p2 - p0
    det = e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]
    keep = np.abs(det) > 1e-12 * cell * cell
    p0, e1, e2, det, tri = p0[keep], e1[keep], e2[keep], det[keep], tri[keep]

    lo = np.floor(tri.min(axis=1) / cell - 0.5).astype(np.int64)
    hi = np.floor(tri.max(axis=1) / cell - 0.5).astype(np.int64) + 1
    span = int((hi - lo).max()) + 1
    found = []
    eps = 1e-12
    for di in range(span):
        for dj in range(span):
            idx = lo + np.array([di, dj])
            centre = (idx + 0.5) * cell
            v = centre - p0
            u = (v[:, 0] * e2[:, 1] - v[:, 1] * e2[:, 0]) / det
            w = (e1[:, 0] * v[:, 1] - e1[:, 1] * v[:, 0]) / det
            inside = (u >= -eps) & (w >= -eps) & (u + w <= 1 + eps) & (idx <= hi).all(axis=1)
            found.append(idx[inside])
    return np.unique(np.concatenate(found), axis=0)


def coverage_area(cloud: WorkspaceCloud, cell: float | None = None) -> float:
    cell = default_cell_size(cloud) if cell is None else cell
    return len(covered_cells(cloud, cell)) * cell * cell


def region_area(arm: PlanarArm, cell: float) -> float:
    """Reachable area by IK membership of each grid cell centre."""
    n = math.ceil(arm.max_reach / cell) + 1
    count = 0
    for i in range(-n, n):
        cx = (i + 0.5) * cell
        for j in range(-n, n):
            cy = (j + 0.5) * cell
            if math.hypot(cx, cy) > arm.max_reach + cell:
                continue
            if reachable(arm, (cx, cy + arm.l0)):
                count += 1
    return count * cell * cell


def annulus_area(arm: PlanarArm) -> float:
    return math.pi * (arm.max_reach**2 - arm.min_reach**2)

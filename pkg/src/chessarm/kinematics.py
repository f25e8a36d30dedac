"""Joint chains, planar forward/inverse kinematics and limit checks.

Angles are radians. The planar arm measures both the shoulder angle and the
elbow angle from the horizontal (absolute angles); see ``fk_planar``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import LengthMismatch, OutOfReach, Singular

TWO_PI = 2.0 * math.pi

# acos/asin arguments this close to +/-1 are clamped instead of rejected.
CLAMP_EPS = 1e-12


class JointKind(enum.Enum):
    PRISMATIC = "P"
    REVOLUTE = "R"


class Branch(enum.Enum):
    ELBOW_UP = "up"
    ELBOW_DOWN = "down"


@dataclass(frozen=True)
class Joint:
    """One actuated joint and the link that follows it.

    ``joint_weight`` is the weight of the actuator housed at the joint itself;
    it only matters for static moment sums about upstream joints.
    """

    kind: JointKind = JointKind.REVOLUTE
    min_limit: float = -math.pi
    max_limit: float = math.pi
    link_length: float = 0.0
    link_weight: float = 0.0
    joint_weight: float = 0.0

    def __post_init__(self):
        if not self.min_limit <= self.max_limit:
            raise ValueError(f"min_limit {self.min_limit} > max_limit {self.max_limit}")
        if self.link_length < 0 or self.link_weight < 0 or self.joint_weight < 0:
            raise ValueError("link length and weights must be non-negative")


@dataclass(frozen=True)
class JointChain:
    base_height: float = 0.0
    joints: tuple[Joint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "joints", tuple(self.joints))

    @property
    def dof(self) -> int:
        return len(self.joints)

    @property
    def code(self) -> str:
        return "".join(j.kind.value for j in self.joints)

    def __len__(self):
        return len(self.joints)


@dataclass(frozen=True)
class Pose2:
    x: float
    y: float
    orientation: float


@dataclass(frozen=True)
class AnglePair:
    shoulder: float
    elbow_abs: float

    def __post_init__(self):
        if not (math.isfinite(self.shoulder) and math.isfinite(self.elbow_abs)):
            raise ValueError("angles must be finite")

    @property
    def elbow_rel(self) -> float:
        return self.elbow_abs - self.shoulder


@dataclass(frozen=True)
class PlanarArm:
    """Base column ``l0`` topped by a two-link planar arm ``l1``, ``l2``."""

    l1: float
    l2: float
    l0: float = 0.0
    shoulder_limits: tuple[float, float] = (-math.pi, math.pi)
    elbow_limits: tuple[float, float] = (-math.pi, math.pi)

    def __post_init__(self):
        if self.l0 < 0 or self.l1 <= 0 or self.l2 <= 0:
            raise ValueError("need l0 >= 0, l1 > 0, l2 > 0")
        for lo, hi in (self.shoulder_limits, self.elbow_limits):
            if not lo <= hi:
                raise ValueError(f"bad limit interval ({lo}, {hi})")

    @property
    def max_reach(self) -> float:
        return self.l1 + self.l2

    @property
    def min_reach(self) -> float:
        return abs(self.l1 - self.l2)

    def as_chain(self) -> JointChain:
        return JointChain(
            base_height=self.l0,
            joints=(
                Joint(JointKind.REVOLUTE, *self.shoulder_limits, link_length=self.l1),
                Joint(JointKind.REVOLUTE, *self.elbow_limits, link_length=self.l2),
            ),
        )


def normalize_angle(a: float) -> float:
    """Wrap ``a`` into (-pi, pi]."""
    wrapped = math.fmod(a, TWO_PI)
    if wrapped <= -math.pi:
        wrapped += TWO_PI
    elif wrapped > math.pi:
        wrapped -= TWO_PI
    return wrapped


def angle_in_interval(a: float, lo: float, hi: float, tol: float = 0.0) -> bool:
    """True if some 2*pi shift of ``a`` lies in [lo - tol, hi + tol]."""
    if hi - lo >= TWO_PI - tol:
        return True
    offset = math.fmod(a - lo, TWO_PI)
    if offset < 0:
        offset += TWO_PI
    return offset <= hi - lo + tol or offset >= TWO_PI - tol


def fk_planar(arm: PlanarArm, angles: AnglePair) -> Pose2:
    phi, theta = angles.shoulder, angles.elbow_abs
    x = arm.l1 * math.cos(phi) + arm.l2 * math.cos(theta)
    y = arm.l0 + arm.l1 * math.sin(phi) + arm.l2 * math.sin(theta)
    # Orientation is the plain sum of the two angles, as in the source formulas,
    # even though both are absolute.
    return Pose2(x, y, normalize_angle(phi + theta))


def _elbow_cosine(arm: PlanarArm, x: float, y: float) -> float:
    r = math.hypot(x, y)
    scale = arm.l1 + arm.l2
    if r <= 1e-12 * scale and abs(arm.l1 - arm.l2) <= 1e-12 * scale:
        raise Singular("target at the shoulder with equal links: infinitely many solutions")
    c2 = (x * x + y * y - arm.l1**2 - arm.l2**2) / (2.0 * arm.l1 * arm.l2)
    if abs(c2) > 1.0 + CLAMP_EPS:
        raise OutOfReach(r, arm.min_reach, arm.max_reach)
    return max(-1.0, min(1.0, c2))


def ik_planar(arm: PlanarArm, target: tuple[float, float], branch: Branch = Branch.ELBOW_UP) -> AnglePair:
    """Two-link inverse kinematics for a target measured from the shoulder.

    ``ELBOW_UP`` takes the positive root for the elbow sine, ``ELBOW_DOWN``
    the negative one. Limits are not checked here; see ``reachable``.
    """
    x, y = target
    c2 = _elbow_cosine(arm, x, y)
    s2 = math.sqrt(1.0 - c2 * c2)
    if branch is Branch.ELBOW_DOWN:
        s2 = -s2
    rel = math.atan2(s2, c2)
    shoulder = math.atan2(y, x) - math.atan2(arm.l2 * s2, arm.l1 + arm.l2 * c2)
    shoulder = normalize_angle(shoulder)
    return AnglePair(shoulder, shoulder + rel)


def ik_planar_paper(arm: PlanarArm, target: tuple[float, float]) -> tuple[float, float]:
    """Literal closed form: (acos(c2), asin(...)) with the positive sine root.

    Returns ``(elbow_rel, shoulder)``. The asin only covers shoulder angles in
    [-pi/2, pi/2]; outside that band it yields ``pi - shoulder`` instead.
    """
    x, y = target
    c2 = _elbow_cosine(arm, x, y)
    s2 = math.sqrt(1.0 - c2 * c2)
    elbow_rel = math.acos(c2)
    ratio = (y * (arm.l1 + arm.l2 * c2) - x * arm.l2 * s2) / (x * x + y * y)
    shoulder = math.asin(max(-1.0, min(1.0, ratio)))
    return elbow_rel, shoulder


def within_limits(chain: JointChain, joint_values) -> bool:
    values = list(joint_values)
    if len(values) != len(chain.joints):
        raise LengthMismatch(f"{len(values)} values for {len(chain.joints)} joints")
    return all(j.min_limit <= v <= j.max_limit for j, v in zip(chain.joints, values))


def dof_feasible(dof_robot: int, dof_task: int) -> bool:
    if dof_robot < 0 or dof_task < 0:
        raise ValueError("degrees of freedom must be non-negative")
    return dof_task == dof_robot


__all__ = [
    "AnglePair",
    "Branch",
    "Joint",
    "JointChain",
    "JointKind",
    "PlanarArm",
    "Pose2",
    "angle_in_interval",
    "dof_feasible",
    "fk_planar",
    "ik_planar",
    "ik_planar_paper",
    "normalize_angle",
    "within_limits",
]

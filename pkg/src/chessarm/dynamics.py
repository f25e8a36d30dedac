"""Static moment-arm torques, tip speed, spin-up torque and gripper sizing.

No unit system is enforced. The reference convention is N, m, kg, s; any
consistent set works. Gravity is never added implicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .errors import IndexOutOfRange, NonPositiveTime
from .kinematics import Joint, JointChain


def _check_non_negative(obj):
    for f in fields(obj):
        if getattr(obj, f.name) < 0:
            raise ValueError(f"{f.name} must be non-negative")


@dataclass(frozen=True)
class LoadSpec3:
    """Stretched-out 3-DOF arm load case.

    ``w1``/``w2`` are the link weights, ``w3`` the lifted object and ``w4``
    the actuator sitting at joint 2. ``l3`` is the lever arm of ``w3``
    measured from joint 2.
    """

    l1: float
    l2: float
    l3: float
    w1: float = 0.0
    w2: float = 0.0
    w3: float = 0.0
    w4: float = 0.0

    def __post_init__(self):
        _check_non_negative(self)


@dataclass(frozen=True)
class SpinSpec:
    m_arm: float
    m_payload: float
    length: float
    omega: float
    time: float

    def __post_init__(self):
        if self.time <= 0:
            raise NonPositiveTime(f"ramp time must be positive, got {self.time}")
        _check_non_negative(self)


@dataclass(frozen=True)
class GripperSpec:
    grip_force: float
    jaw_length: float
    part_mass: float
    accel_total: float

    def __post_init__(self):
        _check_non_negative(self)


def joint_moments(load: LoadSpec3) -> tuple[float, float]:
    """Moments about the two lifting joints with each link's mass at its midpoint."""
    l1, l2, l3 = load.l1, load.l2, load.l3
    m1 = (l1 / 2) * load.w1 + l1 * load.w4 + (l1 + l2 / 2) * load.w2 + (l1 + l3) * load.w3
    m2 = (l2 / 2) * load.w2 + l3 * load.w3
    return m1, m2


def static_moment_generic(chain: JointChain, payload: float, about_joint: int) -> float:
    """Gravity moment about ``about_joint`` with the chain stretched horizontally.

    Each downstream link weight acts at its midpoint, each downstream joint
    weight at its joint, and the payload at the tip.
    """
    if not 0 <= about_joint < len(chain.joints):
        raise IndexOutOfRange(f"joint {about_joint} not in chain of {len(chain.joints)}")
    total = 0.0
    reach = 0.0
    for k, joint in enumerate(chain.joints[about_joint:]):
        if k > 0:
            total += joint.joint_weight * reach
        total += joint.link_weight * (reach + joint.link_length / 2)
        reach += joint.link_length
    return total + payload * reach


def template_chain(load: LoadSpec3) -> JointChain:
    """The two lifting joints of ``load`` as a chain (payload goes at the tip)."""
    return JointChain(
        joints=(
            Joint(link_length=load.l1, link_weight=load.w1),
            Joint(link_length=load.l2, link_weight=load.w2, joint_weight=load.w4),
        )
    )


def tip_speed(radius: float, freq: float) -> float:
    """Linear speed of a point ``radius`` from the axis at ``freq`` rev/s."""
    if radius < 0 or freq < 0:
        raise ValueError("radius and frequency must be non-negative")
    return 2 * math.pi * radius * freq


def spin_up_torque(spec: SpinSpec) -> tuple[float, float, float]:
    """Torque to reach ``omega`` from rest in ``time`` about a gravity-free axis.

    The arm's mass is lumped at L/2 and the payload at L.
    """
    accel = spec.omega / spec.time
    tau_arm = spec.m_arm * (spec.length**2 / 4) * accel
    tau_obj = spec.m_payload * spec.length**2 * accel
    return tau_arm, tau_obj, tau_arm + tau_obj


def gripper_torque(spec: GripperSpec) -> tuple[float, float, float]:
    tau_gripper = spec.grip_force * spec.jaw_length
    tau_part = spec.accel_total * spec.part_mass * spec.jaw_length
    return tau_gripper, tau_part, tau_gripper + tau_part

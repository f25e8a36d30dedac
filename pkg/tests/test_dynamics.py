import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chessarm.dynamics import (
    GripperSpec,
    LoadSpec3,
    SpinSpec,
    gripper_torque,
    joint_moments,
    spin_up_torque,
    static_moment_generic,
    template_chain,
    tip_speed,
)
from chessarm.errors import IndexOutOfRange, NonPositiveTime
from chessarm.kinematics import Joint, JointChain
from oracles import figure_moments_by_quadrature, moment_by_quadrature


@pytest.mark.parametrize(
    "load, expected",
    [
        (LoadSpec3(1, 1, 1, 1, 1, 1, 1), (5.0, 1.5)),
        (LoadSpec3(1, 1, 1), (0.0, 0.0)),
        (LoadSpec3(l1=1, l2=0, l3=1, w3=2), (4.0, 2.0)),
    ],
)
def test_joint_moments_examples(load, expected):
    assert joint_moments(load) == pytest.approx(expected, abs=1e-12)


def test_generic_moment_examples():
    two = JointChain(joints=[Joint(link_length=1, link_weight=1), Joint(link_length=1, link_weight=1)])
    assert static_moment_generic(two, 0.0, 0) == pytest.approx(2.0, abs=1e-12)
    bare = JointChain(joints=[Joint(link_length=1), Joint(link_length=1)])
    assert static_moment_generic(bare, 1.0, 0) == pytest.approx(2.0, abs=1e-12)
    assert static_moment_generic(bare, 0.0, 1) == 0.0
    with pytest.raises(IndexOutOfRange):
        static_moment_generic(bare, 0.0, 2)


chains = st.lists(
    st.tuples(st.floats(0, 5), st.floats(0, 5), st.floats(0, 5)), min_size=1, max_size=5
).map(
    lambda rows: JointChain(
        joints=[Joint(link_length=l, link_weight=w, joint_weight=j) for l, w, j in rows]
    )
)


@given(chains, st.floats(0, 5), st.data())
def test_generic_moment_matches_quadrature(chain, payload, data):
    k = data.draw(st.integers(0, len(chain) - 1))
    segments = []
    reach = 0.0
    for i, joint in enumerate(chain.joints[k:]):
        if i > 0:
            segments.append((reach, 0.0, joint.joint_weight))
        segments.append((reach, joint.link_length, joint.link_weight))
        reach += joint.link_length
    expected = moment_by_quadrature(segments, payload, reach)
    assert static_moment_generic(chain, payload, k) == pytest.approx(expected, rel=1e-12, abs=1e-12)


@given(chains, st.floats(0, 5), st.floats(0, 10))
def test_generic_moment_is_linear_in_payload(chain, payload, scale):
    base = static_moment_generic(chain, 0.0, 0)
    with_load = static_moment_generic(chain, payload * scale, 0)
    unit = static_moment_generic(chain, payload, 0) - base
    assert with_load - base == pytest.approx(scale * unit, rel=1e-9, abs=1e-9)
    assert with_load >= 0


loads = st.builds(
    LoadSpec3,
    *[st.floats(0, 10) for _ in range(7)],
)


@given(loads)
def test_template_chain_against_quadrature(load):
    m1_ref, _ = figure_moments_by_quadrature(load.l1, load.l2, load.l3, load.w1, load.w2, load.w3, load.w4)
    assert static_moment_generic(template_chain(load), load.w3, 0) == pytest.approx(m1_ref, rel=1e-12, abs=1e-12)


@given(loads)
def test_m2_matches_quadrature_and_m1_gap(load):
    m1, m2 = joint_moments(load)
    m1_ref, m2_ref = figure_moments_by_quadrature(load.l1, load.l2, load.l3, load.w1, load.w2, load.w3, load.w4)
    assert m2 == pytest.approx(m2_ref, rel=1e-12, abs=1e-12)
    # The closed form puts the object at l1 + l3 instead of at the tip l1 + l2.
    assert m1 - m1_ref == pytest.approx((load.l3 - load.l2) * load.w3, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("field", ["w1", "w2", "w3", "w4"])
@given(load=loads, scale=st.floats(0, 10))
def test_joint_moments_superposition(field, load, scale):
    only = {f: 0.0 for f in ("w1", "w2", "w3", "w4")}
    only[field] = getattr(load, field)
    single = LoadSpec3(load.l1, load.l2, load.l3, **only)
    only[field] *= scale
    scaled = LoadSpec3(load.l1, load.l2, load.l3, **only)
    for a, b in zip(joint_moments(scaled), joint_moments(single)):
        assert a == pytest.approx(scale * b, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize(
    "radius, freq, expected",
    [(1, 1, 2 * math.pi), (0, 10, 0.0), (0.5, 2, 2 * math.pi)],
)
def test_tip_speed(radius, freq, expected):
    assert tip_speed(radius, freq) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize(
    "spec, motor",
    [
        (SpinSpec(4, 1, 2, math.pi, 2), 4 * math.pi),
        (SpinSpec(0, 0, 2, math.pi, 2), 0.0),
        (SpinSpec(4, 0, 1, math.pi, 2), math.pi / 2),
    ],
)
def test_spin_up_examples(spec, motor):
    arm, obj, total = spin_up_torque(spec)
    assert total == pytest.approx(motor, abs=1e-12)
    assert total == arm + obj


def test_spin_up_parts():
    arm, obj, _ = spin_up_torque(SpinSpec(4, 1, 2, math.pi, 2))
    assert arm == pytest.approx(2 * math.pi, abs=1e-12)
    assert obj == pytest.approx(2 * math.pi, abs=1e-12)


def test_spin_requires_positive_time():
    with pytest.raises(NonPositiveTime):
        SpinSpec(1, 1, 1, 1, 0)


@pytest.mark.parametrize(
    "spec, expected",
    [
        (GripperSpec(10, 0.1, 1, 10), (1.0, 1.0, 2.0)),
        (GripperSpec(10, 0.0, 1, 10), (0.0, 0.0, 0.0)),
        (GripperSpec(20, 0.15, 0, 123.0), (3.0, 0.0, 3.0)),
    ],
)
def test_gripper_torque(spec, expected):
    out = gripper_torque(spec)
    assert out == pytest.approx(expected, abs=1e-12)
    assert out[2] == out[0] + out[1]


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        LoadSpec3(1, 1, 1, w1=-1)
    with pytest.raises(ValueError):
        GripperSpec(-1, 1, 1, 1)
    with pytest.raises(ValueError):
        tip_speed(-1, 1)

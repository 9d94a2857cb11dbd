import math
import random

import pytest

from symm_mp import broken
from symm_mp.geom import (
    IDENTITY,
    SIGMA,
    ConstantPath,
    TorusPoint,
    TorusRotate,
    point_dist,
    project,
    sigma,
    sup_distance,
)
from symm_mp.harness import random_broken


def simple_two_stage(jump=SIGMA):
    a = TorusRotate(1, 0.5, TorusPoint(0.1, 0.2))
    b = TorusRotate(2, -0.3, jump.apply(a.end))
    return broken.BrokenPath((a, b), (jump,))


def test_gluing_is_enforced():
    a = TorusRotate(1, 0.5, TorusPoint(0.1, 0.2))
    bad = TorusRotate(2, 0.3, TorusPoint(2.0, 2.0))
    with pytest.raises(broken.GluingViolation) as e:
        broken.BrokenPath((a, bad), (IDENTITY,))
    assert e.value.index == 0
    assert e.value.gap > 0.1


def test_jump_count_must_match():
    a = ConstantPath(TorusPoint(0, 0))
    with pytest.raises(ValueError):
        broken.BrokenPath((a,), (IDENTITY,))
    with pytest.raises(broken.TooShort):
        broken.BrokenPath((), ())


def test_iota_then_retract_is_identity():
    rng = random.Random(0)
    for _ in range(200):
        bp = random_broken(rng, "torus")
        assert broken.retract(broken.iota(bp)) == bp


def test_iota_preserves_endpoints():
    bp = simple_two_stage()
    assert broken.eval_ek(broken.iota(bp)) == broken.eval_ek(bp)


def test_stabilize_preserves_endpoints_with_three_stages():
    rng = random.Random(1)
    for _ in range(200):
        bp = random_broken(rng, "torus")
        if bp.stages < 3:
            continue
        s = broken.stabilize_f(bp)
        assert s.stages == bp.stages - 1
        d = max(
            point_dist(a, b)
            for a, b in zip(broken.eval_ek(s), broken.eval_ek(bp))
        )
        assert d <= 1e-12


def test_stabilize_two_stages_lands_in_same_orbit():
    bp = simple_two_stage(SIGMA)
    s = broken.stabilize_f(bp)
    assert s.stages == 1
    start, end = broken.eval_ek(bp)
    s_start, s_end = broken.eval_ek(s)
    assert point_dist(s_start, start) == 0.0
    # the jump was sigma: the collapsed path ends on the other lift
    assert point_dist(s_end, sigma(end)) <= 1e-12
    assert project(s_end) == project(end)


def test_phi_shape_constraints():
    one = broken.BrokenPath((ConstantPath(TorusPoint(0, 0)),), ())
    with pytest.raises(broken.TooShort):
        broken.phi(one)
    three = broken.iota(simple_two_stage())
    with pytest.raises(broken.TooLong):
        broken.phi(three)


def test_phi_matches_twisted_evaluation():
    for jump in (IDENTITY, SIGMA):
        bp = simple_two_stage(jump)
        alpha, g = broken.phi(bp)
        assert g == jump
        got = broken.twisted_eval(alpha, g)
        want = broken.eval_ek(bp)
        assert max(point_dist(a, b) for a, b in zip(got, want)) <= 1e-12


def test_phi_roundtrips_are_structural():
    rng = random.Random(2)
    for _ in range(200):
        bp = random_broken(rng, "torus", max_stages=2)
        if bp.stages != 2:
            continue
        alpha, g = broken.phi(bp)
        back = broken.phi_inv(alpha, g)
        assert back.jumps == bp.jumps
        for p, q in zip(back.paths, bp.paths):
            assert sup_distance(p, q, 50) == 0.0
        alpha2, g2 = broken.phi(back)
        assert g2 == g
        assert sup_distance(alpha2, alpha, 50) == 0.0


def test_q_map_commutes_with_orbit_evaluation():
    for jump in (IDENTITY, SIGMA):
        bp = simple_two_stage(jump)
        gamma = broken.q_map(bp)
        start, end = broken.eval_ek(bp)
        e0, orb = broken.orbit_eval(gamma)
        assert point_dist(e0, start) == 0.0
        assert orb == project(end)


def test_translation_tau():
    x = TorusPoint(0.4, -1.0)
    assert broken.translation_tau(x, x) == IDENTITY
    assert broken.translation_tau(x, sigma(x)) == SIGMA
    with pytest.raises(broken.NotInOrbit):
        broken.translation_tau(x, TorusPoint(0.5, -1.0))


def test_forget_jumps_keeps_orbit_gluing():
    bp = simple_two_stage(SIGMA)
    ordinary = broken.forget_jumps(bp)
    assert ordinary.eval_endpoints() == broken.eval_ek(bp)
    # the ordinary chain accepts sigma-related endpoints...
    loose = broken.OrdinaryBrokenPath(bp.paths)
    assert loose.paths == bp.paths
    # ...but still rejects genuine gaps
    with pytest.raises(broken.GluingViolation):
        broken.OrdinaryBrokenPath(
            (bp.paths[0], ConstantPath(TorusPoint(2.0, 2.0)))
        )


def test_sphere_broken_paths_work_too():
    rng = random.Random(3)
    for _ in range(50):
        bp = random_broken(rng, "sphere", n=3)
        assert broken.retract(broken.iota(bp)) == bp
        if bp.stages >= 3:
            s = broken.stabilize_f(bp)
            d = max(
                point_dist(a, b)
                for a, b in zip(broken.eval_ek(s), broken.eval_ek(bp))
            )
            assert d <= 1e-12

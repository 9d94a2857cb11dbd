import math
import random

import pytest

from symm_mp import torus
from symm_mp.geom import (
    PI,
    TOL,
    TorusPoint,
    orbit_dist,
    point_dist,
    project,
    sigma_torus,
)
from symm_mp.harness import torus_strata, uniform_torus_query

HALF_PI = PI / 2.0


def q(x, y):
    return torus.TorusQuery(TorusPoint(*x), project(TorusPoint(*y)))


def test_special_points_are_sigma_partners():
    rng = random.Random(0)
    for _ in range(100):
        x = TorusPoint(rng.uniform(-PI, PI), rng.uniform(-PI, PI))
        assert point_dist(sigma_torus(torus.a_point(x)), torus.b_point(x)) <= 1e-15


def test_domain_count_is_four():
    assert torus.domain_count() == 4


# frozen classifications for hand-picked queries; lifts chosen so the
# expected label follows from the locus definitions directly
CASES = [
    # generic target in the open half handle -> D1
    ((0.3, 0.7), (0.5, 1.4), "D1", None),
    # antipodal-circle target ahead of x -> D2 on the middle arc
    ((0.3, 0.7), (0.5, 0.7 + PI), "D2", "on_cx"),
    # target on the right boundary circle away from a_x -> D2
    ((0.3, 0.7), (0.3 + HALF_PI, 2.0), "D2", "on_cxd"),
    # target exactly the distinguished point a_x, x off the fixed circles
    ((0.3, 0.7), (0.3 + HALF_PI, PI - 0.7), "D3", None),
    # same but x on the invariant circle at second coordinate 0
    ((0.3, 0.0), (0.3 + HALF_PI, PI), "D4", None),
    # x on the invariant circle, target on the middle arc
    ((0.3, 0.0), (0.4, PI), "D3", "on_cx"),
    # x on the invariant circle at pi, right-boundary target
    ((0.3, PI), (0.3 + HALF_PI, 1.0), "D3", "on_cxd"),
]


@pytest.mark.parametrize("x,y,domain,case", CASES)
def test_classification_frozen_cases(x, y, domain, case):
    label, lift = torus.classify(q(x, y))
    assert label.domain == domain
    if case is not None:
        assert label.case == case
    assert orbit_dist(lift, project(TorusPoint(*y))) <= TOL


@pytest.mark.parametrize("x,y,domain,case", CASES)
def test_sections_solve_their_query(x, y, domain, case):
    query = q(x, y)
    rep = torus.plan(query)
    assert rep.start_error <= 1e-12
    assert rep.orbit_error <= TOL


def test_uniform_queries_land_in_d1():
    rng = random.Random(11)
    for _ in range(2000):
        query = uniform_torus_query(rng)
        label, lift = torus.classify(query)
        assert label.domain == "D1"
        assert orbit_dist(lift, query.z) <= TOL


def test_strata_classify_as_declared():
    rng = random.Random(5)
    for stratum in torus_strata():
        for _ in range(300):
            query = stratum.build(stratum.sample_latent(rng))
            label, _ = torus.classify(query)
            assert stratum.matches(label), (stratum.name, label.stratum)


def test_domains_are_mutually_exclusive():
    """Re-derive membership from the raw locus predicates and check that
    the classifier's answer is the only one consistent with them."""
    rng = random.Random(17)
    strata = torus_strata()
    queries = [uniform_torus_query(rng) for _ in range(200)]
    for stratum in strata:
        queries.extend(
            stratum.build(stratum.sample_latent(rng)) for _ in range(50)
        )
    for query in queries:
        x, z = query.x, query.z
        d1 = any(torus.in_locus_d1(x, y) for y in z.lifts())
        special = orbit_dist(torus.a_point(x), z) <= TOL
        arc = any(torus.in_locus_arc(x, y) for y in z.lifts())
        label, _ = torus.classify(query)
        got = label.domain
        if d1:
            assert got == "D1"
        elif special:
            assert got == ("D4" if torus.on_ab_circles(x) else "D3")
        else:
            assert arc and got in ("D2", "D3")


def test_sections_on_strata():
    rng = random.Random(23)
    for stratum in torus_strata():
        for _ in range(200):
            rep = torus.plan(stratum.build(stratum.sample_latent(rng)))
            assert rep.start_error <= 1e-12
            assert rep.orbit_error <= TOL


def test_plan_report_serializes():
    rep = torus.plan(q((0.3, 0.7), (0.5, 1.4)))
    d = rep.to_dict(samples=5)
    assert d["domain"] == "D1"
    assert d["ok"] is True
    assert len(d["path"]["samples"]) == 5


def test_escape_is_impossible_for_degenerate_inputs():
    # queries sitting exactly on every excluded locus still classify
    for x in [(0.0, 0.0), (0.0, PI), (1.0, HALF_PI)]:
        xx = TorusPoint(*x)
        for y in [xx, sigma_torus(xx), torus.a_point(xx), torus.b_point(xx)]:
            label, lift = torus.classify(torus.TorusQuery(xx, project(y)))
            assert label.domain in ("D1", "D2", "D3", "D4")
            rep = torus.plan(torus.TorusQuery(xx, project(y)))
            assert rep.orbit_error <= TOL

"""Four-domain planner on the torus with free involution.

Given a start point x on T = S^1 x S^1 and a target orbit z (a point of
the quotient Klein bottle), classify (x, z) into one of the domains
D1, D2, D3 = D31 u D32, D4 and emit a path from x ending in z.

All loci are derived from x = (u, v) in angle form:
  half handle  M_x : first coordinate within pi/2 of u
  C_x^I / C_x^D   : its left/right boundary circles (offset -pi/2 / +pi/2)
  C_x             : second coordinate = v + pi, restricted to M_x
  A_x             : union of the three
  a_x = (u + pi/2, pi - v),  b_x = (u - pi/2, v + pi) = sigma(a_x)
  circle_a / circle_b : second coordinate pi / 0 (closed under sigma)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import (
    PI,
    TOL,
    Path,
    OrbitPoint,
    TorusPoint,
    angle_dist,
    chain,
    normalize_angle,
    orbit_dist,
    point_dist,
    project,
    sigma_torus,
)

HALF_PI = PI / 2.0


@dataclass(frozen=True)
class TorusQuery:
    x: TorusPoint
    z: OrbitPoint


@dataclass(frozen=True)
class TorusDomainLabel:
    name: str  # D1 | D2 | D31 | D32 | D4
    case: str | None = None  # for D2/D32: "on_cx" | "on_cxd"

    @property
    def domain(self) -> str:
        """External 4-domain name (D31 and D32 merge into D3)."""
        return "D3" if self.name in ("D31", "D32") else self.name

    @property
    def stratum(self) -> str:
        return self.name if self.case is None else f"{self.name}_{self.case}"


# -- derived loci -----------------------------------------------------------


def theta_of(x: TorusPoint, y: TorusPoint) -> float:
    """Signed first-coordinate offset of y from x, in (-pi, pi]."""
    return normalize_angle(y.a - x.a)


def a_point(x: TorusPoint) -> TorusPoint:
    return TorusPoint(x.a + HALF_PI, PI - x.b)


def b_point(x: TorusPoint) -> TorusPoint:
    return TorusPoint(x.a - HALF_PI, x.b + PI)


def on_ab_circles(x: TorusPoint) -> bool:
    """x on one of the two sigma-invariant horizontal circles."""
    return angle_dist(x.b, 0.0) <= TOL or angle_dist(x.b, PI) <= TOL


def on_c_left(x: TorusPoint, y: TorusPoint) -> bool:
    return angle_dist(theta_of(x, y), -HALF_PI) <= TOL


def on_c_right(x: TorusPoint, y: TorusPoint) -> bool:
    return angle_dist(theta_of(x, y), HALF_PI) <= TOL


def on_c_mid(x: TorusPoint, y: TorusPoint) -> bool:
    """y on the half horizontal arc at second coordinate v + pi."""
    return (
        angle_dist(y.b, x.b + PI) <= TOL
        and abs(theta_of(x, y)) <= HALF_PI + TOL
    )


def in_half_handle_open(x: TorusPoint, y: TorusPoint) -> bool:
    return abs(theta_of(x, y)) < HALF_PI - TOL


def in_locus_d1(x: TorusPoint, y: TorusPoint) -> bool:
    """y in the open half handle, off the middle arc."""
    return in_half_handle_open(x, y) and angle_dist(y.b, x.b + PI) > TOL


def in_locus_arc(x: TorusPoint, y: TorusPoint) -> bool:
    """y in A_x minus (left boundary circle and a_x)."""
    if on_c_left(x, y):
        return False
    if point_dist(y, a_point(x)) <= TOL:
        return False
    return on_c_mid(x, y) or on_c_right(x, y)


# -- classification ---------------------------------------------------------


def classify(q: TorusQuery) -> tuple[TorusDomainLabel, TorusPoint]:
    """Assign exactly one domain label; returns the chosen lift of q.z.

    Order: D1 first, then the z = [a_x] strata, then the A_x strata.
    The returned lift always projects to q.z and is the section target.
    """
    x = q.x
    y0, y1 = q.z.lifts()

    for y in (y0, y1):
        if in_locus_d1(x, y):
            return TorusDomainLabel("D1"), y

    ax = a_point(x)
    bx = b_point(x)
    if orbit_dist(ax, q.z) <= TOL:
        if on_ab_circles(x):
            return TorusDomainLabel("D4"), bx
        return TorusDomainLabel("D31"), bx

    for y in (y0, y1):
        if in_locus_arc(x, y):
            case = "on_cx" if on_c_mid(x, y) else "on_cxd"
            name = "D32" if on_ab_circles(x) else "D2"
            return TorusDomainLabel(name, case), y

    raise RuntimeError(f"query escaped the domain cover: {q!r}")


# -- sections ---------------------------------------------------------------


def section(q: TorusQuery) -> Path:
    """Path from q.x into the orbit q.z prescribed by the domain recipes."""
    label, y = classify(q)
    return _section_for(label, q.x, y)


def _section_for(label: TorusDomainLabel, x: TorusPoint, y: TorusPoint) -> Path:
    u, v = x.a, x.b
    if label.name == "D1":
        theta = normalize_angle(y.a - u)
        psi = normalize_angle(y.b - v)
        return chain([(1, theta), (2, psi)], x)
    if label.name in ("D31", "D4"):
        return chain([(2, PI), (1, -HALF_PI)], x)
    if label.case == "on_cx":
        # holds for both D2 and D32; theta in (-pi/2, pi/2]
        theta = normalize_angle(y.a - u)
        return chain([(2, PI), (1, theta)], x)
    # remaining strata: y on the right boundary circle, y != a_x
    if label.name == "D2":
        psi_a = (-2.0 * v) % (2.0 * math.pi)
        raw = (y.b - v - PI) % (2.0 * math.pi)
        psi = raw - 2.0 * math.pi if raw >= psi_a else raw
        return chain([(2, PI), (1, HALF_PI), (2, psi)], x)
    # D32 on the right boundary circle: x lies on a sigma-invariant circle
    psi = normalize_angle(y.b - v)
    return chain([(1, HALF_PI), (2, psi)], x)


# -- bundled report ---------------------------------------------------------


@dataclass(frozen=True)
class PlanReport:
    query: TorusQuery
    label: TorusDomainLabel
    lift: TorusPoint
    path: Path
    start_error: float
    orbit_error: float

    @property
    def ok(self) -> bool:
        return self.start_error <= 1e-12 and self.orbit_error <= TOL

    def to_dict(self, samples: int = 0) -> dict:
        from .geom import path_to_dict

        return {
            "space": "torus",
            "x": [self.query.x.a, self.query.x.b],
            "z_lift": [self.query.z.rep.a, self.query.z.rep.b],
            "domain": self.label.domain,
            "stratum": self.label.stratum,
            "lift": [self.lift.a, self.lift.b],
            "start_error": self.start_error,
            "orbit_error": self.orbit_error,
            "ok": self.ok,
            "path": path_to_dict(self.path, samples),
        }


def plan(q: TorusQuery) -> PlanReport:
    label, y = classify(q)
    path = _section_for(label, q.x, y)
    return PlanReport(
        query=q,
        label=label,
        lift=y,
        path=path,
        start_error=point_dist(path.start, q.x),
        orbit_error=orbit_dist(path.end, q.z),
    )


def domain_count() -> int:
    return 4


__all__ = [
    "TorusQuery",
    "TorusDomainLabel",
    "PlanReport",
    "classify",
    "section",
    "plan",
    "domain_count",
    "a_point",
    "b_point",
    "theta_of",
    "on_ab_circles",
]

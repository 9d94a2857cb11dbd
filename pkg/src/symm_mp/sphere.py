"""Effectual planner on S^n with antipodal involution.

A frame assigns to each p a spanning family v_0(p), ..., v_k(p) with
v_0(p) = p.  Queries (p, [q]) are classified by the first index whose
inner product with a lift of the target orbit is nonzero; the section is
the shortest constant-speed geodesic from p to the positive lift.

Generic dimensions use the constant canonical basis (k = n + 1); the
parallelizable dimensions 1, 3, 7 use complex / quaternion / octonion
right multiplication (k = n), giving one domain fewer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geom import (
    TOL,
    OrbitPoint,
    Path,
    SpherePoint,
    antipode_sphere,
    sphere_geodesic,
)


class InvalidDimension(ValueError):
    pass


class NumericallyDegenerate(RuntimeError):
    """All frame inner products below tolerance: spanning condition breached."""


# -- division-algebra multiplication ----------------------------------------


def quat_mult(p, q):
    """Hamilton product; exact on integer inputs."""
    a, b, c, d = p
    e, f, g, h = q
    return (
        a * e - b * f - c * g - d * h,
        a * f + b * e + c * h - d * g,
        a * g - b * h + c * e + d * f,
        a * h + b * g - c * f + d * e,
    )


def _quat_conj(p):
    a, b, c, d = p
    return (a, -b, -c, -d)


def oct_mult(p, q):
    """Octonion product via doubling of quaternion pairs; exact on ints."""
    a, b = p[:4], p[4:]
    c, d = q[:4], q[4:]
    # (a, b)(c, d) = (ac - d* b, da + b c*)
    left = tuple(
        x - y for x, y in zip(quat_mult(a, c), quat_mult(_quat_conj(d), b))
    )
    right = tuple(
        x + y for x, y in zip(quat_mult(d, a), quat_mult(b, _quat_conj(c)))
    )
    return left + right


def octonion_table():
    """table[i][j] = (sign, index) with e_i e_j = sign * e_index."""
    table = []
    for i in range(8):
        row = []
        ei = tuple(1 if m == i else 0 for m in range(8))
        for j in range(8):
            ej = tuple(1 if m == j else 0 for m in range(8))
            prod = oct_mult(ei, ej)
            nz = [(m, c) for m, c in enumerate(prod) if c != 0]
            assert len(nz) == 1
            idx, coeff = nz[0]
            row.append((coeff, idx))
        table.append(row)
    return table


def _right_mult_matrix(unit, mult, dim):
    """Matrix M with M @ p = p * unit."""
    cols = []
    for j in range(dim):
        ej = tuple(1 if m == j else 0 for m in range(dim))
        cols.append(mult(ej, unit))
    return np.array(cols, dtype=float).T


# -- frames -----------------------------------------------------------------

PARALLELIZABLE = (1, 3, 7)


@dataclass(frozen=True)
class Frame:
    n: int
    k: int
    kind: str  # "generic" | "parallelizable"
    matrices: tuple = field(default=(), repr=False)  # parallelizable only

    def vectors(self, p: SpherePoint) -> list[SpherePoint]:
        """v_0(p), ..., v_k(p); always v_0(p) = p."""
        if self.kind == "generic":
            basis = [
                SpherePoint(tuple(1.0 if m == i else 0.0 for m in range(self.n + 1)))
                for i in range(self.n + 1)
            ]
            return [p, *basis]
        arr = np.array(p.coords)
        return [p] + [SpherePoint(tuple(M @ arr)) for M in self.matrices[1:]]

    def matrix(self, p: SpherePoint) -> np.ndarray:
        """(k+1) x (n+1) array of frame vectors at p."""
        return np.array([v.coords for v in self.vectors(p)])


def make_frame(n: int) -> Frame:
    if n < 1:
        raise InvalidDimension(f"sphere dimension must be >= 1, got {n}")
    if n == 1:
        rot = np.array([[0.0, -1.0], [1.0, 0.0]])  # multiplication by i
        return Frame(n=1, k=1, kind="parallelizable", matrices=(np.eye(2), rot))
    if n == 3:
        mats = [np.eye(4)]
        for i in (1, 2, 3):
            unit = tuple(1 if m == i else 0 for m in range(4))
            mats.append(_right_mult_matrix(unit, quat_mult, 4))
        return Frame(n=3, k=3, kind="parallelizable", matrices=tuple(mats))
    if n == 7:
        mats = [np.eye(8)]
        for i in range(1, 8):
            unit = tuple(1 if m == i else 0 for m in range(8))
            mats.append(_right_mult_matrix(unit, oct_mult, 8))
        return Frame(n=7, k=7, kind="parallelizable", matrices=tuple(mats))
    return Frame(n=n, k=n + 1, kind="generic")


def domain_count(f: Frame) -> int:
    return f.k + 1


# -- classification and sections --------------------------------------------


@dataclass(frozen=True)
class SphereQuery:
    p: SpherePoint
    z: OrbitPoint


def classify_sphere(f: Frame, q: SphereQuery) -> tuple[int, SpherePoint]:
    """First index i with |<lift, v_i(p)>| > TOL, lift chosen positive."""
    rep = q.z.rep
    for i, v in enumerate(f.vectors(q.p)):
        d = rep.dot(v)
        if abs(d) > TOL:
            return i, (rep if d > 0 else antipode_sphere(rep))
    raise NumericallyDegenerate(
        "all frame inner products within tolerance of zero"
    )


def section_sphere(f: Frame, q: SphereQuery) -> Path:
    _, target = classify_sphere(f, q)
    return sphere_geodesic(q.p, target)


@dataclass(frozen=True)
class SpherePlanReport:
    query: SphereQuery
    index: int
    lift: SpherePoint
    path: Path
    start_error: float
    orbit_error: float

    @property
    def ok(self) -> bool:
        return self.start_error <= 1e-12 and self.orbit_error <= TOL

    def to_dict(self, samples: int = 0) -> dict:
        from .geom import SphereGeodesic, path_to_dict

        omega = self.path.omega if isinstance(self.path, SphereGeodesic) else 0.0
        return {
            "space": "sphere",
            "n": self.query.p.dim,
            "p": list(self.query.p.coords),
            "z_lift": list(self.query.z.rep.coords),
            "domain_index": self.index,
            "lift": list(self.lift.coords),
            "geodesic_angle": omega,
            "start_error": self.start_error,
            "orbit_error": self.orbit_error,
            "ok": self.ok,
            "path": path_to_dict(self.path, samples),
        }


def plan_sphere(f: Frame, q: SphereQuery) -> SpherePlanReport:
    from .geom import orbit_dist, point_dist

    index, lift = classify_sphere(f, q)
    path = sphere_geodesic(q.p, lift)
    return SpherePlanReport(
        query=q,
        index=index,
        lift=lift,
        path=path,
        start_error=point_dist(path.start, q.p),
        orbit_error=orbit_dist(path.end, q.z),
    )


__all__ = [
    "Frame",
    "SphereQuery",
    "SpherePlanReport",
    "InvalidDimension",
    "NumericallyDegenerate",
    "make_frame",
    "domain_count",
    "classify_sphere",
    "section_sphere",
    "plan_sphere",
    "quat_mult",
    "oct_mult",
    "octonion_table",
    "PARALLELIZABLE",
]

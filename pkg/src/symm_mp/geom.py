"""Core geometry: circles, tori, spheres, the free involution, orbits,
and symbolic paths with exact concatenation / splitting.

Angles live in (-pi, pi] with the boundary assigned to +pi.  Paths are
segment trees, never sampled arrays, so that concat/split round trips are
structural identities rather than numerical approximations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property

TOL = 1e-9        # membership predicates, endpoint gluing
ARITH_TOL = 1e-12  # pure-arithmetic identities
TWO_PI = 2.0 * math.pi
PI = math.pi


class EndpointMismatch(ValueError):
    """Concatenation attempted across mismatched endpoints."""


class PathDomainError(ValueError):
    """Path evaluated outside [0, 1]."""


class AntipodalEndpoints(ValueError):
    """Geodesic requested between (numerically) antipodal sphere points."""


def normalize_angle(a: float) -> float:
    """Reduce an angle to (-pi, pi]; idempotent bit-for-bit."""
    if -PI < a <= PI:
        return a
    r = a % TWO_PI  # [0, 2*pi), up to rounding at the wrap
    if r > PI:
        r -= TWO_PI
    return r


def angle_dist(a: float, b: float) -> float:
    """Shortest angular distance between two angles."""
    return abs(normalize_angle(a - b))


# ---------------------------------------------------------------------------
# points and the involution


@dataclass(frozen=True)
class TorusPoint:
    """Point of S^1 x S^1 stored as the angle pair (a, b)."""

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", normalize_angle(self.a))
        object.__setattr__(self, "b", normalize_angle(self.b))

    @property
    def coords(self) -> tuple[float, float]:
        return (self.a, self.b)


@dataclass(frozen=True)
class SpherePoint:
    """Unit vector in R^{n+1}; renormalized on construction when needed."""

    coords: tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(v) for v in self.coords)
        norm = math.sqrt(sum(v * v for v in c))
        if norm == 0.0:
            raise ValueError("zero vector is not a sphere point")
        if abs(norm - 1.0) > ARITH_TOL:
            c = tuple(v / norm for v in c)
        object.__setattr__(self, "coords", c)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def dot(self, other: "SpherePoint") -> float:
        return sum(u * v for u, v in zip(self.coords, other.coords))


Point = TorusPoint | SpherePoint


def sigma_torus(x: TorusPoint) -> TorusPoint:
    """The free involution (x1, x2) -> (-x1, conj(x2)) in angle form."""
    return TorusPoint(x.a + PI, -x.b)


def antipode_sphere(p: SpherePoint) -> SpherePoint:
    return SpherePoint(tuple(-v for v in p.coords))


def sigma(y: Point) -> Point:
    if isinstance(y, TorusPoint):
        return sigma_torus(y)
    return antipode_sphere(y)


def point_dist(x: Point, y: Point) -> float:
    """Geodesic distance (flat metric on the torus, arc length on S^n)."""
    if isinstance(x, TorusPoint):
        return math.hypot(angle_dist(x.a, y.a), angle_dist(x.b, y.b))
    # chord-based arc length: well conditioned at both 0 and pi,
    # unlike acos of the inner product
    chord = math.sqrt(
        sum((u - v) ** 2 for u, v in zip(x.coords, y.coords))
    )
    return 2.0 * math.asin(min(1.0, 0.5 * chord))


# ---------------------------------------------------------------------------
# group and orbits


@dataclass(frozen=True)
class GroupElement:
    """Element of the order-2 deck group acting by the free involution."""

    tag: str  # "identity" | "sigma"

    def __post_init__(self):
        if self.tag not in ("identity", "sigma"):
            raise ValueError(f"unknown group element {self.tag!r}")

    @property
    def is_identity(self) -> bool:
        return self.tag == "identity"

    def mul(self, other: "GroupElement") -> "GroupElement":
        if self.is_identity:
            return other
        if other.is_identity:
            return self
        return IDENTITY

    def inverse(self) -> "GroupElement":
        return self  # both elements are involutions

    def apply(self, y: Point) -> Point:
        return y if self.is_identity else sigma(y)


IDENTITY = GroupElement("identity")
SIGMA = GroupElement("sigma")


@dataclass(frozen=True, eq=False)
class OrbitPoint:
    """Unordered orbit {y, sigma(y)}: a point of the Klein bottle or P^n.

    Equality is orbit equality within TOL.  The canonical representative
    (lexicographically larger coordinate tuple) is for bookkeeping only.
    """

    rep: Point

    def lifts(self) -> tuple[Point, Point]:
        return (self.rep, sigma(self.rep))

    def canonical(self) -> Point:
        other = sigma(self.rep)
        return max(self.rep, other, key=_coord_key)

    def dist(self, other: "OrbitPoint") -> float:
        return min(
            point_dist(self.rep, other.rep),
            point_dist(self.rep, sigma(other.rep)),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrbitPoint):
            return NotImplemented
        return self.dist(other) <= TOL

    def __repr__(self) -> str:
        return f"OrbitPoint({self.rep!r})"


def _coord_key(y: Point) -> tuple[float, ...]:
    return y.coords


def project(y: Point) -> OrbitPoint:
    return OrbitPoint(y)


def lifts(z: OrbitPoint) -> tuple[Point, Point]:
    return z.lifts()


def orbit_dist(y: Point, z: OrbitPoint) -> float:
    """Distance from a point to the orbit z."""
    return min(point_dist(y, lift) for lift in z.lifts())


# ---------------------------------------------------------------------------
# symbolic paths


def _check_t(t: float) -> float:
    if t < -1e-15 or t > 1.0 + 1e-15:
        raise PathDomainError(f"path parameter {t} outside [0, 1]")
    return min(1.0, max(0.0, t))


class Path:
    """Continuous map [0,1] -> X built from primitive segments."""

    space: str  # "torus" | "sphere"

    def eval(self, t: float) -> Point:
        raise NotImplementedError

    @property
    def start(self) -> Point:
        return self.eval(0.0)

    @property
    def end(self) -> Point:
        return self.eval(1.0)


@dataclass(frozen=True)
class ConstantPath(Path):
    point: Point

    @property
    def space(self) -> str:
        return "torus" if isinstance(self.point, TorusPoint) else "sphere"

    def eval(self, t: float) -> Point:
        _check_t(t)
        return self.point


@dataclass(frozen=True)
class TorusRotate(Path):
    """Rotate one circle coordinate by a signed angle, the other fixed."""

    coord: int  # 1 or 2
    delta: float
    origin: TorusPoint

    space = "torus"

    def __post_init__(self):
        if self.coord not in (1, 2):
            raise ValueError("coord must be 1 or 2")

    def eval(self, t: float) -> TorusPoint:
        t = _check_t(t)
        if self.coord == 1:
            return TorusPoint(self.origin.a + self.delta * t, self.origin.b)
        return TorusPoint(self.origin.a, self.origin.b + self.delta * t)


@dataclass(frozen=True)
class SphereGeodesic(Path):
    """Constant-speed minimal great-circle arc; endpoints non-antipodal."""

    p: SpherePoint
    q: SpherePoint

    space = "sphere"

    def __post_init__(self):
        if self.p.dot(self.q) <= -1.0 + TOL:
            raise AntipodalEndpoints("geodesic endpoints are antipodal")

    @cached_property
    def omega(self) -> float:
        return math.acos(max(-1.0, min(1.0, self.p.dot(self.q))))

    def eval(self, t: float) -> SpherePoint:
        t = _check_t(t)
        om = self.omega
        if om < TOL:
            return self.p
        s = math.sin(om)
        ca = math.sin((1.0 - t) * om) / s
        cb = math.sin(t * om) / s
        return SpherePoint(
            tuple(ca * u + cb * v for u, v in zip(self.p.coords, self.q.coords))
        )


def sphere_geodesic(p: SpherePoint, q: SpherePoint) -> Path:
    """Minimal geodesic from p to q, degenerating to a constant path."""
    if p.dot(q) >= 1.0 - 1e-15:
        return ConstantPath(p)
    return SphereGeodesic(p, q)


@dataclass(frozen=True)
class Concat(Path):
    """left on [0, 1/2], right on [1/2, 1] under the halving reparametrization."""

    left: Path
    right: Path

    @property
    def space(self) -> str:
        return self.left.space

    def eval(self, t: float) -> Point:
        t = _check_t(t)
        if t <= 0.5:
            return self.left.eval(2.0 * t)
        return self.right.eval(2.0 * t - 1.0)

    @property
    def start(self) -> Point:
        return self.left.start

    @property
    def end(self) -> Point:
        return self.right.end


@dataclass(frozen=True)
class Acted(Path):
    g: GroupElement
    inner: Path

    @property
    def space(self) -> str:
        return self.inner.space

    def eval(self, t: float) -> Point:
        return self.g.apply(self.inner.eval(t))


@dataclass(frozen=True)
class Restrict(Path):
    """Affine reparametrization of inner onto [lo, hi]."""

    inner: Path
    lo: float
    hi: float

    @property
    def space(self) -> str:
        return self.inner.space

    def eval(self, t: float) -> Point:
        t = _check_t(t)
        return self.inner.eval(self.lo + t * (self.hi - self.lo))


def concat(a: Path, b: Path) -> Path:
    if a.space != b.space:
        raise EndpointMismatch("cannot concatenate paths in different spaces")
    if point_dist(a.end, b.start) > TOL:
        raise EndpointMismatch(
            f"gluing gap {point_dist(a.end, b.start):.3e} exceeds {TOL}"
        )
    return Concat(a, b)


def split_half(p: Path) -> tuple[Path, Path]:
    """Inverse of concat on Concat nodes; restriction wrappers otherwise."""
    if isinstance(p, Concat):
        return (p.left, p.right)
    return (Restrict(p, 0.0, 0.5), Restrict(p, 0.5, 1.0))


def act_path(g: GroupElement, p: Path) -> Path:
    if g.is_identity:
        return p
    if isinstance(p, Acted) and p.g == g:
        return p.inner  # involution peels structurally
    return Acted(g, p)


def chain(moves: list[tuple[int, float]], start: TorusPoint) -> Path:
    """Right-nested concatenation of coordinate rotations applied in order."""
    if not moves:
        return ConstantPath(start)
    coord, delta = moves[0]
    seg = TorusRotate(coord, delta, start)
    if len(moves) == 1:
        return seg
    return Concat(seg, chain(moves[1:], seg.end))


def sup_distance(p: Path, q: Path, samples: int) -> float:
    if samples < 2:
        raise ValueError("need at least 2 samples")
    worst = 0.0
    for i in range(samples):
        t = i / (samples - 1)
        d = point_dist(p.eval(t), q.eval(t))
        if d > worst:
            worst = d
    return worst


# ---------------------------------------------------------------------------
# JSON serialization (bit-exact on the symbolic tree)


def _point_to_dict(y: Point) -> dict:
    if isinstance(y, TorusPoint):
        return {"a": y.a, "b": y.b}
    return {"coords": list(y.coords)}


def _point_from_dict(d: dict, space: str) -> Point:
    if space == "torus":
        return TorusPoint(d["a"], d["b"])
    return SpherePoint(tuple(d["coords"]))


def _node_to_dict(p: Path) -> dict:
    if isinstance(p, ConstantPath):
        return {"kind": "constant", "point": _point_to_dict(p.point)}
    if isinstance(p, TorusRotate):
        return {
            "kind": "rotate",
            "coord": p.coord,
            "delta": p.delta,
            "start": _point_to_dict(p.origin),
        }
    if isinstance(p, SphereGeodesic):
        return {
            "kind": "geodesic",
            "from": _point_to_dict(p.p),
            "to": _point_to_dict(p.q),
        }
    if isinstance(p, Concat):
        return {"kind": "concat", "children": [_node_to_dict(p.left), _node_to_dict(p.right)]}
    if isinstance(p, Acted):
        return {"kind": "acted", "g": p.g.tag, "children": [_node_to_dict(p.inner)]}
    if isinstance(p, Restrict):
        return {
            "kind": "restrict",
            "lo": p.lo,
            "hi": p.hi,
            "children": [_node_to_dict(p.inner)],
        }
    raise TypeError(f"unknown path node {type(p).__name__}")


def _node_from_dict(d: dict, space: str) -> Path:
    kind = d["kind"]
    if kind == "constant":
        return ConstantPath(_point_from_dict(d["point"], space))
    if kind == "rotate":
        return TorusRotate(d["coord"], d["delta"], _point_from_dict(d["start"], space))
    if kind == "geodesic":
        return SphereGeodesic(
            _point_from_dict(d["from"], space), _point_from_dict(d["to"], space)
        )
    if kind == "concat":
        l, r = d["children"]
        return Concat(_node_from_dict(l, space), _node_from_dict(r, space))
    if kind == "acted":
        (inner,) = d["children"]
        return Acted(GroupElement(d["g"]), _node_from_dict(inner, space))
    if kind == "restrict":
        (inner,) = d["children"]
        return Restrict(_node_from_dict(inner, space), d["lo"], d["hi"])
    raise ValueError(f"unknown node kind {kind!r}")


def path_to_dict(p: Path, samples: int = 0) -> dict:
    out = {"space": p.space, "node": _node_to_dict(p)}
    if samples > 0:
        rows = []
        for i in range(samples):
            t = i / (samples - 1) if samples > 1 else 0.0
            y = p.eval(t)
            rows.append([t, *y.coords])
        out["samples"] = rows
    return out


def path_from_dict(d: dict) -> Path:
    return _node_from_dict(d["node"], d["space"])


def path_to_json(p: Path, samples: int = 0) -> str:
    return json.dumps(path_to_dict(p, samples), sort_keys=True)


def path_from_json(s: str) -> Path:
    return path_from_dict(json.loads(s))

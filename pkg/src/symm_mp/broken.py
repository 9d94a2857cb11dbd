"""Algebra of group-broken paths.

A broken path is a tuple of paths joined by group jumps: the end of each
stage, acted by its jump, is the start of the next.  The module provides
the stabilization map collapsing the last two stages, the two-stage
homeomorphism onto (path, jump) pairs and its inverse, the evaluation
maps, and the projection forgetting the jump data - all as executable,
identity-tested constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geom import (
    TOL,
    ConstantPath,
    GroupElement,
    IDENTITY,
    OrbitPoint,
    Path,
    Point,
    SIGMA,
    act_path,
    concat,
    point_dist,
    project,
    sigma,
    split_half,
)


class GluingViolation(ValueError):
    def __init__(self, index: int, gap: float):
        self.index = index
        self.gap = gap
        super().__init__(f"gluing fails at stage {index}: gap {gap:.3e}")


class TooShort(ValueError):
    pass


class TooLong(ValueError):
    pass


class NotInOrbit(ValueError):
    pass


@dataclass(frozen=True)
class BrokenPath:
    """k paths and k-1 jumps with alpha_i(1) . g_i = alpha_{i+1}(0)."""

    paths: tuple[Path, ...]
    jumps: tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.paths) < 1:
            raise TooShort("a broken path needs at least one stage")
        if len(self.jumps) != len(self.paths) - 1:
            raise ValueError(
                f"{len(self.paths)} paths require {len(self.paths) - 1} jumps,"
                f" got {len(self.jumps)}"
            )
        for i, g in enumerate(self.jumps):
            gap = point_dist(g.apply(self.paths[i].end), self.paths[i + 1].start)
            if gap > TOL:
                raise GluingViolation(i, gap)

    @property
    def stages(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class OrdinaryBrokenPath:
    """Paths glued only up to orbit equality (jump data forgotten)."""

    paths: tuple[Path, ...]

    def __post_init__(self):
        for i in range(len(self.paths) - 1):
            gap = min(
                point_dist(self.paths[i].end, self.paths[i + 1].start),
                point_dist(sigma(self.paths[i].end), self.paths[i + 1].start),
            )
            if gap > TOL:
                raise GluingViolation(i, gap)

    def eval_endpoints(self) -> tuple[Point, Point]:
        return (self.paths[0].eval(0.0), self.paths[-1].eval(1.0))


def make_broken(paths, jumps) -> BrokenPath:
    return BrokenPath(tuple(paths), tuple(jumps))


def iota(bp: BrokenPath) -> BrokenPath:
    """Append an identity jump and a stationary stage at the endpoint."""
    tail = ConstantPath(bp.paths[-1].end)
    return BrokenPath(bp.paths + (tail,), bp.jumps + (IDENTITY,))


def retract(bp: BrokenPath) -> BrokenPath:
    if bp.stages < 2:
        raise TooShort("retract needs at least two stages")
    return BrokenPath(bp.paths[:-1], bp.jumps[:-1])


def stabilize_f(bp: BrokenPath) -> BrokenPath:
    """Collapse the last two stages into one; endpoints are preserved.

    For three or more stages the next-to-last path is acted by the final
    jump and concatenated with the last path, and the final jump is folded
    into its predecessor.  For exactly two stages the second path is acted
    by the inverse jump instead, which is the endpoint-preserving collapse.
    """
    if bp.stages < 2:
        raise TooShort("stabilization needs at least two stages")
    if bp.stages == 2:
        g = bp.jumps[0]
        merged = concat(bp.paths[0], act_path(g.inverse(), bp.paths[1]))
        return BrokenPath((merged,), ())
    g_last = bp.jumps[-1]
    merged = concat(act_path(g_last, bp.paths[-2]), bp.paths[-1])
    new_jumps = bp.jumps[:-2] + (bp.jumps[-2].mul(g_last),)
    return BrokenPath(bp.paths[:-2] + (merged,), new_jumps)


def phi(bp: BrokenPath) -> tuple[Path, GroupElement]:
    """Two-stage broken path -> (single path, jump)."""
    if bp.stages < 2:
        raise TooShort("phi needs exactly two stages")
    if bp.stages > 2:
        raise TooLong("phi needs exactly two stages")
    g = bp.jumps[0]
    return (concat(bp.paths[0], act_path(g.inverse(), bp.paths[1])), g)


def phi_inv(alpha: Path, g: GroupElement) -> BrokenPath:
    first, second = split_half(alpha)
    return BrokenPath((first, act_path(g, second)), (g,))


def eval_ek(bp: BrokenPath) -> tuple[Point, Point]:
    return (bp.paths[0].eval(0.0), bp.paths[-1].eval(1.0))


def twisted_eval(alpha: Path, g: GroupElement) -> tuple[Point, Point]:
    return (alpha.eval(0.0), g.apply(alpha.eval(1.0)))


def saturated_diagonal(x: Point, g: GroupElement) -> tuple[Point, Point]:
    return (x, g.apply(x))


def translation_tau(x: Point, y: Point) -> GroupElement:
    """The unique jump carrying x to y; freeness makes it well defined."""
    if point_dist(x, y) <= TOL:
        return IDENTITY
    if point_dist(sigma(x), y) <= TOL:
        return SIGMA
    raise NotInOrbit(f"{y!r} is not in the orbit of {x!r}")


def forget_jumps(bp: BrokenPath) -> OrdinaryBrokenPath:
    return OrdinaryBrokenPath(bp.paths)


def q_map(bp: BrokenPath) -> Path:
    """Two-stage broken path -> single path covering the same endpoints."""
    return phi(bp)[0]


def orbit_eval(gamma: Path) -> tuple[Point, OrbitPoint]:
    return (gamma.eval(0.0), project(gamma.eval(1.0)))


__all__ = [
    "BrokenPath",
    "OrdinaryBrokenPath",
    "GluingViolation",
    "TooShort",
    "TooLong",
    "NotInOrbit",
    "make_broken",
    "iota",
    "retract",
    "stabilize_f",
    "phi",
    "phi_inv",
    "eval_ek",
    "twisted_eval",
    "saturated_diagonal",
    "translation_tau",
    "forget_jumps",
    "q_map",
    "orbit_eval",
]

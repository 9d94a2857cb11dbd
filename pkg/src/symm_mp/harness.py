"""Stratified sampling and property verification for the planners and the
broken-path algebra.  Every suite is seeded, produces a deterministic
machine-readable report, and carries one deliberately corrupted case that
must be flagged (negative control).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, field

import numpy as np

from . import broken, sphere, torus
from .geom import (
    PI,
    TOL,
    ConstantPath,
    GroupElement,
    IDENTITY,
    Path,
    SIGMA,
    SpherePoint,
    TorusPoint,
    TorusRotate,
    chain,
    concat,
    orbit_dist,
    point_dist,
    project,
    sigma,
    sphere_geodesic,
    sup_distance,
)

HALF_PI = PI / 2.0
MARGIN = 0.1  # stratum generators stay this far from excluded loci
TORUS_LIPSCHITZ = 64.0
SPHERE_LIPSCHITZ = 16.0
DECAY_FACTOR = 0.2


class StratumDegenerate(RuntimeError):
    pass


@dataclass
class Report:
    suite: str
    space: str
    seed: int
    params: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    max_errors: dict = field(default_factory=dict)
    tables: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    negative_control_detected: bool = False
    passed: bool = False

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


# ---------------------------------------------------------------------------
# torus strata


def _rand_angle(rng) -> float:
    return rng.uniform(-PI, PI)


class TorusStratum:
    """Latent-parametrized generator of queries inside one planner stratum.

    Latents are dicts; only keys listed in `continuous` are perturbed, so
    perturbations never leave the stratum (margins dwarf the step sizes).
    """

    def __init__(self, name, expected_name, expected_case, continuous):
        self.name = name
        self.expected_name = expected_name
        self.expected_case = expected_case
        self.continuous = continuous

    def sample_latent(self, rng) -> dict:
        raise NotImplementedError

    def build(self, latent: dict) -> torus.TorusQuery:
        raise NotImplementedError

    def direction(self, rng) -> dict:
        return {k: rng.uniform(-1.0, 1.0) for k in self.continuous}

    def perturbed(self, latent: dict, direction: dict, delta: float) -> dict:
        out = dict(latent)
        for k in self.continuous:
            out[k] = latent[k] + delta * direction[k]
        return out

    def matches(self, label: torus.TorusDomainLabel) -> bool:
        return label.name == self.expected_name and (
            self.expected_case is None or label.case == self.expected_case
        )


def _sample_off_circle_v(rng) -> float:
    """Second coordinate away from both sigma-invariant circles."""
    mag = rng.uniform(MARGIN, PI - MARGIN)
    return mag if rng.random() < 0.5 else -mag


class _D1(TorusStratum):
    def __init__(self):
        super().__init__("D1", "D1", None, ("u", "v", "theta", "psi"))

    def sample_latent(self, rng):
        return {
            "u": _rand_angle(rng),
            "v": _rand_angle(rng),
            "theta": rng.uniform(-HALF_PI + MARGIN, HALF_PI - MARGIN),
            "psi": rng.uniform(-PI + MARGIN, PI - MARGIN),
        }

    def build(self, latent):
        x = TorusPoint(latent["u"], latent["v"])
        y = TorusPoint(latent["u"] + latent["theta"], latent["v"] + latent["psi"])
        return torus.TorusQuery(x, project(y))


class _D2OnCx(TorusStratum):
    def __init__(self):
        super().__init__("D2_on_cx", "D2", "on_cx", ("u", "v", "theta"))

    def sample_latent(self, rng):
        return {
            "u": _rand_angle(rng),
            "v": _sample_off_circle_v(rng),
            "theta": rng.uniform(-HALF_PI + MARGIN, HALF_PI - MARGIN),
        }

    def build(self, latent):
        x = TorusPoint(latent["u"], latent["v"])
        y = TorusPoint(latent["u"] + latent["theta"], latent["v"] + PI)
        return torus.TorusQuery(x, project(y))


class _D2OnCxD(TorusStratum):
    """Target on the right boundary circle, offset s past a_x."""

    def __init__(self):
        super().__init__("D2_on_cxd", "D2", "on_cxd", ("u", "v", "s"))

    def sample_latent(self, rng):
        while True:
            v = _sample_off_circle_v(rng)
            s = rng.uniform(MARGIN, 2.0 * PI - MARGIN)
            # keep clear of the middle-arc crossing (case tag boundary)
            if abs(s - ((2.0 * v) % (2.0 * PI))) > MARGIN:
                return {"u": _rand_angle(rng), "v": v, "s": s}

    def build(self, latent):
        x = TorusPoint(latent["u"], latent["v"])
        y = TorusPoint(latent["u"] + HALF_PI, PI - latent["v"] + latent["s"])
        return torus.TorusQuery(x, project(y))


class _D31(TorusStratum):
    def __init__(self):
        super().__init__("D31", "D31", None, ("u", "v"))

    def sample_latent(self, rng):
        return {"u": _rand_angle(rng), "v": _sample_off_circle_v(rng)}

    def build(self, latent):
        x = TorusPoint(latent["u"], latent["v"])
        return torus.TorusQuery(x, project(torus.a_point(x)))


class _D32OnCx(TorusStratum):
    def __init__(self):
        super().__init__("D32_on_cx", "D32", "on_cx", ("u", "theta"))

    def sample_latent(self, rng):
        return {
            "u": _rand_angle(rng),
            "vsel": 0.0 if rng.random() < 0.5 else PI,
            "theta": rng.uniform(-HALF_PI + MARGIN, HALF_PI - MARGIN),
        }

    def build(self, latent):
        x = TorusPoint(latent["u"], latent["vsel"])
        y = TorusPoint(latent["u"] + latent["theta"], latent["vsel"] + PI)
        return torus.TorusQuery(x, project(y))


class _D32OnCxD(TorusStratum):
    def __init__(self):
        super().__init__("D32_on_cxd", "D32", "on_cxd", ("u", "s"))

    def sample_latent(self, rng):
        return {
            "u": _rand_angle(rng),
            "vsel": 0.0 if rng.random() < 0.5 else PI,
            "s": rng.uniform(MARGIN, 2.0 * PI - MARGIN),
        }

    def build(self, latent):
        x = TorusPoint(latent["u"], latent["vsel"])
        y = TorusPoint(latent["u"] + HALF_PI, latent["vsel"] + PI + latent["s"])
        return torus.TorusQuery(x, project(y))


class _D4(TorusStratum):
    def __init__(self):
        super().__init__("D4", "D4", None, ("u",))

    def sample_latent(self, rng):
        return {
            "u": _rand_angle(rng),
            "vsel": 0.0 if rng.random() < 0.5 else PI,
        }

    def build(self, latent):
        x = TorusPoint(latent["u"], latent["vsel"])
        return torus.TorusQuery(x, project(torus.a_point(x)))


def torus_strata() -> list[TorusStratum]:
    return [_D1(), _D2OnCx(), _D2OnCxD(), _D31(), _D32OnCx(), _D32OnCxD(), _D4()]


def uniform_torus_query(rng) -> torus.TorusQuery:
    x = TorusPoint(_rand_angle(rng), _rand_angle(rng))
    y = TorusPoint(_rand_angle(rng), _rand_angle(rng))
    return torus.TorusQuery(x, project(y))


# ---------------------------------------------------------------------------
# sphere strata


def _gram_schmidt_keep(rows: np.ndarray, skip_tol: float = 1e-8):
    """Orthonormalize rows in order, dropping exact dependents."""
    kept = []
    for r in rows:
        w = r.astype(float).copy()
        for u in kept:
            w -= (w @ u) * u
        norm = float(np.linalg.norm(w))
        if norm <= skip_tol:
            continue
        if norm < 0.15:
            raise StratumDegenerate("near-dependent constraint set")
        kept.append(w / norm)
    return kept


class SphereStratum:
    """Queries with a prescribed zero pattern of frame inner products."""

    def __init__(self, frame: sphere.Frame, index: int):
        self.frame = frame
        self.index = index
        self.name = f"S{frame.n}_D{index}"
        # last generic domain needs p inside the equatorial slice
        self.equatorial = frame.kind == "generic" and index == frame.k

    def sample_latent(self, rng) -> dict:
        dim = self.frame.n + 1
        for _ in range(1000):
            pvec = [rng.gauss(0.0, 1.0) for _ in range(dim)]
            if self.equatorial:
                pvec[-1] = 0.0
            cvec = [rng.gauss(0.0, 1.0) for _ in range(dim)]
            latent = {"pvec": pvec, "cvec": cvec, "sign": 1.0}
            try:
                p, q, d = self._realize(latent)
            except StratumDegenerate:
                continue
            if abs(d) < 0.1:
                continue
            latent["sign"] = 1.0 if d > 0 else -1.0
            if self.equatorial and abs(p.coords[-2]) < 0.2:
                continue
            return latent
        raise StratumDegenerate(f"could not sample stratum {self.name}")

    def _realize(self, latent):
        pv = np.array(latent["pvec"])
        norm = float(np.linalg.norm(pv))
        if not 0.3 < norm < 3.0:
            raise StratumDegenerate("p latent norm out of range")
        p = SpherePoint(tuple(pv / norm))
        vecs = self.frame.matrix(p)
        basis = _gram_schmidt_keep(vecs[: self.index])
        w = np.array(latent["cvec"], dtype=float)
        for u in basis:
            w -= (w @ u) * u
        wn = float(np.linalg.norm(w))
        if wn < 0.2:
            raise StratumDegenerate("target latent collapses under projection")
        q = SpherePoint(tuple(latent["sign"] * w / wn))
        d = float(np.array(q.coords) @ vecs[self.index])
        return p, q, d

    def build(self, latent) -> sphere.SphereQuery:
        p, q, _ = self._realize(latent)
        return sphere.SphereQuery(p, project(q))

    def direction(self, rng) -> dict:
        dim = self.frame.n + 1
        dp = [rng.uniform(-1.0, 1.0) for _ in range(dim)]
        if self.equatorial:
            dp[-1] = 0.0
        return {"pvec": dp, "cvec": [rng.uniform(-1.0, 1.0) for _ in range(dim)]}

    def perturbed(self, latent, direction, delta) -> dict:
        return {
            "pvec": [a + delta * b for a, b in zip(latent["pvec"], direction["pvec"])],
            "cvec": [a + delta * b for a, b in zip(latent["cvec"], direction["cvec"])],
            "sign": latent["sign"],
        }


def sphere_strata(n: int) -> list[SphereStratum]:
    f = sphere.make_frame(n)
    return [SphereStratum(f, i) for i in range(f.k + 1)]


def uniform_sphere_query(rng, n: int) -> sphere.SphereQuery:
    def pt():
        v = [rng.gauss(0.0, 1.0) for _ in range(n + 1)]
        return SpherePoint(tuple(v))

    return sphere.SphereQuery(pt(), project(pt()))


# ---------------------------------------------------------------------------
# suites


def check_partition(
    space: str, samples: int, seed: int, strat_samples: int = 1000, n: int = 2
) -> Report:
    rng = random.Random(seed)
    rep = Report(
        suite="partition",
        space=space,
        seed=seed,
        params={"samples": samples, "strat_samples": strat_samples, "n": n},
    )
    if space == "torus":
        counts: dict[str, int] = {}
        for _ in range(samples):
            q = uniform_torus_query(rng)
            label, lift = torus.classify(q)
            counts[label.domain] = counts.get(label.domain, 0) + 1
            if orbit_dist(lift, q.z) > TOL:
                rep.failures.append({"kind": "lift", "query": _dump_torus(q)})
        rep.counts["uniform"] = counts
        for st in torus_strata():
            ok = 0
            for _ in range(strat_samples):
                q = st.build(st.sample_latent(rng))
                label, _ = torus.classify(q)
                if st.matches(label):
                    ok += 1
                else:
                    rep.failures.append(
                        {
                            "kind": "stratum",
                            "stratum": st.name,
                            "got": label.stratum,
                            "query": _dump_torus(q),
                        }
                    )
            rep.counts[st.name] = {"expected": strat_samples, "matched": ok}
        # negative control: a D4 query deliberately checked against D1
        bad = _D4().build(_D4().sample_latent(rng))
        rep.negative_control_detected = torus.classify(bad)[0].name != "D1"
        uniform_all_d1 = counts.get("D1", 0) == samples
        rep.passed = (
            not rep.failures and uniform_all_d1 and rep.negative_control_detected
        )
    else:
        f = sphere.make_frame(n)
        counts = {}
        for _ in range(samples):
            q = uniform_sphere_query(rng, n)
            i, lift = sphere.classify_sphere(f, q)
            counts[str(i)] = counts.get(str(i), 0) + 1
            if orbit_dist(lift, q.z) > TOL:
                rep.failures.append({"kind": "lift", "query": _dump_sphere(q)})
        rep.counts["uniform"] = counts
        for st in sphere_strata(n):
            ok = 0
            for _ in range(strat_samples):
                q = st.build(st.sample_latent(rng))
                i, _ = sphere.classify_sphere(f, q)
                if i == st.index:
                    ok += 1
                else:
                    rep.failures.append(
                        {
                            "kind": "stratum",
                            "stratum": st.name,
                            "got": i,
                            "query": _dump_sphere(q),
                        }
                    )
            rep.counts[st.name] = {"expected": strat_samples, "matched": ok}
        st1 = sphere_strata(n)[-1]
        bad = st1.build(st1.sample_latent(rng))
        rep.negative_control_detected = sphere.classify_sphere(f, bad)[0] != 0
        rep.passed = bool(not rep.failures and rep.negative_control_detected)
    return rep


def check_sections(
    space: str, samples: int, seed: int, strat_samples: int = 1000, n: int = 2
) -> Report:
    rng = random.Random(seed)
    rep = Report(
        suite="sections",
        space=space,
        seed=seed,
        params={"samples": samples, "strat_samples": strat_samples, "n": n},
    )
    max_start = 0.0
    max_orbit = 0.0
    if space == "torus":
        queries = [uniform_torus_query(rng) for _ in range(samples)]
        for st in torus_strata():
            queries.extend(
                st.build(st.sample_latent(rng)) for _ in range(strat_samples)
            )
        for q in queries:
            r = torus.plan(q)
            max_start = max(max_start, r.start_error)
            max_orbit = max(max_orbit, r.orbit_error)
            if not r.ok:
                rep.failures.append(_dump_torus(q))
        # negative control: inject a rotation after a valid section
        q = queries[0]
        good = torus.plan(q).path
        corrupted = concat(good, TorusRotate(2, 0.1, good.end))
        rep.negative_control_detected = orbit_dist(corrupted.end, q.z) > TOL
    else:
        f = sphere.make_frame(n)
        queries = [uniform_sphere_query(rng, n) for _ in range(samples)]
        for st in sphere_strata(n):
            queries.extend(
                st.build(st.sample_latent(rng)) for _ in range(strat_samples)
            )
        for q in queries:
            r = sphere.plan_sphere(f, q)
            max_start = max(max_start, r.start_error)
            max_orbit = max(max_orbit, r.orbit_error)
            if not r.ok:
                rep.failures.append(_dump_sphere(q))
        q = queries[0]
        shifted = [c + 0.1 for c in sphere.plan_sphere(f, q).path.end.coords]
        corrupted = sphere_geodesic(q.p, SpherePoint(tuple(shifted)))
        rep.negative_control_detected = orbit_dist(corrupted.end, q.z) > TOL
    rep.max_errors = {"start": max_start, "orbit": max_orbit}
    rep.passed = bool(
        not rep.failures
        and max_start <= 1e-12
        and max_orbit <= TOL
        and rep.negative_control_detected
    )
    return rep


def probe_continuity(
    space: str,
    deltas: list[float],
    pairs: int,
    seed: int,
    n: int = 2,
    sup_samples: int = 100,
) -> Report:
    rng = random.Random(seed)
    constant = TORUS_LIPSCHITZ if space == "torus" else SPHERE_LIPSCHITZ
    rep = Report(
        suite="continuity",
        space=space,
        seed=seed,
        params={"deltas": list(deltas), "pairs": pairs, "n": n, "C": constant},
    )
    strata = torus_strata() if space == "torus" else sphere_strata(n)
    section = (
        (lambda q: torus.section(q))
        if space == "torus"
        else (lambda q, f=sphere.make_frame(n): sphere.section_sphere(f, q))
    )
    ok = True
    for st in strata:
        bases = []
        for _ in range(pairs):
            lat = st.sample_latent(rng)
            bases.append((lat, st.direction(rng)))
        row = {}
        for delta in deltas:
            worst = 0.0
            for lat, direction in bases:
                try:
                    p1 = section(st.build(lat))
                    p2 = section(st.build(st.perturbed(lat, direction, delta)))
                except StratumDegenerate:
                    continue
                worst = max(worst, sup_distance(p1, p2, sup_samples))
            row[repr(delta)] = worst
            if worst > constant * delta:
                ok = False
                rep.failures.append(
                    {"stratum": st.name, "delta": delta, "sup": worst}
                )
        vals = [row[repr(d)] for d in deltas]
        for a, b in zip(vals, vals[1:]):
            if a > 0 and b > DECAY_FACTOR * a:
                ok = False
                rep.failures.append({"stratum": st.name, "kind": "no-decay"})
        rep.tables[st.name] = row
    rep.tables["boundary_probe"] = _boundary_probe(space, n)
    rep.negative_control_detected = (
        rep.tables["boundary_probe"]["sup"] > constant * 1e-6
    )
    rep.passed = bool(ok and rep.negative_control_detected)
    return rep


def _boundary_probe(space: str, n: int) -> dict:
    """Cross-domain pair at tiny parameter distance: the recorded jump is
    expected (sections need not extend continuously across domains)."""
    eta = 1e-6
    if space == "torus":
        x = TorusPoint(0.3, 0.7)
        q1 = torus.TorusQuery(x, project(TorusPoint(0.5, 0.7 + PI - eta)))
        q2 = torus.TorusQuery(x, project(TorusPoint(0.5, 0.7 + PI + eta)))
        s = sup_distance(torus.section(q1), torus.section(q2), 100)
    else:
        f = sphere.make_frame(n)
        p = SpherePoint(tuple([1.0] + [0.0] * n))
        tang = [0.0, 1.0] + [0.0] * (n - 1)
        qa = SpherePoint(tuple(t + eta * c for t, c in zip(tang, p.coords)))
        qb = SpherePoint(tuple(t - eta * c for t, c in zip(tang, p.coords)))
        s = sup_distance(
            sphere.section_sphere(f, sphere.SphereQuery(p, project(qa))),
            sphere.section_sphere(f, sphere.SphereQuery(p, project(qb))),
            100,
        )
    return {"eta": eta, "sup": s}


# ---------------------------------------------------------------------------
# broken-path identity suite


def random_broken(rng, space: str, n: int = 3, max_stages: int = 4) -> broken.BrokenPath:
    stages = rng.randint(1, max_stages)
    paths = []
    jumps = []
    if space == "torus":
        cursor = TorusPoint(_rand_angle(rng), _rand_angle(rng))
    else:
        cursor = SpherePoint(tuple(rng.gauss(0.0, 1.0) for _ in range(n + 1)))
    for i in range(stages):
        p = _random_path(rng, space, n, cursor)
        paths.append(p)
        if i < stages - 1:
            g = IDENTITY if rng.random() < 0.5 else SIGMA
            jumps.append(g)
            cursor = g.apply(p.end)
    return broken.BrokenPath(tuple(paths), tuple(jumps))


def _random_path(rng, space: str, n: int, start) -> Path:
    nseg = rng.randint(1, 3)
    segs = []
    cursor = start
    for _ in range(nseg):
        if space == "torus":
            seg = TorusRotate(
                rng.choice((1, 2)), rng.uniform(-PI, PI), cursor
            )
        else:
            while True:
                tgt = SpherePoint(
                    tuple(rng.gauss(0.0, 1.0) for _ in range(n + 1))
                )
                if cursor.dot(tgt) > -0.9:
                    break
            seg = sphere_geodesic(cursor, tgt)
        segs.append(seg)
        cursor = seg.end
    out = segs[-1]
    for seg in reversed(segs[:-1]):
        out = concat(seg, out)
    return out


def _pair_dist(a, b) -> float:
    return max(point_dist(a[0], b[0]), point_dist(a[1], b[1]))


def run_identity_suite(space: str, count: int, seed: int, n: int = 3) -> Report:
    rng = random.Random(seed)
    rep = Report(
        suite="identities",
        space=space,
        seed=seed,
        params={"count": count, "n": n},
    )
    errs: dict[str, float] = {
        "retract_iota": 0.0,
        "iota_endpoints": 0.0,
        "stabilize_endpoints": 0.0,
        "stabilize_orbit": 0.0,
        "phi_endpoints": 0.0,
        "forget_endpoints": 0.0,
        "phi_roundtrip": 0.0,
        "phi_inv_roundtrip": 0.0,
        "diagram_left": 0.0,
        "diagram_right": 0.0,
        "translation": 0.0,
    }
    structural_fail = 0
    for _ in range(count):
        bp = random_broken(rng, space, n)
        if broken.retract(broken.iota(bp)) != bp:
            structural_fail += 1
        errs["iota_endpoints"] = max(
            errs["iota_endpoints"],
            _pair_dist(broken.eval_ek(broken.iota(bp)), broken.eval_ek(bp)),
        )
        if bp.stages >= 3:
            errs["stabilize_endpoints"] = max(
                errs["stabilize_endpoints"],
                _pair_dist(
                    broken.eval_ek(broken.stabilize_f(bp)), broken.eval_ek(bp)
                ),
            )
        elif bp.stages == 2:
            # the final collapse kills the jump: endpoints agree only in
            # the quotient (the end may come back sigma-translated)
            s2, e2 = broken.eval_ek(broken.stabilize_f(bp))
            s1, e1 = broken.eval_ek(bp)
            errs["stabilize_orbit"] = max(
                errs["stabilize_orbit"],
                point_dist(s2, s1),
                project(e2).dist(project(e1)),
            )
        errs["forget_endpoints"] = max(
            errs["forget_endpoints"],
            _pair_dist(
                broken.forget_jumps(bp).eval_endpoints(), broken.eval_ek(bp)
            ),
        )

        bp2 = _as_two_stage(rng, bp, space, n)
        alpha, g = broken.phi(bp2)
        errs["phi_endpoints"] = max(
            errs["phi_endpoints"],
            _pair_dist(broken.twisted_eval(alpha, g), broken.eval_ek(bp2)),
        )
        back = broken.phi_inv(alpha, g)
        errs["phi_roundtrip"] = max(
            errs["phi_roundtrip"], _broken_sup(back, bp2, 100)
        )
        alpha2, g2 = broken.phi(broken.phi_inv(alpha, g))
        errs["phi_inv_roundtrip"] = max(
            errs["phi_inv_roundtrip"],
            sup_distance(alpha2, alpha, 100) if g2 == g else math.inf,
        )
        gamma = broken.q_map(bp2)
        start, end = broken.eval_ek(bp2)
        e0, orb = broken.orbit_eval(gamma)
        errs["diagram_left"] = max(
            errs["diagram_left"],
            max(point_dist(e0, start), orbit_dist(end, orb)),
        )
        errs["diagram_right"] = max(
            errs["diagram_right"],
            max(
                project(gamma.eval(0.0)).dist(project(e0)),
                project(gamma.eval(1.0)).dist(orb),
            ),
        )
        x = bp.paths[0].end
        for y, expect in ((x, IDENTITY), (sigma(x), SIGMA)):
            tau = broken.translation_tau(x, y)
            errs["translation"] = max(
                errs["translation"],
                0.0 if tau == expect else math.inf,
                point_dist(tau.apply(x), y),
            )
    errs["retract_iota"] = float(structural_fail)
    rep.max_errors = errs
    rep.negative_control_detected = _gluing_negative_control(rng, space, n)
    orbit_level = ("diagram_left", "diagram_right", "stabilize_orbit")
    strict = {k: v for k, v in errs.items() if k not in orbit_level}
    rep.passed = bool(
        structural_fail == 0
        and all(v <= 1e-12 for v in strict.values())
        and all(errs[k] <= TOL for k in orbit_level)
        and rep.negative_control_detected
    )
    return rep


def _as_two_stage(rng, bp: broken.BrokenPath, space: str, n: int) -> broken.BrokenPath:
    if bp.stages == 2:
        return bp
    if bp.stages > 2:
        out = bp
        while out.stages > 2:
            out = broken.stabilize_f(out)
        return out
    g = IDENTITY if rng.random() < 0.5 else SIGMA
    tail = ConstantPath(g.apply(bp.paths[-1].end))
    return broken.BrokenPath(bp.paths + (tail,), bp.jumps + (g,))


def _broken_sup(a: broken.BrokenPath, b: broken.BrokenPath, samples: int) -> float:
    if a.stages != b.stages or a.jumps != b.jumps:
        return math.inf
    worst = 0.0
    for pa, pb in zip(a.paths, b.paths):
        worst = max(worst, sup_distance(pa, pb, samples))
    return worst


def _gluing_negative_control(rng, space: str, n: int) -> bool:
    bp = random_broken(rng, space, n, max_stages=3)
    if bp.stages < 2:
        bp = _as_two_stage(rng, bp, space, n)
    shifted = (
        ConstantPath(_shift_point(bp.paths[1].start)),
    )
    try:
        broken.BrokenPath(bp.paths[:1] + shifted, bp.jumps[:1])
        return False
    except broken.GluingViolation:
        return True


def _shift_point(y):
    if isinstance(y, TorusPoint):
        return TorusPoint(y.a + 0.1, y.b)
    c = list(y.coords)
    c[0] += 0.5
    return SpherePoint(tuple(c))


# ---------------------------------------------------------------------------
# dumps


def _dump_torus(q: torus.TorusQuery) -> dict:
    return {"x": [q.x.a, q.x.b], "z_lift": [q.z.rep.a, q.z.rep.b]}


def _dump_sphere(q: sphere.SphereQuery) -> dict:
    return {"p": list(q.p.coords), "z_lift": list(q.z.rep.coords)}


__all__ = [
    "Report",
    "TorusStratum",
    "SphereStratum",
    "torus_strata",
    "sphere_strata",
    "uniform_torus_query",
    "uniform_sphere_query",
    "check_partition",
    "check_sections",
    "probe_continuity",
    "run_identity_suite",
    "random_broken",
]

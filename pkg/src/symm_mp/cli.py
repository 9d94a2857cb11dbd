"""Command-line entry point.

Subcommands: plan (torus | sphere), verify, cuplength, identities.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import gf2, harness, sphere, torus
from .geom import SpherePoint, TorusPoint, project

DEFAULT_SEED = 0
SEED_ENV = "SYMM_MP_SEED"


def fmt_float(x: float) -> str:
    return f"{x:.17g}"


def _default_seed() -> int:
    env = os.environ.get(SEED_ENV)
    return int(env) if env else DEFAULT_SEED


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad float list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="symm-mp",
        description="Motion planners on involution-symmetric spaces, "
        "broken-path identities, and GF(2) cup-length bounds.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    plan = sub.add_parser("plan", help="run a planner on one query")
    plan_sub = plan.add_subparsers(dest="space", required=True)

    pt = plan_sub.add_parser("torus", help="4-domain planner on the torus")
    pt.add_argument("--x", type=_parse_floats, required=True, metavar="a,b")
    pt.add_argument(
        "--z", type=_parse_floats, required=True, metavar="a,b",
        help="any lift of the target orbit",
    )
    pt.add_argument("--samples", type=int, default=0)
    pt.add_argument("--format", choices=("json", "csv"), default="json")
    pt.add_argument("--out", default="-")

    ps = plan_sub.add_parser("sphere", help="first-hit planner on S^n")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--p", type=_parse_floats, required=True, metavar="c0,...,cn")
    ps.add_argument(
        "--l", type=_parse_floats, required=True, metavar="c0,...,cn",
        help="any lift of the target orbit",
    )
    ps.add_argument("--samples", type=int, default=0)
    ps.add_argument("--format", choices=("json", "csv"), default="json")
    ps.add_argument("--out", default="-")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument(
        "--suite",
        choices=("partition", "sections", "continuity", "identities"),
        required=True,
    )
    ver.add_argument("--space", choices=("torus", "sphere"), default="torus")
    ver.add_argument("--n", type=int, default=2)
    ver.add_argument("--samples", type=int, default=10000)
    ver.add_argument("--strat-samples", type=int, default=1000)
    ver.add_argument("--pairs", type=int, default=100)
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--out", default="-")

    cup = sub.add_parser("cuplength", help="kernel cup-length of an induced map")
    cup.add_argument(
        "--map",
        dest="which",
        choices=("one-pi-star", "pi-star"),
        default="one-pi-star",
    )
    cup.add_argument("--max", type=int, default=4)
    cup.add_argument("--out", default="-")

    idn = sub.add_parser("identities", help="broken-path identity ledger")
    idn.add_argument("--space", choices=("torus", "sphere"), default="torus")
    idn.add_argument("--n", type=int, default=3)
    idn.add_argument("--count", type=int, default=1000)
    idn.add_argument("--seed", type=int, default=None)
    idn.add_argument("--out", default="-")

    return ap


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _plan_output(report_dict: dict, fmt: str, samples: int) -> str:
    if fmt == "json":
        return json.dumps(report_dict, sort_keys=True)
    rows = report_dict["path"].get("samples", [])
    ncoords = len(rows[0]) - 1 if rows else 0
    header = "t," + ",".join(f"c{i}" for i in range(ncoords))
    lines = [header]
    for row in rows:
        lines.append(",".join(fmt_float(v) for v in row))
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "plan":
        if args.space == "torus":
            if len(args.x) != 2 or len(args.z) != 2:
                print("torus points need exactly 2 angles", file=sys.stderr)
                return 2
            q = torus.TorusQuery(
                TorusPoint(*args.x), project(TorusPoint(*args.z))
            )
            rep = torus.plan(q)
        else:
            if len(args.p) != args.n + 1 or len(args.l) != args.n + 1:
                print(f"sphere points need {args.n + 1} coordinates", file=sys.stderr)
                return 2
            f = sphere.make_frame(args.n)
            q = sphere.SphereQuery(
                SpherePoint(tuple(args.p)), project(SpherePoint(tuple(args.l)))
            )
            rep = sphere.plan_sphere(f, q)
        samples = args.samples if args.samples else (101 if args.format == "csv" else 0)
        _emit(_plan_output(rep.to_dict(samples), args.format, samples), args.out)
        return 0 if rep.ok else 1

    if args.command == "verify":
        seed = args.seed if args.seed is not None else _default_seed()
        if args.suite == "partition":
            rep = harness.check_partition(
                args.space, args.samples, seed, args.strat_samples, args.n
            )
        elif args.suite == "sections":
            rep = harness.check_sections(
                args.space, args.samples, seed, args.strat_samples, args.n
            )
        elif args.suite == "continuity":
            rep = harness.probe_continuity(
                args.space, [1e-3, 1e-4, 1e-5], args.pairs, seed, args.n
            )
        else:
            rep = harness.run_identity_suite(args.space, args.samples, seed, args.n)
        _emit(rep.to_json(), args.out)
        return 0 if rep.passed else 1

    if args.command == "cuplength":
        if args.which == "one-pi-star":
            m = gf2.one_pi_star()
        else:
            m = gf2.pi_star()
        length, witness = gf2.kernel_cup_length(m, args.max)
        dims = {
            str(d): len(gf2.kernel(m, d)) for d in range(m.source.top + 1)
        }
        prod = gf2.unit(m.source)
        for w in witness:
            prod = prod * w
        _emit(
            json.dumps(
                {
                    "map": args.which,
                    "length": length,
                    "witness": [w.label() for w in witness],
                    "product": prod.label(),
                    "kernel_dims": dims,
                },
                sort_keys=True,
            ),
            args.out,
        )
        return 0

    # identities
    seed = args.seed if args.seed is not None else _default_seed()
    rep = harness.run_identity_suite(args.space, args.count, seed, args.n)
    _emit(rep.to_json(), args.out)
    return 0 if rep.passed else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

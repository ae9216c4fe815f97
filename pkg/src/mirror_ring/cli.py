"""Batch front-end: build tables, run verifications, export reports.

Every mode writes one deterministic artifact (JSON by default, CSV for
the product tables) to stdout or to the path given with -o.  Exit codes:
0 on success, 1 when a verification report contains failures, 2 on bad
usage.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction

from . import floer, moduli, quiver, theta

TABLE_MODES = ("theta", "floer-direct", "floer-brion")
MODES = TABLE_MODES + ("verify", "moduli", "quiver", "assoc")


@dataclasses.dataclass
class RunConfig:
    """One batch invocation: what to compute and where to put it."""

    mode: str
    n: int = 1
    D: int = 6
    max_m: int = 1
    eps_override: Fraction | None = None
    jobs: int = 0  # 0 means use available parallelism
    output: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.D < 0:
            raise ValueError(f"truncation must be >= 0, got {self.D}")
        if self.max_m < 1:
            raise ValueError(f"max_m must be >= 1, got {self.max_m}")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"format must be json or csv, got {self.fmt!r}")
        if self.fmt == "csv" and self.mode not in TABLE_MODES:
            raise ValueError("csv output only applies to product tables")
        if self.eps_override is not None and self.eps_override <= 0:
            raise ValueError("eps must be positive")
        if self.jobs < 0:
            raise ValueError("jobs must be >= 0")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(cfg: RunConfig, text: str):
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_product(cfg: RunConfig):
    if cfg.mode == "theta":
        return theta.theta_product
    counting = "direct" if cfg.mode == "floer-direct" else "brion"

    def product(a, b, n, D):
        return floer.floer_product(
            n, a.m, a.p, b.m, b.p, D, mode=counting, eps=cfg.eps_override
        )

    return product


def _run_table(cfg: RunConfig) -> int:
    table = theta.build_table(cfg.n, cfg.max_m, cfg.D, product=_table_product(cfg))
    if cfg.fmt == "csv":
        _emit(cfg, table.to_csv())
    else:
        _emit(cfg, _json_text(table.to_json_obj()))
    return 0


def _run_verify(cfg: RunConfig) -> int:
    jobs = cfg.jobs or os.cpu_count() or 1
    merged = {"n": cfg.n, "D": cfg.D, "pairs_checked": 0, "failures": []}
    for counting in ("direct", "brion"):
        report = floer.mirror_verify(
            cfg.n, cfg.max_m, cfg.D, mode=counting, eps=cfg.eps_override, jobs=jobs
        )
        merged["pairs_checked"] += report["pairs_checked"]
        merged["failures"].extend(report["failures"])
    _emit(cfg, _json_text(merged))
    return 1 if merged["failures"] else 0


def _run_moduli(cfg: RunConfig) -> int:
    n, D = cfg.n, cfg.D
    out = {"n": n, "D": D, "s": moduli.solve_s(n, D).to_json_obj()}
    if n >= 2:
        for i in range(n):
            out[f"R_{i}"] = moduli.residue_R(i, n, D).to_json_obj()
        b_off, b_diag = moduli.coords_b(n, D)
        for (i, j), v in b_off.items():
            out[f"b_{i}_{j}"] = v.to_json_obj()
        for i, v in b_diag.items():
            out[f"b_{i}"] = v.to_json_obj()
    if n >= 3:
        for (i, j), v in moduli.coords_c(n, D).items():
            out[f"c_{i}_{j}"] = v.to_json_obj()
    _emit(cfg, _json_text(out))
    return 0


def _run_quiver(cfg: RunConfig) -> int:
    if cfg.n < 2:
        raise ValueError("the quiver report needs n >= 2")
    d0, d1, total = quiver.graded_dims(cfg.n)
    out = {
        "n": cfg.n,
        "dims": {"deg0": d0, "deg1": d1, "total": total},
        "hom": {
            f"{u},{v}": list(c)
            for (u, v), c in sorted(quiver.hom_table(cfg.n).items())
        },
        "node_dual_hilbert": [quiver.node_dual_hilbert(d) for d in range(8)],
        "table": quiver.multiplication_table(cfg.n),
    }
    _emit(cfg, _json_text(out))
    return 0


def _run_assoc(cfg: RunConfig) -> int:
    reports = []
    bad = 0
    for m1 in range(1, cfg.max_m + 1):
        for m2 in range(1, cfg.max_m + 1):
            for m3 in range(1, cfg.max_m + 1):
                rep = theta.check_associativity(cfg.n, cfg.D, (m1, m2, m3))
                bad += len(rep["failures"])
                reports.append(rep)
    _emit(cfg, _json_text({"n": cfg.n, "D": cfg.D, "reports": reports}))
    return 1 if bad else 0


def run(cfg: RunConfig) -> int:
    """Execute one configured batch run; returns the process exit code."""
    dispatch = {
        "verify": _run_verify,
        "moduli": _run_moduli,
        "quiver": _run_quiver,
        "assoc": _run_assoc,
    }
    if cfg.mode in TABLE_MODES:
        return _run_table(cfg)
    return dispatch[cfg.mode](cfg)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirror-ring",
        description=(
            "Exact structure constants of the degenerating elliptic curve "
            "ring, two independent ways, with verification reports."
        ),
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    help_by_mode = {
        "theta": "product table from the closed series formula",
        "floer-direct": "product table from direct lattice point counts",
        "floer-brion": "product table from vertex generating functions",
        "verify": "compare both counting tables against the series table",
        "moduli": "root series, residues, and b/c coordinate report",
        "quiver": "graded dimensions and multiplication table of the path algebra",
        "assoc": "associativity report over all weight triples up to max-m",
    }
    for mode in MODES:
        p = sub.add_parser(mode, help=help_by_mode[mode])
        p.add_argument("--n", type=int, default=1, help="number of components")
        p.add_argument(
            "--trunc", type=int, default=6, help="total-degree truncation D"
        )
        p.add_argument("--max-m", type=int, default=1, help="weight cap")
        p.add_argument(
            "--eps",
            type=Fraction,
            default=None,
            help="override the counting offset (a rational like 1/100)",
        )
        p.add_argument(
            "--jobs", type=int, default=0, help="worker count, 0 = all cores"
        )
        p.add_argument(
            "--format", choices=("json", "csv"), default="json", dest="fmt"
        )
        p.add_argument("-o", "--output", default=None, help="output path")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            mode=args.mode,
            n=args.n,
            D=args.trunc,
            max_m=args.max_m,
            eps_override=args.eps,
            jobs=args.jobs,
            output=args.output,
            fmt=args.fmt,
        )
        return run(cfg)
    except ValueError as exc:
        print(f"mirror-ring: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

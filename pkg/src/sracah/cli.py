"""
Command line front end.

    sracah verify --n 4
    sracah series --n 4 --K 10
    sracah pbw --n 3 --max-degree 8

Exit codes: 0 all checks pass, 1 a mathematical check failed,
2 usage error or resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from sracah import pbw, relations, series
from sracah.linalg import DEFAULT_BUDGET, ResourceBudgetExceeded

EXIT_OK, EXIT_FAIL, EXIT_RESOURCE = 0, 1, 2
MAX_VERIFY_N = 8


@dataclass
class RunConfig:
    command: str
    n: int
    K: int = 20
    max_degree: int = 8
    tags: tuple | None = None
    indices: tuple | None = None
    fmt: str = "json"
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    multigraded: bool = False
    bound: int = 4
    seed_manifest: bool = False
    timing: bool = False


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _indices(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.replace(";", ",").split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}; expected e.g. 1,2,3")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sracah",
        description="Exact checks for the special Racah algebra and the sl2 diagonal centralizer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True, help="number of tensor factors")
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="json")
        p.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1,
                       help="worker processes (1 = strictly sequential)")
        p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                       help="maximum matrix cells for exact linear algebra")
        p.add_argument("--timing", action="store_true",
                       help="attach wall-clock timings in a separate meta object")

    v = sub.add_parser("verify", help="verify the relation catalogue in U(sl2)^n")
    common(v)
    v.add_argument("--tag", action="append", choices=relations.TAGS, help="restrict to a relation tag (repeatable)")
    v.add_argument("--indices", type=_indices, help="restrict to one index tuple, e.g. 1,2,3")
    v.add_argument("--seed-manifest", action="store_true", help="list the relation instances without running them")

    s = sub.add_parser("series", help="Hilbert-Poincare series by three independent methods")
    common(s)
    s.add_argument("--K", type=_non_negative, default=20, help="truncation degree")
    s.add_argument("--multigraded", action="store_true", help="also check the multigraded formula")
    s.add_argument("--bound", type=_non_negative, default=4, help="per-variable exponent bound for --multigraded")

    b = sub.add_parser("pbw", help="certify the explicit PBW bases for n = 2, 3, 4")
    common(b)
    b.add_argument("--max-degree", type=_non_negative, default=8)
    return parser


def parse_config(argv: list | None = None) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "verify" and not 2 <= ns.n <= MAX_VERIFY_N:
        parser.error(f"verify needs 2 <= n <= {MAX_VERIFY_N}, got {ns.n}")
    if ns.command == "series" and ns.n < 2:
        parser.error(f"series needs n >= 2, got {ns.n}")
    if ns.command == "pbw" and ns.n not in pbw.SUPPORTED_N:
        parser.error(f"pbw supports n in {', '.join(map(str, pbw.SUPPORTED_N))}, got {ns.n}")
    return RunConfig(
        command=ns.command,
        n=ns.n,
        K=getattr(ns, "K", 20),
        max_degree=getattr(ns, "max_degree", 8),
        tags=tuple(ns.tag) if getattr(ns, "tag", None) else None,
        indices=getattr(ns, "indices", None),
        fmt=ns.fmt,
        jobs=ns.jobs,
        budget=ns.budget,
        multigraded=getattr(ns, "multigraded", False),
        bound=getattr(ns, "bound", 4),
        seed_manifest=getattr(ns, "seed_manifest", False),
        timing=ns.timing,
    )


# ----------------------------------------------------------------------


def cmd_verify(cfg: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    if cfg.seed_manifest:
        for r in relations.catalogue(cfg.n, cfg.tags):
            if cfg.indices is None or r.indices == cfg.indices:
                out.write(_dump({"tag": r.tag, "indices": list(r.indices), "n": cfg.n}) + "\n")
        return EXIT_OK
    reports = relations.relation_suite(cfg.n, tags=cfg.tags, indices=cfg.indices, jobs=cfg.jobs)
    for rep in reports:
        if cfg.fmt == "json":
            out.write(_dump(rep.payload(cfg.timing)) + "\n")
        else:
            status = "PASS" if rep.residual_zero else "FAIL"
            idx = ",".join(map(str, rep.indices))
            line = f"{status}  {rep.tag:<12} ({idx})  residual_terms={rep.residual_terms}"
            if cfg.timing:
                line += f"  {rep.millis} ms"
            out.write(line + "\n")
    summary = relations.summarize(reports)
    summary["n"] = cfg.n
    if cfg.fmt == "json":
        out.write(_dump({"summary": summary}) + "\n")
    else:
        out.write(f"n={cfg.n}: {summary['passed']}/{summary['total']} relation instances vanish exactly\n")
    for rep in reports:
        if not rep.residual_zero:
            err.write(f"nonzero residual: {rep.tag}{tuple(rep.indices)} at n={rep.n} ({rep.residual_terms} terms)\n")
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def cmd_series(cfg: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    agree, routes = series.three_way_agreement(cfg.n, cfg.K)
    payload = {
        "n": cfg.n,
        "K": cfg.K,
        "coefficients": routes["closed_form"],
        "methods": routes,
        "numerator": series.p_poly(cfg.n - 2).to_list(),
        "agree": agree,
    }
    ok = agree
    if cfg.multigraded:
        ms = series.multigraded_series(cfg.n, cfg.bound)
        special = ms.specialize().to_list()
        ref = series.tilde_formula_series(cfg.n, len(special) - 1).to_list()
        payload["multigraded"] = {
            "bound": cfg.bound,
            "terms": len(ms.coeffs),
            "specialization": special,
            "agree": special == ref,
        }
        ok = ok and special == ref
    if cfg.fmt == "json":
        out.write(_dump(payload) + "\n")
    else:
        out.write(f"n={cfg.n} K={cfg.K} numerator P_{cfg.n - 2}(t) = {payload['numerator']}\n")
        width = max(len(str(c)) for v in routes.values() for c in v) + 2
        out.write("k".rjust(4) + "".join(name.rjust(max(width, len(name) + 2)) for name in routes) + "\n")
        for k in range(cfg.K + 1):
            row = str(k).rjust(4)
            for name, v in routes.items():
                row += str(v[k]).rjust(max(width, len(name) + 2))
            out.write(row + "\n")
        out.write("verdict: " + ("agree" if agree else "DISAGREE") + "\n")
        if cfg.multigraded:
            mg = payload["multigraded"]
            out.write(f"multigraded (bound {cfg.bound}): specialization {'agrees' if mg['agree'] else 'DISAGREES'}\n")
    if not ok:
        err.write("series methods disagree\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_pbw(cfg: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    n, D = cfg.n, cfg.max_degree
    counts = pbw.count_by_degree(n, D)
    expected = series.closed_form_series(n, D).to_list()
    records = [{"counts": counts, "series": expected, "n": n, "pass": counts == expected}]
    ok = counts == expected
    degree = None
    try:
        for degree in range(D + 1):
            if n == 4 and degree == 8:
                cert, spanned = pbw.degree8_witness(cfg.budget)
                rec = cert.to_json()
                rec["p11p22p33p44_in_span"] = spanned
                ok = ok and cert.passed and spanned
            else:
                cert = pbw.independence_rank(n, degree, cfg.budget)
                rec = cert.to_json()
                ok = ok and cert.passed
            records.append(rec)
    except (ResourceBudgetExceeded, MemoryError) as exc:
        err.write(f"resource guard tripped at degree {degree}: {exc}\n")
        _emit_pbw(cfg, records, out)
        return EXIT_RESOURCE
    _emit_pbw(cfg, records, out)
    if not ok:
        err.write("PBW certification failed\n")
    return EXIT_OK if ok else EXIT_FAIL


def _emit_pbw(cfg: RunConfig, records: list, out) -> None:
    if cfg.fmt == "json":
        for rec in records:
            out.write(_dump(rec) + "\n")
        out.write(_dump({"summary": {"n": cfg.n, "max_degree": cfg.max_degree,
                                     "ok": all(r["pass"] for r in records)}}) + "\n")
        return
    head = records[0]
    out.write(f"n={cfg.n} basis counts {head['counts']} vs series {head['series']}: "
              f"{'match' if head['pass'] else 'MISMATCH'}\n")
    for rec in records[1:]:
        out.write(f"degree {rec['degree']:>2}: {rec['count']:>5} monomials, rank {rec['rank']:>5}, "
                  f"ambient {rec['ambient_dim']:>7}  {'PASS' if rec['pass'] else 'FAIL'}\n")


COMMANDS = {"verify": cmd_verify, "series": cmd_series, "pbw": cmd_pbw}


def main(argv: list | None = None) -> int:
    cfg = parse_config(argv)
    try:
        return COMMANDS[cfg.command](cfg)
    except MemoryError:
        sys.stderr.write("out of memory\n")
        return EXIT_RESOURCE
    except BrokenPipeError:
        # downstream reader closed early (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

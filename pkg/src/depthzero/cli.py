"""
Command line front end.

    depthzero rootinfo --spec G2
    depthzero mackey --spec A2 --x 0,0 --y 0,0 --bound 2
    depthzero verify --q 2,3 --level2 --gxromega G2 --format structured --out report.json

Exit status: 0 when every executed check passes, 1 on a failed check,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import report as rep
from .apartment import parse_point
from .finlab.fields import factor_prime_power
from .mackey import (
    MackeyError,
    SupercuspidalDatum,
    coincidence_report,
    disjointness,
    mackey_components,
    ps_fixed_dim,
    ps_fixed_dim_discrepancy,
)
from .qpoly import QPolynomial
from .rootdata import (
    CartanSpec,
    RootDataError,
    build_root_system,
    coxeter_element,
    poincare_poly,
    torus_order_poly,
    weyl_degrees,
    weyl_group,
)
from .verify import SuiteConfig, run_suite


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    spec: str = "A2"
    x: str = ""
    y: str = ""
    bound: int = 2
    q: tuple = (2, 3)
    level2: bool = False
    enable_big_q: bool = False
    gxromega: tuple = ()
    torus_flag: bool = False
    fmt: str = "text"
    out: str | None = None
    cache: str | None = None


def parse_q_list(text: str) -> tuple:
    try:
        qs = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError("--q expects a comma separated list of integers, got %r" % text) from None
    for q in qs:
        try:
            factor_prime_power(q)
        except ValueError as err:
            raise UsageError(str(err)) from None
    return qs


def _datum(spec: str):
    try:
        return build_root_system(CartanSpec.parse(spec))
    except RootDataError as err:
        raise UsageError(str(err)) from None


def _point(text, datum, name):
    try:
        return parse_point(text, datum.rank)
    except ValueError as err:
        raise UsageError("--%s: %s" % (name, err)) from None


# ---------------------------------------------------------------------------


def cmd_rootinfo(cfg: RunConfig) -> tuple[dict, bool]:
    D = _datum(cfg.spec)
    W = weyl_group(D)
    c = coxeter_element(D)
    out = {
        "spec": str(D.spec),
        "rank": D.rank,
        "roots": len(D.roots),
        "positive_roots": len(D.positive_roots),
        "long_roots": len(D.long_roots),
        "short_roots": len(D.short_roots),
        "weyl_order": len(W),
        "degrees": weyl_degrees(D.spec),
        "poincare": poincare_poly(D),
        "coxeter_torus_order": torus_order_poly(c),
        "cartan": [list(r) for r in D.cartan],
    }
    return out, True


def cmd_mackey_report(cfg: RunConfig) -> tuple[dict, bool]:
    D = _datum(cfg.spec)
    x = _point(cfg.x, D, "x")
    y = _point(cfg.y, D, "y")
    if cfg.bound < 0:
        raise UsageError("--bound must be nonnegative")
    try:
        tau1 = SupercuspidalDatum.deligne_lusztig(D, x, label="tau_1")
        tau2 = SupercuspidalDatum.deligne_lusztig(D, x, label="tau_2")
        comps = mackey_components(D, x, y, tau1, cfg.bound)
        coinc = coincidence_report(D, tau1, tau2, x, y, cfg.bound, cfg.torus_flag)
    except MackeyError as err:
        raise UsageError(str(err)) from None
    marker = {r["ell"]: r for r in coinc["rows"]}
    rows = []
    for c in comps:
        disjoint_from = [d.ell for d in comps if d.ell != c.ell and disjointness(D, x, c.ell, x, d.ell, y)]
        rows.append(
            {
                "ell": c.ell,
                "interior": c.interior,
                "w_upsilon": list(c.w_upsilon.word) if c.w_upsilon is not None else None,
                "degree": c.degree,
                "r0": c.depth_lower,
                "s0": c.depth_upper,
                "coincidence": marker[c.ell]["status"],
                "reason": marker[c.ell]["reason"],
                "certified_disjoint_from": disjoint_from,
                "note": c.note,
            }
        )
    out = {
        "spec": str(D.spec),
        "x": tuple(x),
        "y": tuple(y),
        "bound": cfg.bound,
        "tau_degree": tau1.degree_poly,
        "tau_local_type": str(tau1.local_type),
        "torus_meets_parabolics_centrally": cfg.torus_flag,
        "rows": rows,
        "ps_fixed_dim": {str(n): ps_fixed_dim(D, n) for n in (1, 2, 3)},
    }
    if str(D.spec) == "A2":
        disc = ps_fixed_dim_discrepancy(D, 3)
        out["ps_fixed_dim_note"] = {
            "printed": disc["printed"],
            "computed": disc["computed"],
            "agree": disc["agree"],
            "note": disc["note"],
        }
    return out, True


def cmd_verify(cfg: RunConfig) -> tuple[dict, bool]:
    for q in cfg.q:
        if q > 5:
            raise UsageError("SL(3,%d) is beyond every guard" % q)
    for spec in cfg.gxromega:
        _datum(spec)
    sc = SuiteConfig(
        sl3_q=cfg.q,
        heisenberg_q=tuple(q for q in cfg.q if q <= 4),
        level2=cfg.level2,
        gxromega=cfg.gxromega,
        enable_big_q=cfg.enable_big_q,
        cache=cfg.cache,
    )
    suite = run_suite(sc)
    return {"checks": [c.as_dict() for c in suite.checks], "all_passed": suite.ok}, suite.ok


# ---------------------------------------------------------------------------
# text rendering


def _fmt(v):
    if isinstance(v, QPolynomial):
        return str(v)
    if isinstance(v, tuple):
        return "(" + ", ".join(_fmt(a) for a in v) + ")"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(a) for a in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join("%s: %s" % (k, _fmt(a)) for k, a in v.items()) + "}"
    return str(v)


def render_text(command: str, out: dict) -> str:
    lines = []
    if command == "rootinfo":
        for k, v in out.items():
            lines.append("%-22s %s" % (k, _fmt(v)))
    elif command == "mackey":
        lines.append("type %s  x=%s  y=%s  tau: %s, degree %s" % (out["spec"], _fmt(out["x"]), _fmt(out["y"]), out["tau_local_type"], out["tau_degree"]))
        lines.append("%-12s %-8s %-6s %-6s %-40s %s" % ("ell", "interior", "r0", "s0", "degree", "coincidence"))
        for r in out["rows"]:
            deg = str(r["degree"]) if r["degree"] is not None else "-"
            lines.append("%-12s %-8s %-6d %-6d %-40s %s" % (_fmt(r["ell"]), r["interior"], r["r0"], r["s0"], deg, r["coincidence"]))
            if r["note"]:
                lines.append("%12s note: %s" % ("", r["note"]))
        lines.append("certified disjoint pairs: %d" % (sum(len(r["certified_disjoint_from"]) for r in out["rows"]) // 2))
        for n, p in out["ps_fixed_dim"].items():
            lines.append("principal series, n=%s: dim of fixed vectors %s" % (n, p))
        if "ps_fixed_dim_note" in out:
            note = out["ps_fixed_dim_note"]
            lines.append("printed n=3 form %s vs computed %s: %s" % (note["printed"], note["computed"], note["note"]))
    elif command == "verify":
        for c in out["checks"]:
            lines.append("[%s] %s: %s" % (c["status"], c["id"], c["title"]))
            lines.append("    expected %s" % _fmt(c["expected"]))
            lines.append("    computed %s" % _fmt(c["computed"]))
            if c["note"]:
                lines.append("    note: %s" % c["note"])
        lines.append("all passed" if out["all_passed"] else "FAILED")
    return "\n".join(lines)


def build_parser():
    parser = argparse.ArgumentParser(prog="depthzero", description="Depth-zero Mackey components and finite-group checks")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("rootinfo", help="root system summary")
    p.add_argument("--spec", required=True, help="Cartan type such as A2, G2 or B2+A1")
    common(p)

    p = sub.add_parser("mackey", help="Mackey components of a DL supercuspidal restricted to G_y")
    p.add_argument("--spec", default="A2")
    p.add_argument("--x", default="", help="vertex x, e.g. 1/2,1/2 (blank for the origin)")
    p.add_argument("--y", default="", help="special vertex y (blank for the origin)")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--assume-torus-intersection", action="store_true", help="assert T meets P inside Z")
    common(p)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--q", default="2,3", help="q values for SL(3, q)")
    p.add_argument("--level2", action="store_true", help="include the level-two double coset count")
    p.add_argument("--enable-big-q", action="store_true", help="allow SL(3,5)")
    p.add_argument("--gxromega", action="append", default=[], metavar="TYPE", help="run the Omega stabilizer suite for TYPE")
    p.add_argument("--cache", help="JSON cache file for character tables")
    common(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(fmt=args.format, out=args.out)
    try:
        if args.command == "rootinfo":
            cfg.spec = args.spec
            out, ok = cmd_rootinfo(cfg)
        elif args.command == "mackey":
            cfg.spec, cfg.x, cfg.y, cfg.bound = args.spec, args.x, args.y, args.bound
            cfg.torus_flag = args.assume_torus_intersection
            out, ok = cmd_mackey_report(cfg)
        else:
            cfg.q = parse_q_list(args.q)
            cfg.level2 = args.level2
            cfg.enable_big_q = args.enable_big_q
            cfg.gxromega = tuple(args.gxromega)
            cfg.cache = args.cache
            out, ok = cmd_verify(cfg)
    except UsageError as err:
        print("usage error: %s" % err, file=sys.stderr)
        return 2
    text = rep.dumps(out) if cfg.fmt == "structured" else render_text(args.command, out)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: sieves, integrals, verification suites, sweeps.

Exit codes: 0 success / all properties pass, 1 property failure,
2 usage error, 3 resource budget exceeded. MSI_THREADS caps the number of
worker threads used for sweep rows (default 1); rows are written in plan
order regardless of completion order, so output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .arith import (
    SupportCutoff,
    power_floor,
    preset_table,
    sieve_divisor_count,
    write_csv,
)
from .farey import farey_enumerate
from .integral import (
    IntegralConfig,
    ResourceBudgetError,
    majorant_compare,
    selberg_integral_decomposed,
    selberg_integral_direct,
)
from .verify import SUITES, even_floor, run_suite

G_CHOICES = "delta1|unit|mobius|mobius-squared|random:SEED"


@dataclass(frozen=True)
class SweepPlan:
    """One majorant-comparison row per N: h, Q and A derived from rules.

    Rules: h_rule and q_rule are pow:EXP or const:V (h is rounded down to
    even, at least 2); a_rule is nlogn, n or const:V. Derived values keep
    every h even and every fixed Q at most N + h.
    """

    n_values: tuple[int, ...]
    h_rule: str
    q_rule: str
    g_spec: str
    major_spec: str
    cutoff_theta: float | None  # None = fixed cutoff from q_rule
    a_rule: str
    out: str

    def derive(self, n: int) -> tuple[int, int, float | None]:
        h = _apply_h_rule(self.h_rule, n)
        q = _apply_int_rule(self.q_rule, n)
        if q > n + h:
            raise ValueError(f"derived Q={q} exceeds N + h = {n + h}")
        a = _apply_a_rule(self.a_rule, n)
        return h, q, a


def _apply_h_rule(rule: str, n: int) -> int:
    if rule.startswith("pow:"):
        return even_floor(n ** float(rule.split(":", 1)[1]))
    if rule.startswith("const:"):
        h = int(rule.split(":", 1)[1])
        if h < 2 or h % 2:
            raise ValueError(f"constant h must be even and >= 2, got {h}")
        return h
    raise ValueError(f"bad h rule {rule!r}; use pow:EXP or const:V")


def _apply_int_rule(rule: str, n: int) -> int:
    if rule.startswith("pow:"):
        return max(1, power_floor(n, float(rule.split(":", 1)[1])))
    if rule.startswith("const:"):
        return int(rule.split(":", 1)[1])
    raise ValueError(f"bad rule {rule!r}; use pow:EXP or const:V")


def _apply_a_rule(rule: str, n: int) -> float | None:
    if rule == "nlogn":
        return None  # IntegralConfig default
    if rule == "n":
        return float(n)
    if rule.startswith("const:"):
        return float(rule.split(":", 1)[1])
    raise ValueError(f"bad A rule {rule!r}; use nlogn, n or const:V")


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def cmd_sieve(args) -> int:
    if args.kind == "divisor":
        table = sieve_divisor_count(args.max_n)
    else:
        table = preset_table(args.kind, args.max_n)
    stream, close = _open_out(args.out)
    try:
        write_csv(table, stream)
    finally:
        if close:
            stream.close()
    return 0


def cmd_farey(args) -> int:
    seq = farey_enumerate(args.q)
    stream, close = _open_out(args.out)
    try:
        if args.csv:
            stream.write("num,den,value\n")
            for fr in seq:
                stream.write(f"{fr.num},{fr.den},{float(fr.value)!r}\n")
        else:
            for fr in seq:
                stream.write(f"{fr.num}/{fr.den}\t{float(fr.value)!r}\n")
    finally:
        if close:
            stream.close()
    return 0


def _build_config(args) -> IntegralConfig:
    if args.cutoff and args.cutoff.startswith("power:"):
        theta = float(args.cutoff.split(":", 1)[1])
        cutoff = SupportCutoff.power(theta)
        table_n = power_floor(2 * args.n + args.h, theta)
    else:
        if args.cutoff and args.cutoff != "fixed":
            raise ValueError(f"bad cutoff {args.cutoff!r}; use fixed or power:THETA")
        if args.q is None:
            raise ValueError("--q is required for a fixed cutoff")
        cutoff = SupportCutoff.fixed(args.q)
        table_n = args.q
    g = preset_table(args.g, max(1, table_n))
    return IntegralConfig(
        n=args.n, h=args.h, g=g, cutoff=cutoff, a=args.a, g_name=args.g
    )


def cmd_integral(args) -> int:
    cfg = _build_config(args)
    q_label = cfg.cutoff.q if cfg.cutoff.mode == "fixed" else f"power:{cfg.cutoff.theta}"
    if not args.decompose:
        direct = selberg_integral_direct(cfg)
        if args.csv:
            print("N,h,Q,g,j_direct")
            print(f"{cfg.n},{cfg.h},{q_label},{cfg.g_name},{direct!r}")
        else:
            print(json.dumps({
                "config": _config_json(cfg),
                "direct": direct,
            }, indent=2))
        return 0
    rep = selberg_integral_decomposed(cfg, force=args.force)
    if args.csv:
        print("N,h,Q,g,j_direct,j_total,diagonal,near,far,gap")
        near = rep.near_delta + rep.near_sigma
        far = rep.far_delta + rep.far_sigma
        print(
            f"{cfg.n},{cfg.h},{q_label},{cfg.g_name},{rep.direct!r},{rep.total!r},"
            f"{rep.diagonal!r},{near!r},{far!r},{rep.abs_gap!r}"
        )
    else:
        payload = {"config": _config_json(cfg)}
        payload.update(vars(rep))
        print(json.dumps(payload, indent=2))
    return 0


def _config_json(cfg: IntegralConfig) -> dict:
    return {
        "n": cfg.n,
        "h": cfg.h,
        "cutoff": f"fixed:{cfg.cutoff.q}" if cfg.cutoff.mode == "fixed" else f"power:{cfg.cutoff.theta}",
        "g": cfg.g_name,
        "a": cfg.a_value,
    }


def cmd_verify(args) -> int:
    report = run_suite(args.suite, fast=args.fast)
    payload = report.to_json()
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
    print(json.dumps(payload, indent=2))
    return 0 if report.passed else 1


def cmd_sweep(args) -> int:
    n_values = tuple(int(v) for v in args.n_values.split(","))
    plan = SweepPlan(
        n_values=n_values,
        h_rule=args.h_rule,
        q_rule=args.q_rule,
        g_spec=args.g,
        major_spec=args.G,
        cutoff_theta=(
            float(args.cutoff.split(":", 1)[1])
            if args.cutoff and args.cutoff.startswith("power:")
            else None
        ),
        a_rule=args.a_rule,
        out=args.out,
    )
    rows = run_sweep(plan)
    stream, close = _open_out(plan.out)
    try:
        stream.write("N,h,Q,g,G,j_f,j_F,nh,ratio\n")
        for (n, h, q), rep in rows:
            stream.write(
                f"{n},{h},{q},{plan.g_spec},{plan.major_spec},"
                f"{rep.j_f!r},{rep.j_F!r},{rep.n_h!r},{rep.ratio!r}\n"
            )
    finally:
        if close:
            stream.close()
    return 0


def run_sweep(plan: SweepPlan):
    """Evaluate the plan, one majorant comparison per N, in plan order.

    Rows may be computed by up to MSI_THREADS worker threads; the pure,
    cache-backed computations give identical values for any thread count.
    """

    def one(n: int):
        h, q, a = plan.derive(n)
        if plan.cutoff_theta is not None:
            cutoff = SupportCutoff.power(plan.cutoff_theta)
            table_n = power_floor(2 * n + h, plan.cutoff_theta)
        else:
            cutoff = SupportCutoff.fixed(q)
            table_n = q
        g = preset_table(plan.g_spec, max(1, table_n))
        major = preset_table(plan.major_spec, max(1, table_n))
        cfg = IntegralConfig(n=n, h=h, g=g, cutoff=cutoff, a=a, g_name=plan.g_spec)
        return (n, h, q), majorant_compare(cfg, major, plan.major_spec)

    threads = max(1, int(os.environ.get("MSI_THREADS", "1")))
    if threads == 1 or len(plan.n_values) == 1:
        return [one(n) for n in plan.n_values]
    with ThreadPoolExecutor(max_workers=min(threads, len(plan.n_values))) as pool:
        return list(pool.map(one, plan.n_values))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msi",
        description="Short-interval mean squares: sieves, integrals, verification suites, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="tabulate an arithmetic function as CSV")
    p.add_argument("--kind", required=True,
                   help=f"{G_CHOICES}|divisor")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("farey", help="enumerate reduced fractions in (0, 1/2]")
    p.add_argument("--q", type=int, required=True, help="maximal denominator")
    p.add_argument("--csv", action="store_true", help="CSV with header num,den,value")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("integral", help="mean square of centered short sums")
    p.add_argument("--n", type=int, required=True, help="sweep over x in (N, 2N]")
    p.add_argument("--h", type=int, required=True, help="even window half-width")
    p.add_argument("--q", type=int, default=None, help="fixed support bound")
    p.add_argument("--g", required=True, help=G_CHOICES)
    p.add_argument("--cutoff", default=None, help="fixed (default) or power:THETA")
    p.add_argument("--a", type=float, default=None, help="spacing parameter (default N log N)")
    p.add_argument("--decompose", action="store_true",
                   help="also compute the spectral decomposition (fixed cutoff only)")
    p.add_argument("--force", action="store_true",
                   help="ignore the fraction-pair budget")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV output")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--fast", action="store_true", help="reduced grids for a smoke run")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="majorant comparison across a list of N")
    p.add_argument("--n-values", required=True, dest="n_values",
                   help="comma-separated N list, e.g. 1024,2048,4096")
    p.add_argument("--h-rule", default="pow:0.4", dest="h_rule",
                   help="pow:EXP or const:V (even-rounded, default pow:0.4)")
    p.add_argument("--q-rule", default="pow:0.3", dest="q_rule",
                   help="pow:EXP or const:V (default pow:0.3)")
    p.add_argument("--g", default="mobius", help=G_CHOICES)
    p.add_argument("--G", default="mobius-squared", help="majorant preset")
    p.add_argument("--cutoff", default=None, help="fixed (default) or power:THETA")
    p.add_argument("--a-rule", default="nlogn", dest="a_rule",
                   help="nlogn, n or const:V")
    p.add_argument("--out", default="-", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

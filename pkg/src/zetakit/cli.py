"""Command-line front end.

Three subcommands: eval (call one exposed function), verify (run identity
suites and emit a report), table (emit CSV grids behind the convergence,
critical-line, and truncation figures). Reports are deterministic apart
from wall_ms; set ZETAKIT_STARTED_AT to pin the timestamp too.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from fnmatch import fnmatch
from fractions import Fraction

from . import asymptotic, numtheory, paths, series
from .errors import ZetakitError
from .expint import expint_e
from .special import fresnel_c, gamma_complex, sine_integral

_DEF_TERM_CAP = 100_000


def _term_cap() -> int:
    raw = os.environ.get("ZETAKIT_TERM_CAP")
    if raw is None:
        return _DEF_TERM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"ZETAKIT_TERM_CAP must be an integer, got {raw!r}") from None
    return cap


def _cfg(tol: float) -> series.SeriesConfig:
    return series.SeriesConfig(tolerance=tol, term_cap=_term_cap())


def _parse_complex(text: str) -> complex:
    cleaned = text.replace(" ", "").replace("i", "j")
    return complex(cleaned)


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        if v.imag == 0.0:
            return repr(v.real)
        sign = "+" if v.imag >= 0 else "-"
        return f"{v.real!r}{sign}{abs(v.imag)!r}i"
    if isinstance(v, float):
        return repr(v)
    return str(v)


# ------------------------------------------------------------------ types --


@dataclass(frozen=True)
class RunConfig:
    suite: str
    tolerance_override: float | None
    term_cap: int
    parallelism: int
    output_path: str
    format: str

    def __post_init__(self) -> None:
        if self.format not in ("json", "csv", "human"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        limit = (os.cpu_count() or 1) * 4
        if self.parallelism > limit:
            raise ValueError(f"parallelism capped at {limit}")


@dataclass(frozen=True)
class ReportRecord:
    id: str
    label: str
    lhs: str
    rhs: str
    abs_diff: float
    tolerance: float
    passed: bool
    wall_ms: float


@dataclass(frozen=True)
class VerifyCase:
    id: str
    label: str
    tolerance: float
    fn: object  # () -> (lhs, rhs) or (lhs, rhs, diff)


def _run_case(case: VerifyCase, tol: float) -> ReportRecord:
    t0 = time.perf_counter()
    try:
        out = case.fn()
        lhs, rhs = out[0], out[1]
        if len(out) > 2:
            diff = float(out[2])
        elif isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
            diff = float(abs(lhs - rhs))
        else:
            diff = abs(complex(lhs) - complex(rhs))
        rec = ReportRecord(
            case.id, case.label, _fmt(lhs), _fmt(rhs), diff, tol,
            diff <= tol, (time.perf_counter() - t0) * 1e3,
        )
    except Exception as exc:
        rec = ReportRecord(
            case.id, case.label, f"error: {type(exc).__name__}: {exc}", "",
            math.inf, tol, False, (time.perf_counter() - t0) * 1e3,
        )
    return rec


# ------------------------------------------------------------ suite table --


def _s_tag(s: complex) -> str:
    return _fmt(complex(s)).replace(" ", "")


def build_verify_cases() -> list[VerifyCase]:
    cases: list[VerifyCase] = []
    add = cases.append

    for c in paths.REGISTRY:
        add(
            VerifyCase(
                f"registry/{c.id}", c.label, c.tolerance,
                (lambda c=c: (c.lhs(), c.rhs())),
            )
        )

    for n in range(11):
        add(
            VerifyCase(
                f"bernoulli-recursion/n{n}",
                f"even-index recursion reproduces B_{2 * n + 2}",
                0.0,
                (lambda n=n: (
                    numtheory.bernoulli_via_even_recursion(n),
                    numtheory.bernoulli(2 * n + 2),
                )),
            )
        )
    for m in range(1, 21):
        add(
            VerifyCase(
                f"euler-triangle/m{m}",
                "triangular Euler-number sum vanishes",
                0.0,
                (lambda m=m: (numtheory.euler_triangle_sum(m), Fraction(0))),
            )
        )
    for m in range(1, 16):
        add(
            VerifyCase(
                f"euler-harmonic/m{m}",
                "harmonic-weighted Euler sum equals its Bernoulli form",
                0.0,
                (lambda m=m: numtheory.euler_bernoulli_harmonic_sides(m)),
            )
        )
        add(
            VerifyCase(
                f"harmonic-bernoulli/m{m}",
                "second harmonic/Bernoulli pairing",
                0.0,
                (lambda m=m: numtheory.euler_harmonic_bernoulli_sides(m)),
            )
        )
    for m in range(1, 11):
        add(
            VerifyCase(
                f"gamma-coefficient/m{m}",
                "Euler-gamma coefficient cancels exactly",
                0.0,
                (lambda m=m: (numtheory.euler_gamma_coefficient(m), Fraction(0))),
            )
        )
    for m in range(1, 9):
        add(
            VerifyCase(
                f"euler-recursion/m{m}",
                f"harmonic recursion reproduces E_{2 * m}",
                0.0,
                (lambda m=m: (
                    numtheory.euler_number_via_harmonic_recursion(m),
                    numtheory.euler_number(2 * m),
                )),
            )
        )

    for m in range(1, 6):
        add(
            VerifyCase(
                f"zeta-even/m{m}",
                f"closed rational form of zeta({2 * m})",
                1e-12,
                (lambda m=m: (
                    series.zeta_even_closed_form(m),
                    series.zeta_ref(2 * m).real,
                )),
            )
        )
    for m in (1, 2):
        add(
            VerifyCase(
                f"zeta-odd/exp-tail-m{m}",
                f"zeta({2 * m + 1}) from the level-1 tail",
                1e-8,
                (lambda m=m: (
                    series.zeta_odd_via_exp_tail(m, _cfg(1e-10)).value,
                    series.zeta_ref(2 * m + 1),
                )),
            )
        )
        for p in (1, 2, 3):
            add(
                VerifyCase(
                    f"zeta-odd/shifted-m{m}-p{p}",
                    f"zeta({2 * m + 1}) from the order-{p} shifted tail",
                    1e-8,
                    (lambda m=m, p=p: (
                        series.zeta_odd_via_shifted_tail(m, p, _cfg(1e-10)).value,
                        series.zeta_ref(2 * m + 1),
                    )),
                )
            )
        add(
            VerifyCase(
                f"zeta-odd/double-integral-m{m}",
                f"zeta({2 * m + 1}) from the nested kernel integral",
                1e-7,
                (lambda m=m: (
                    asymptotic.zeta_odd_via_double_integral(m, 1e-9),
                    series.zeta_ref(2 * m + 1).real,
                )),
            )
        )
        add(
            VerifyCase(
                f"zeta-odd/mellin-barnes-m{m}",
                f"zeta({2 * m + 1}) from the vertical-line contour",
                1e-7,
                (lambda m=m: (
                    asymptotic.mellin_barnes_zeta_odd(m, 1e-9),
                    series.zeta_ref(2 * m + 1),
                )),
            )
        )

    for m in (1, 2):
        for p in range(1, 2 * m + 1):
            add(
                VerifyCase(
                    f"negative-order-pair/m{m}-p{p}",
                    "negative-order pair sum equals its Euler tail",
                    1e-9,
                    (lambda m=m, p=p: series.negative_order_pair_identity(
                        m, p, _cfg(1e-11)
                    )),
                )
            )

    _path_builders = (
        ("A", paths.path_circle),
        ("B", paths.path_double_circle),
        ("C", paths.path_two_lines),
        ("D", paths.path_four_lines),
    )
    for s in (0.0, 0.5, 1.7, 2.0, -2.0):
        for tag, builder in _path_builders:
            add(
                VerifyCase(
                    f"paths/{tag}-s{_s_tag(s)}",
                    f"path {tag} reproduces eta({_s_tag(s)})",
                    1e-8,
                    (lambda s=s, builder=builder: (
                        paths.path_integral_eta(s, builder(), 1e-10),
                        series.eta_from_zeta_ref(s),
                    )),
                )
            )

    for t in (0.0, 2.0, 5.0, 14.1347):
        add(
            VerifyCase(
                f"critical-line/t{t:g}",
                "J-system reconstruction on the half line",
                1e-8,
                (lambda t=t: (
                    paths.critical_line_system(t, 1e-9).zeta,
                    series.zeta_ref(complex(0.5, t)),
                )),
            )
        )
    for s in (0.5, -0.4, complex(1.3, 1.1)):
        add(
            VerifyCase(
                f"split-sum/s{_s_tag(s)}",
                "head and tail zeta parts add to zeta",
                1e-9,
                (lambda s=s: (
                    paths.zeta_minus(s) + paths.zeta_plus(s),
                    series.zeta_ref(s),
                )),
            )
        )
    add(
        VerifyCase(
            "split-anchor/zero-minus", "head part at s=0", 1e-10,
            (lambda: (paths.zeta_minus(0.0), -0.5)),
        )
    )
    add(
        VerifyCase(
            "split-anchor/zero-plus", "tail part at s=0", 1e-10,
            (lambda: (paths.zeta_plus(0.0), 0.0)),
        )
    )

    for s in (0.5, 2.0, complex(-1.3, 2.0), complex(0.5, 5.0), -0.5, 4.0):
        add(
            VerifyCase(
                f"eta-series/s{_s_tag(s)}",
                "conjugate-pair series against the reference",
                1e-8,
                (lambda s=s: (
                    series.eta_via_expint_series(s, _cfg(1e-10)).value,
                    series.eta_from_zeta_ref(s),
                )),
            )
        )
    for n in range(5):
        add(
            VerifyCase(
                f"recursed-series/n{n}",
                f"depth-{n} recursed form at s=0.5",
                1e-8,
                (lambda n=n: (
                    series.eta_via_recursed_series(0.5, n, _cfg(1e-10)).value,
                    series.eta_from_zeta_ref(0.5),
                )),
            )
        )

    add(
        VerifyCase(
            "fresnel-half/series", "Fresnel series for zeta(1/2)", 1e-6,
            (lambda: (series.zeta_half_fresnel(_cfg(1e-8)).value,
                      series.zeta_ref(0.5).real)),
        )
    )
    add(
        VerifyCase(
            "derivative/log2pi", "zeta'(0) closed value", 1e-7,
            (lambda: (series.zeta_derivative_series(0.0, 0, _cfg(1e-9)).value,
                      -math.log(2.0 * math.pi) / 2.0)),
        )
    )
    add(
        VerifyCase(
            "derivative/depth-agreement", "depth 0 and 1 derivative routes", 1e-7,
            (lambda: (series.zeta_derivative_series(0.5, 0, _cfg(1e-9)).value,
                      series.zeta_derivative_series(0.5, 1, _cfg(1e-9)).value)),
        )
    )

    add(
        VerifyCase(
            "theta-series/paris-lambda", "free-parameter independence", 1e-11,
            (lambda: (
                series.paris_zeta(2.3, 1.0, _cfg(1e-13)).value,
                series.paris_zeta(2.3, complex(math.cos(math.pi / 4),
                                               math.sin(math.pi / 4)),
                                  _cfg(1e-13)).value,
            )),
        )
    )
    add(
        VerifyCase(
            "theta-series/xi-symmetry", "xi(s) = xi(1-s)", 1e-10,
            (lambda: (series.leclair_xi(0.3, _cfg(1e-12)).value,
                      series.leclair_xi(0.7, _cfg(1e-12)).value)),
        )
    )
    add(
        VerifyCase(
            "theta-series/lattice-constant", "Gaussian lattice sum constant", 1e-13,
            (lambda: (
                series.gaussian_lattice_constant(),
                math.pi ** 0.25 / (2.0 * gamma_complex(0.75).real),
            )),
        )
    )

    for p in range(1, 5):
        for k in range(6):
            add(
                VerifyCase(
                    f"si-pair/p{p}-k{k}",
                    "pair of order 2p against its Si closed form",
                    1e-9,
                    (lambda p=p, k=k: asymptotic.expint_pair_si_identity(k, p)),
                )
            )
    for p, k in ((2, 0), (3, 1)):
        add(
            VerifyCase(
                f"hyp1f2/p{p}-k{k}",
                "contiguous 1F2 reduction",
                1e-9,
                (lambda p=p, k=k: asymptotic.hyp1f2_reduction(k, p)),
            )
        )
    add(
        VerifyCase(
            "digamma-sine/k3", "digamma-weighted series vs Si", 1e-9,
            (lambda: asymptotic.digamma_weighted_sine_series(3)),
        )
    )
    for order in (0, 1, 2):
        bound = -(2 * order + 2.5)
        add(
            VerifyCase(
                f"asymptotic-slope/K{order}",
                f"truncation error decays at least like t^{bound}",
                0.0,
                (lambda order=order, bound=bound: (
                    asymptotic.truncation_error_slope(order),
                    bound,
                    max(0.0, asymptotic.truncation_error_slope(order) - bound),
                )),
            )
        )

    cases.sort(key=lambda c: c.id)
    return cases


# ------------------------------------------------------------------- eval --


def _eval_table():
    def zeta(ns):
        v = series.zeta_ref(_parse_complex(ns.s))
        return v, 1e-14 * max(1.0, abs(v))

    def eta(ns):
        r = series.eta_via_expint_series(_parse_complex(ns.s), _cfg(ns.tol))
        return r.value, r.abs_error_estimate

    def zminus(ns):
        return paths.zeta_minus(_parse_complex(ns.s), ns.tol), ns.tol

    def zplus(ns):
        return paths.zeta_plus(_parse_complex(ns.s), ns.tol), ns.tol

    def expint(ns):
        return expint_e(_parse_complex(ns.s), _parse_complex(ns.z), ns.tol), ns.tol

    def si(ns):
        return sine_integral(float(ns.x)), 1e-14

    def fresnel(ns):
        return fresnel_c(float(ns.x)), 1e-14

    def euler_no(ns):
        return numtheory.euler_number(int(ns.n)), 0.0

    def bern(ns):
        return numtheory.bernoulli(int(ns.n)), 0.0

    def harm(ns):
        return numtheory.harmonic(int(ns.n)), 0.0

    def zeta_odd(ns):
        r = series.zeta_odd_via_exp_tail(int(ns.m), _cfg(ns.tol))
        return r.value, r.abs_error_estimate

    def zeta_even(ns):
        return series.zeta_even_closed_form(int(ns.m)), 1e-15

    def eta_hurwitz(ns):
        return asymptotic.eta_hurwitz_half_exact(float(ns.t)), 1e-12

    def critical(ns):
        sysr = paths.critical_line_system(float(ns.t), ns.tol)
        return sysr.zeta, ns.tol

    return {
        "zeta": (zeta, ("s",)),
        "eta": (eta, ("s",)),
        "zeta-minus": (zminus, ("s",)),
        "zeta-plus": (zplus, ("s",)),
        "expint": (expint, ("s", "z")),
        "si": (si, ("x",)),
        "fresnel-c": (fresnel, ("x",)),
        "euler-number": (euler_no, ("n",)),
        "bernoulli": (bern, ("n",)),
        "harmonic": (harm, ("n",)),
        "zeta-odd": (zeta_odd, ("m",)),
        "zeta-even": (zeta_even, ("m",)),
        "eta-hurwitz": (eta_hurwitz, ("t",)),
        "critical-line": (critical, ("t",)),
    }


def cmd_eval(ns) -> int:
    table = _eval_table()
    if ns.function not in table:
        known = ", ".join(sorted(table))
        print(f"unknown function {ns.function!r}; choose from: {known}",
              file=sys.stderr)
        return 2
    fn, required = table[ns.function]
    for flag in required:
        if getattr(ns, flag, None) is None:
            print(f"eval {ns.function} requires --{flag}", file=sys.stderr)
            return 2
    try:
        value, est = fn(ns)
    except (ValueError, ZetakitError) as exc:
        if isinstance(exc, ValueError) and not isinstance(exc, ZetakitError):
            print(f"parse error: {exc}", file=sys.stderr)
            return 2
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3
    except ArithmeticError as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3
    print(_fmt(value))
    if isinstance(value, Fraction):
        print("abs_error <= 0 (exact)")
    else:
        print(f"abs_error <= {est:.3e}")
    return 0


# ----------------------------------------------------------------- verify --


def _render_report(cfg: RunConfig, records: list[ReportRecord]) -> str:
    passed = sum(1 for r in records if r.passed)
    failed = len(records) - passed
    if cfg.format == "json":
        started = os.environ.get("ZETAKIT_STARTED_AT") or datetime.now(
            timezone.utc
        ).isoformat()
        payload = {
            "schema": 1,
            "started_at": started,
            "config": asdict(cfg),
            "records": [asdict(r) for r in records],
            "summary": {"passed": passed, "failed": failed},
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            ["id", "label", "lhs", "rhs", "abs_diff", "tolerance", "pass", "wall_ms"]
        )
        for r in records:
            w.writerow(
                [r.id, r.label, r.lhs, r.rhs, repr(r.abs_diff),
                 repr(r.tolerance), str(r.passed).lower(), f"{r.wall_ms:.3f}"]
            )
        return buf.getvalue()
    lines = []
    for r in records:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{mark}  {r.id:42s} diff={r.abs_diff:.3e} tol={r.tolerance:.1e}"
        )
        if not r.passed:
            lines.append(f"      lhs={r.lhs} rhs={r.rhs}")
    lines.append(f"{passed} passed, {failed} failed")
    return "\n".join(lines) + "\n"


def cmd_verify(ns) -> int:
    try:
        cfg = RunConfig(
            suite=ns.suite,
            tolerance_override=ns.tol,
            term_cap=_term_cap(),
            parallelism=ns.jobs,
            output_path=ns.out or "",
            format=ns.format,
        )
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    if cfg.tolerance_override is not None and cfg.tolerance_override <= 0:
        print("config error: --tol must be positive", file=sys.stderr)
        return 2

    pattern = cfg.suite
    selected = [
        c
        for c in build_verify_cases()
        if fnmatch(c.id, pattern) or fnmatch(c.id, pattern.rstrip("/") + "/*")
    ]
    if not selected:
        print(f"config error: no cases match suite {pattern!r}", file=sys.stderr)
        return 2

    def run(case: VerifyCase) -> ReportRecord:
        tol = (
            cfg.tolerance_override
            if cfg.tolerance_override is not None
            else case.tolerance
        )
        return _run_case(case, tol)

    if cfg.parallelism == 1:
        records = [run(c) for c in selected]
    else:
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            records = list(pool.map(run, selected))
    records.sort(key=lambda r: r.id)

    text = _render_report(cfg, records)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    passed = sum(1 for r in records if r.passed)
    failed = len(records) - passed
    if cfg.output_path or cfg.format != "human":
        print(f"{passed} passed, {failed} failed")
    return 0 if failed == 0 else 1


# ------------------------------------------------------------------ table --


def _parse_range(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"range must be start:stop:step, got {spec!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0:
        raise ValueError("range step must be positive")
    out = []
    v = start
    while v <= stop + 1e-12:
        out.append(round(v, 12))
        v += step
    return out


def cmd_table(ns) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    try:
        if ns.name == "convergence":
            s = _parse_complex(ns.s)
            depths = [int(x) for x in ns.n.split(",")]
            ref = series.eta_from_zeta_ref(s)
            w.writerow(["depth_n", "terms", "abs_error", "estimate"])
            for depth in depths:
                for terms in (2, 4, 6, 8, 12, 16, 24, 32, 48, 64):
                    cfg = series.SeriesConfig(tolerance=1e-15, term_cap=terms)
                    r = series.eta_via_recursed_series(s, depth, cfg)
                    w.writerow(
                        [depth, r.terms_used, repr(abs(r.value - ref)),
                         repr(r.abs_error_estimate)]
                    )
        elif ns.name == "critical-line":
            w.writerow(
                ["t", "j1", "j2", "j3", "j4", "zeta_minus_re", "zeta_minus_im"]
            )
            for t in _parse_range(ns.t):
                sysr = paths.critical_line_system(t, 1e-9)
                w.writerow(
                    [repr(t), repr(sysr.j1), repr(sysr.j2), repr(sysr.j3),
                     repr(sysr.j4), repr(sysr.zeta_minus_re),
                     repr(sysr.zeta_minus_im)]
                )
        elif ns.name == "asymptotic-truncation":
            tval = float(ns.t)
            ev = asymptotic.eta_hurwitz_half_asymptotic(tval, int(ns.kmax))
            w.writerow(["K", "partial_sum", "abs_error"])
            for k, s_k in enumerate(ev.partial_sums):
                w.writerow([k, repr(s_k), repr(abs(s_k - ev.exact_value))])
        else:
            print(f"unknown table {ns.name!r}", file=sys.stderr)
            return 2
    except (ValueError, ZetakitError) as exc:
        print(f"table error: {exc}", file=sys.stderr)
        return 2
    text = buf.getvalue()
    if ns.out:
        with open(ns.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ------------------------------------------------------------------- main --


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zetakit")
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one exposed function")
    ev.add_argument("function")
    ev.add_argument("--s", help="order / argument, complex 'a+bi'")
    ev.add_argument("--z", help="argument, complex 'a+bi'")
    ev.add_argument("--n", help="integer index")
    ev.add_argument("--m", help="integer index")
    ev.add_argument("--x", help="real argument")
    ev.add_argument("--t", help="real height")
    ev.add_argument("--tol", type=float, default=1e-10)

    vf = sub.add_parser("verify", help="run identity suites")
    vf.add_argument("--suite", required=True, help="glob over case ids")
    vf.add_argument("--tol", type=float, default=None)
    vf.add_argument("--format", choices=("json", "csv", "human"), default="human")
    vf.add_argument("--out", default=None)
    vf.add_argument("--jobs", type=int, default=1)

    tb = sub.add_parser("table", help="emit CSV grids")
    tb.add_argument("name")
    tb.add_argument("--s", default="0.5")
    tb.add_argument("--n", default="0,1,2")
    tb.add_argument("--t", default="4")
    tb.add_argument("--kmax", default="12")
    tb.add_argument("--out", default=None)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    ns = ap.parse_args(argv)
    if ns.command == "eval":
        return cmd_eval(ns)
    if ns.command == "verify":
        return cmd_verify(ns)
    return cmd_table(ns)


if __name__ == "__main__":
    sys.exit(main())

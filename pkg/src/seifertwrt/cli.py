"""Command-line front end: invariant summaries, representation tables,
exact/asymptotic invariant tables, and the verification suites, in text,
CSV, or JSON.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import gmpy2
from gmpy2 import mpc, mpfr

from . import asymptotic, modular, topology, wrt
from .numeric import DEFAULT_PRECISION, workprec
from .periodic import canonical_multiindices
from .seifert import SeifertData, parse_fibers

__all__ = ["RunConfig", "main"]


@dataclass
class RunConfig:
    fibers: Optional[SeifertData] = None
    precision_bits: int = DEFAULT_PRECISION
    tail_order: int = 3
    mode: str = "both"
    rows: List[int] = field(default_factory=list)  # root orders
    output_format: str = "text"
    workers: int = 1
    chunk_size: int = wrt.CHUNK_SIZE
    digits: int = 10


def _fmt_q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_sig(value_str: str, digits: int, precision: int) -> str:
    with workprec(precision):
        return f"{mpfr(value_str):.{digits}g}"


def _render_columns(rows: List[List[str]], header: List[str]) -> str:
    table = [header] + rows
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = []
    for i, r in enumerate(table):
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit_csv(header: List[str], rows: List[List[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def _invariants_payload(cfg: RunConfig) -> Dict:
    rep = topology.invariant_report(cfg.fibers, n_max=cfg.tail_order)
    return {
        "config": {"fibers": list(cfg.fibers.p), "tail_order": cfg.tail_order},
        "D": rep.D,
        "gamma": rep.gamma,
        "lattice_points": rep.lattice_points,
        "phi": _fmt_q(rep.phi),
        "casson": _fmt_q(rep.casson),
        "ohtsuki": [_fmt_q(x) for x in rep.ohtsuki],
    }


def cmd_invariants(cfg: RunConfig) -> str:
    payload = _invariants_payload(cfg)
    if cfg.output_format == "json":
        return json.dumps(payload, indent=2)
    rows = [
        ["D", str(payload["D"])],
        ["gamma", str(payload["gamma"])],
        ["lattice_points", str(payload["lattice_points"])],
        ["phi", payload["phi"]],
        ["casson", payload["casson"]],
    ]
    rows += [[f"lambda_{i}", v] for i, v in enumerate(payload["ohtsuki"])]
    if cfg.output_format == "csv":
        return _emit_csv(["invariant", "value"], rows)
    name = str(cfg.fibers)
    return f"invariants of {name}\n" + _render_columns(rows, ["invariant", "value"])


# ---------------------------------------------------------------------------
# representation tables
# ---------------------------------------------------------------------------


def _reps_payload(cfg: RunConfig) -> Dict:
    interior, missing = topology.rep_table(cfg.fibers)
    return {
        "config": {"fibers": list(cfg.fibers.p)},
        "interior": [
            {
                "l": list(r.l),
                "sum_l_over_p": _fmt_q(r.sum_l_over_p),
                "C": _fmt_q(r.c_value),
                "CS": _fmt_q(r.cs),
            }
            for r in interior
        ],
        "missing": [
            {"l": list(r.l), "sum_l_over_p": _fmt_q(r.sum_l_over_p), "CS": _fmt_q(r.cs)}
            for r in missing
        ],
    }


def cmd_reps(cfg: RunConfig) -> str:
    payload = _reps_payload(cfg)
    if cfg.output_format == "json":
        return json.dumps(payload, indent=2)
    int_rows = [
        ["(" + ",".join(str(x) for x in r["l"]) + ")", r["sum_l_over_p"], r["C"], r["CS"]]
        for r in payload["interior"]
    ]
    mis_rows = [
        ["(" + ",".join(str(x) for x in r["l"]) + ")", r["sum_l_over_p"], r["CS"]]
        for r in payload["missing"]
    ]
    if cfg.output_format == "csv":
        out = [_emit_csv(["section", "l", "sum_l_over_p", "C", "CS"],
                         [["interior"] + r for r in int_rows]
                         + [["missing", r[0], r[1], "", r[2]] for r in mis_rows])]
        return out[0]
    name = str(cfg.fibers)
    parts = [
        f"interior representations of {name}",
        _render_columns(int_rows, ["l", "sum l/p", "C", "CS"]),
        "",
        f"missing representations of {name} (one generator sent to +-identity)",
        _render_columns(mis_rows, ["l", "sum l/p", "CS"]),
    ]
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# wrt table
# ---------------------------------------------------------------------------


def _wrt_payload(cfg: RunConfig) -> Dict:
    s = cfg.fibers
    rows = []
    for N in cfg.rows:
        entry: Dict = {"N": N - 2, "root_order": N}
        with workprec(cfg.precision_bits):
            if cfg.mode in ("exact", "both"):
                val = wrt.tau_exact(
                    s, N, cfg.precision_bits, workers=cfg.workers, chunk_size=cfg.chunk_size
                )
                entry["exact"] = {
                    "re": str(val.z_level.real),
                    "im": str(val.z_level.imag),
                    "err": val.error_bound,
                }
            if cfg.mode in ("asymptotic", "both"):
                z0_val, _ = asymptotic.z0(s, N, cfg.precision_bits)
                z1_val = asymptotic.z1(s, N, cfg.precision_bits)
                lead = N * z0_val
                entry["z0"] = {"re": str(lead.real), "im": str(lead.imag)}
                full = lead + z1_val
                entry["asym"] = {"re": str(full.real), "im": str(full.imag)}
            if cfg.mode == "both":
                ex = mpc(mpfr(entry["exact"]["re"]), mpfr(entry["exact"]["im"]))
                asym = mpc(mpfr(entry["asym"]["re"]), mpfr(entry["asym"]["im"]))
                entry["abs_diff"] = str(abs(ex - asym))
        rows.append(entry)
    return {
        "config": {
            "fibers": list(s.p),
            "precision_bits": cfg.precision_bits,
            "tail_order": cfg.tail_order,
            "mode": cfg.mode,
            "digits": cfg.digits,
        },
        "rows": rows,
    }


def _wrt_text(payload: Dict) -> str:
    cfg = payload["config"]
    digits, prec = cfg["digits"], cfg["precision_bits"]
    mode = cfg["mode"]
    header = ["N"]
    if mode in ("exact", "both"):
        header += ["exact Z_N re", "exact Z_N im"]
    if mode in ("asymptotic", "both"):
        header += ["(N+2)Z0+Z1 re", "(N+2)Z0+Z1 im", "(N+2)Z0 re", "(N+2)Z0 im"]
    if mode == "both":
        header += ["|exact-asym|"]
    rows = []
    for r in payload["rows"]:
        row = [str(r["N"])]
        if mode in ("exact", "both"):
            row += [_fmt_sig(r["exact"]["re"], digits, prec), _fmt_sig(r["exact"]["im"], digits, prec)]
        if mode in ("asymptotic", "both"):
            row += [
                _fmt_sig(r["asym"]["re"], digits, prec),
                _fmt_sig(r["asym"]["im"], digits, prec),
                _fmt_sig(r["z0"]["re"], digits, prec),
                _fmt_sig(r["z0"]["im"], digits, prec),
            ]
        if mode == "both":
            row += [_fmt_sig(r["abs_diff"], 3, prec)]
        rows.append(row)
    name = "Sigma(" + ",".join(str(x) for x in cfg["fibers"]) + ")"
    return f"WRT invariant of {name} (level convention: row N uses root order N+2)\n" + _render_columns(rows, header)


def _wrt_csv(payload: Dict) -> str:
    mode = payload["config"]["mode"]
    header = ["N"]
    if mode in ("exact", "both"):
        header += ["exact_re", "exact_im", "exact_err"]
    if mode in ("asymptotic", "both"):
        header += ["asym_re", "asym_im", "z0_re", "z0_im"]
    rows = []
    for r in payload["rows"]:
        row = [str(r["N"])]
        if mode in ("exact", "both"):
            row += [r["exact"]["re"], r["exact"]["im"], repr(r["exact"]["err"])]
        if mode in ("asymptotic", "both"):
            row += [r["asym"]["re"], r["asym"]["im"], r["z0"]["re"], r["z0"]["im"]]
        rows.append(row)
    return _emit_csv(header, rows)


def cmd_wrt(cfg: RunConfig) -> str:
    if not cfg.rows:
        raise ValueError("no table rows requested; pass --rows or --root-order")
    payload = _wrt_payload(cfg)
    if cfg.output_format == "json":
        return json.dumps(payload, indent=2)
    if cfg.output_format == "csv":
        return _wrt_csv(payload)
    return _wrt_text(payload)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _suite_omega(cfg: RunConfig):
    dev = 0.0
    for N in range(2, 16):
        for k in range(N):
            lhs, rhs = wrt.omega_identity_check(N, k, cfg.precision_bits)
            dev = max(dev, float(abs(lhs - rhs)))
    return dev, 1e-25


def _suite_gauss(cfg: RunConfig):
    rng = random.Random(7)
    dev = 0.0
    done = 0
    while done < 12:
        N = rng.randint(1, 24)
        M = rng.randint(-24, 24)
        if M == 0 or (N * M) % 2:
            continue
        k = Fraction(rng.randint(-12, 12), N)
        lhs, rhs = wrt.gauss_reciprocity_check(N, M, k, cfg.precision_bits)
        dev = max(dev, float(abs(lhs - rhs)))
        done += 1
    return dev, 1e-25


def _suite_theorem3(cfg: RunConfig, manifolds, orders):
    dev = 0.0
    with workprec(cfg.precision_bits):
        for s in manifolds:
            for N in orders:
                lhs = wrt.prefactor(s, N, cfg.precision_bits) * wrt.tau_exact(
                    s, N, cfg.precision_bits, workers=cfg.workers
                ).tau_n
                rhs = wrt.wrt_via_eichler(s, N, cfg.precision_bits)
                dev = max(dev, float(abs(lhs - rhs)))
    return dev, 1e-20


def _suite_tseries(cfg: RunConfig, manifolds):
    for s in manifolds:
        sinh_route = asymptotic.t_series_via_sinh(s, 5)
        for k in range(6):
            a = asymptotic.t_series(s, k)
            if a != asymptotic.t_series_via_l(s, k) or a != sinh_route[k]:
                return 1.0, 0.0
    return 0.0, 0.0


def _suite_conjecture(cfg: RunConfig, tuples):
    for p in tuples:
        if not topology.conjecture_check(p).holds:
            return 1.0, 0.0
    return 0.0, 0.0


def _suite_modular(cfg: RunConfig, s: SeifertData):
    prec = max(cfg.precision_bits, 128)
    dev = 0.0
    with workprec(prec):
        reps = canonical_multiindices(s)
        S = modular.s_matrix(s, prec)
        D = len(reps)
        for i in range(D):
            for j in range(D):
                v = sum(S[i][k] * S[k][j] for k in range(D))
                dev = max(dev, float(abs(v - (1 if i == j else 0))))
        for tau in (mpc(0, 1), mpc(mpfr(1) / 3, 1)):
            l = reps[-1]
            lhs = modular.phi_qseries(s, l, tau, prec)
            rhs = gmpy2.sqrt(mpc(0, 1) / tau) * sum(
                S[reps.index(l)][k] * modular.phi_qseries(s, reps[k], -1 / tau, prec)
                for k in range(D)
            )
            dev = max(dev, float(abs(lhs - rhs)))
            lhs = modular.phi_qseries(s, l, tau + 1, prec)
            rhs = modular.t_phase(s, l).value(prec) * modular.phi_qseries(s, l, tau, prec)
            dev = max(dev, float(abs(lhs - rhs)))
    return dev, 1e-15


def _suite_dedekind(cfg: RunConfig):
    from .exactmath import dedekind_sum
    from math import gcd as _gcd

    for a in range(1, 51):
        for b in range(1, 51):
            if _gcd(a, b) != 1:
                continue
            lhs = dedekind_sum(b, a) + dedekind_sum(a, b)
            rhs = Fraction(-1, 4) + (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)) / 12
            if lhs != rhs:
                return 1.0, 0.0
    return 0.0, 0.0


def cmd_verify(cfg: RunConfig, suite: str, m_fibers: Optional[int], root_order: Optional[int]) -> int:
    defaults = [parse_fibers("2,3,5,7"), parse_fibers("3,4,5,7")]
    manifolds = [cfg.fibers] if cfg.fibers is not None else defaults
    orders = [root_order] if root_order else [3, 4, 5]
    conj_tuples: List[Sequence[int]] = [(2, 3), (3, 5), (2, 3, 5), (2, 3, 7), (2, 3, 5, 7)]
    if cfg.fibers is not None:
        conj_tuples = [cfg.fibers.p]
    suites = {
        "omega": lambda: _suite_omega(cfg),
        "gauss": lambda: _suite_gauss(cfg),
        "theorem3": lambda: _suite_theorem3(cfg, [m for m in manifolds if m.fiber_count == 4], orders),
        "tseries": lambda: _suite_tseries(cfg, [m for m in manifolds if m.fiber_count == 4]),
        "conjecture": lambda: _suite_conjecture(cfg, conj_tuples),
        "modular": lambda: _suite_modular(cfg, next(m for m in manifolds if m.fiber_count == 4)),
        "dedekind": lambda: _suite_dedekind(cfg),
    }
    names = list(suites) if suite == "all" else [suite]
    failures = 0
    for name in names:
        dev, tol = suites[name]()
        ok = dev <= tol
        failures += not ok
        status = "PASS" if ok else "FAIL"
        print(f"{name:<12} {status}  max deviation {dev:.3e} (tolerance {tol:.0e})")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _parse_rows(spec: str) -> List[int]:
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ".." in tok:
            a, b = tok.split("..")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(tok))
    return out


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="seifertwrt",
        description="Quantum invariants of Seifert homology spheres: exact "
        "root-of-unity values, their exact large-level expansion, and the "
        "rational topological invariants attached to both.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fibers_required=True):
        if fibers_required:
            p.add_argument("fibers", help="comma-separated fiber exponents, e.g. 2,3,5,7")
        p.add_argument("--format", dest="output_format", choices=("text", "csv", "json"),
                       default="text")
        p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                       help="working precision in bits (default 128)")

    p_inv = sub.add_parser("invariants", help="scalar invariants: D, gamma, lattice count, phi, Casson, lambda_n")
    common(p_inv)
    p_inv.add_argument("--tail", type=int, default=3, help="highest lambda_n to print")

    p_reps = sub.add_parser("reps", help="representation tables (interior and missing)")
    common(p_reps)

    p_wrt = sub.add_parser("wrt", help="exact and asymptotic invariant table rows")
    common(p_wrt)
    p_wrt.add_argument("--rows", help="level rows, e.g. 10..14 or 10,12 (root order = N+2)")
    p_wrt.add_argument("--root-order", dest="root_order", help="rows by root order instead of level")
    p_wrt.add_argument("--mode", choices=("exact", "asymptotic", "both"), default="both")
    p_wrt.add_argument("--tail", type=int, default=3, help="tail truncation order K")
    p_wrt.add_argument("--chunks", type=int, default=1,
                       help="worker processes for the root-of-unity summation")
    p_wrt.add_argument("--digits", type=int, default=10, help="significant digits in text output")

    p_ver = sub.add_parser("verify", help="run the identity/oracle suites")
    p_ver.add_argument("--suite", default="all",
                       choices=("all", "omega", "gauss", "theorem3", "tseries",
                                "conjecture", "modular", "dedekind"))
    p_ver.add_argument("--fibers", default=None, help="restrict to one fiber tuple")
    p_ver.add_argument("--m", type=int, default=None, help="fiber count hint for conjecture runs")
    p_ver.add_argument("--root-order", dest="root_order", type=int, default=None)
    p_ver.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_ver.add_argument("--chunks", type=int, default=1)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(
                fibers=parse_fibers(args.fibers) if args.fibers else None,
                precision_bits=args.precision,
                workers=args.chunks,
            )
            return cmd_verify(cfg, args.suite, args.m, args.root_order)
        cfg = RunConfig(
            fibers=parse_fibers(args.fibers),
            precision_bits=args.precision,
            output_format=args.output_format,
        )
        if args.command == "invariants":
            cfg.tail_order = args.tail
            print(cmd_invariants(cfg))
            return 0
        if args.command == "reps":
            print(cmd_reps(cfg))
            return 0
        if args.command == "wrt":
            cfg.tail_order = args.tail
            cfg.mode = args.mode
            cfg.workers = args.chunks
            cfg.digits = args.digits
            rows: List[int] = []
            if args.rows:
                rows += [n + 2 for n in _parse_rows(args.rows)]
            if args.root_order:
                rows += _parse_rows(args.root_order)
            cfg.rows = rows
            print(cmd_wrt(cfg))
            return 0
        raise AssertionError(f"unhandled command {args.command}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``sep3q <command> ...``.

Exit codes: 0 for a negative or inconclusive result, 1 when entanglement is
detected, 2 on any error.
"""

import argparse
import csv
import json
import logging
import sys
import time

import numpy as np

from . import library
from .diagnostics import ppt_report
from .errors import ParseError, Sep3qError, UnknownState
from .mixed import SearchConfig, c_mixed
from .pure import Verdict, is_fully_separable_pure, minor_residuals
from .statefile import dump_state, dumps_state, load_state
from .states import DensityMatrix, PureState, density_from_pure

log = logging.getLogger("sep3q")

EXIT_NEGATIVE, EXIT_DETECTED, EXIT_ERROR = 0, 1, 2

REFERENCE_VALUES = {"shifts": 0.1469, "dct": 0.3747}
REFERENCE_DCT = (1 / 3, 0.0, 1 / 6, 1 / 6, 0.0)
CSV_HEADER = ["a", "b", "c", "d", "e", "certificate", "ppt_A", "ppt_B", "ppt_C", "seconds"]


def _g10(x):
    return float(f"{x:.10g}")


def _pairs(arr):
    return [[_g10(v.real), _g10(v.imag)] for v in np.asarray(arr).ravel()]


def _search_config(args):
    return SearchConfig(
        samples=args.samples,
        seed=args.seed,
        z_mode=args.z_mode,
        refine_iters=args.refine,
        operator_variant=args.operators,
    )


def pure_report(psi, source, tol):
    t0 = time.perf_counter()
    verdict, cvec = is_fully_separable_pure(psi, tol)
    res = minor_residuals(psi)
    return {
        "input": source,
        "mode": "pure",
        "certificate": _g10(cvec.norm),
        "verdict": verdict.value,
        "c_vector": _pairs(cvec.components),
        "minor_residuals": [_g10(r) for r in res],
        "wall_time": time.perf_counter() - t0,
        "config": {"tol_sep": tol, "operator_variant": "full"},
    }


def mixed_report(rho, source, cfg, with_ppt):
    t0 = time.perf_counter()
    result = c_mixed(rho, cfg)
    report = {
        "input": source,
        "mode": "mixed",
        "certificate": _g10(result.certificate),
        "verdict": result.verdict.value,
        "best_score": _g10(result.best_score),
        "best_z": _pairs(result.best_z),
        "search": {
            "samples_evaluated": result.samples_evaluated,
            "sampled_score": _g10(result.sampled_score),
            "refinement_gain": _g10(result.refinement_gain),
            "rank": result.rank,
        },
        "config": {
            "seed": cfg.seed,
            "samples": cfg.samples,
            "z_mode": cfg.z_mode.value,
            "refine_iters": cfg.refine_iters,
            "operator_variant": cfg.operator_variant.value,
            "rank_tol": cfg.rank_tol,
            "verdict_tol": result.verdict_tol,
        },
    }
    if with_ppt:
        ppt = ppt_report(rho)
        report["ppt"] = {
            s: {"min_eigenvalue": _g10(v), "ppt": ppt.flags[s]} for s, v in ppt.min_eigenvalues.items()
        }
    report["wall_time"] = time.perf_counter() - t0
    return report


def _print_report(report, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump(report, out, indent=2)
        out.write("\n")
        return
    lines = [f"input:       {report['input']}", f"verdict:     {report['verdict']}"]
    if report["mode"] == "pure":
        lines.append(f"|C(psi)|:    {report['certificate']:.4g}")
        comps = ", ".join(f"{complex(*p):.4g}" for p in report["c_vector"])
        lines.append(f"C-vector:    [{comps}]")
        lines.append("residuals:   " + ", ".join(f"{r:.4g}" for r in report["minor_residuals"]))
    else:
        lines.append(f"C(rho):      {report['certificate']:.4f}")
        s = report["search"]
        lines.append(
            f"search:      rank {s['rank']}, {s['samples_evaluated']} candidates, "
            f"sampled {s['sampled_score']:.4f}, refine gain {s['refinement_gain']:.4f}"
        )
        if "reference_value" in report:
            lines.append(f"reference:   {report['reference_value']:.4f}")
        if "ppt" in report:
            ppt = report["ppt"]
            lines.append(
                "PPT:         "
                + ", ".join(f"{k}: {'yes' if v['ppt'] else 'no'} ({v['min_eigenvalue']:.4g})" for k, v in ppt.items())
            )
        c = report["config"]
        lines.append(
            f"config:      seed {c['seed']}, samples {c['samples']}, z-mode {c['z_mode']}, "
            f"refine {c['refine_iters']}, operators {c['operator_variant']}"
        )
    lines.append(f"time:        {report['wall_time']:.2f} s")
    out.write("\n".join(lines) + "\n")


def _mixed_exit(report):
    return EXIT_DETECTED if report["verdict"] == Verdict.ENTANGLED.value else EXIT_NEGATIVE


def cmd_pure_check(args):
    state = load_state(args.file)
    if not isinstance(state, PureState):
        raise ParseError('pure-check needs a state file with kind "pure"')
    report = pure_report(state, args.file, args.tol)
    _print_report(report, args.format)
    return EXIT_DETECTED if report["verdict"] == Verdict.ENTANGLED.value else EXIT_NEGATIVE


def cmd_mixed_check(args):
    state = load_state(args.file)
    if isinstance(state, PureState):
        state = density_from_pure(state)
    report = mixed_report(state, args.file, _search_config(args), args.ppt)
    _print_report(report, args.format)
    return _mixed_exit(report)


def _dct_from_args(args):
    return library.DCTParams(args.a, args.b, args.c, args.d, args.e)


def cmd_demo(args):
    if args.which == "shifts":
        rho = library.shifts_complement()
        ref = REFERENCE_VALUES["shifts"]
        source = "SHIFTS UPB complement"
    else:
        p = _dct_from_args(args)
        rho = library.dct_state(p)
        source = f"DCT(a={p.a:.6g}, b={p.b:.6g}, c={p.c:.6g}, d={p.d:.6g}, e={p.e:.6g})"
        close = np.allclose((p.a, p.b, p.c, p.d, p.e), REFERENCE_DCT, atol=1e-6)
        ref = REFERENCE_VALUES["dct"] if close else None
    report = mixed_report(rho, source, _search_config(args), args.ppt)
    if ref is not None:
        report["reference_value"] = ref
    _print_report(report, args.format)
    return _mixed_exit(report)


def _complex_list(text):
    try:
        return [complex(x.strip().replace(" ", "")) for x in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"cannot parse qubit factor {text!r}: {exc}") from exc


GEN_STATES = (
    "ghz",
    "w",
    "product",
    "shifts-complement",
    "dct",
    "maximally-mixed",
    "random-pure",
    "random-product",
    "random-separable",
    "random-density",
)


def build_named_state(args):
    name = args.name
    if name == "ghz":
        return library.ghz()
    if name == "w":
        return library.w()
    if name == "product":
        factors = args.factor or ["1,0", "1,0", "1,0"]
        if len(factors) != 3:
            raise ParseError("product needs exactly three --factor values")
        return library.product(*(_complex_list(f) for f in factors))
    if name == "shifts-complement":
        return library.shifts_complement()
    if name == "dct":
        return library.dct_state(_dct_from_args(args))
    if name == "maximally-mixed":
        return library.maximally_mixed()
    if name == "random-pure":
        return library.random_pure(args.seed)
    if name == "random-product":
        return library.random_product_pure(args.seed)
    if name == "random-separable":
        return library.random_separable_mixed(args.seed, args.k)
    if name == "random-density":
        return library.random_density(args.seed)
    raise UnknownState(f"unknown state {name!r}; choose from {', '.join(GEN_STATES)}")


def cmd_gen(args):
    state = build_named_state(args)
    if args.out:
        try:
            dump_state(state, args.out)
        except OSError as exc:
            raise Sep3qError(f"cannot write {args.out}: {exc}") from exc
    else:
        sys.stdout.write(dumps_state(state) + "\n")
    return EXIT_NEGATIVE


def parse_grid(text):
    """``start:stop:num`` (inclusive linspace) or a comma-separated list."""
    try:
        if ":" in text:
            start, stop, num = text.split(":")
            return list(np.linspace(float(start), float(stop), int(num)))
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"bad grid {text!r}: {exc}") from exc


def dct_grid(a_values, b, c, d, e):
    """Complete each ``a`` to a DCT parameter tuple.

    ``b``, ``c``, ``d``, ``e`` are numbers or ``"auto"``. Auto entries among
    ``c, d, e`` share the remaining trace equally; an auto ``b`` takes the
    remainder when ``c, d, e`` are all fixed. Invalid points are skipped
    with a warning.
    """
    fixed = {k: (None if v == "auto" else float(v)) for k, v in zip("bcde", (b, c, d, e))}
    auto_cde = [k for k in "cde" if fixed[k] is None]
    if fixed["b"] is None and auto_cde:
        raise ParseError("b may only be auto when c, d and e are fixed")
    points = []
    for a in a_values:
        vals = dict(fixed, a=float(a))
        if vals["b"] is None:
            vals["b"] = 1 - vals["a"] - 2 * (vals["c"] + vals["d"] + vals["e"])
        elif auto_cde:
            rest = 1 - vals["a"] - vals["b"] - 2 * sum(vals[k] for k in "cde" if k not in auto_cde)
            for k in auto_cde:
                vals[k] = rest / (2 * len(auto_cde))
        try:
            points.append(library.DCTParams(vals["a"], vals["b"], vals["c"], vals["d"], vals["e"]))
        except Sep3qError as exc:
            log.warning("skipping a=%g: %s", a, exc)
    return points


def cmd_scan_dct(args):
    points = dct_grid(parse_grid(args.a_grid), args.b, args.c, args.d, args.e)
    if not points:
        log.warning("no valid grid points; writing header only")
    cfg = _search_config(args)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER)
        for p in points:
            t0 = time.perf_counter()
            rho = library.dct_state(p)
            cert = c_mixed(rho, cfg).certificate
            flags = ppt_report(rho).flags
            writer.writerow(
                [f"{v:.10g}" for v in (p.a, p.b, p.c, p.d, p.e, cert)]
                + [int(flags[s]) for s in "ABC"]
                + [f"{time.perf_counter() - t0:.4f}"]
            )
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_NEGATIVE


def _add_search_flags(p):
    p.add_argument("--samples", type=int, default=100_000, help="random z vectors (default 100000)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--z-mode", choices=["complex", "real"], default="complex")
    p.add_argument("--refine", type=int, default=200, help="local ascent iterations; 0 = pure sampling")
    p.add_argument("--operators", choices=["full", "reduced"], default="full")


def _add_dct_flags(p, auto=False):
    p.add_argument("--b", default="0" if auto else 0.0, type=str if auto else float)
    for name in "cd":
        p.add_argument(f"--{name}", default="auto" if auto else 1 / 6, type=str if auto else float)
    p.add_argument("--e", default="0" if auto else 0.0, type=str if auto else float)


def build_parser():
    parser = argparse.ArgumentParser(prog="sep3q", description="Full-separability tests for three-qubit states.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pure-check", help="exact separability test for a pure state file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_pure_check)

    p = sub.add_parser("mixed-check", help="entanglement certificate for a state file")
    p.add_argument("file")
    _add_search_flags(p)
    p.add_argument("--ppt", action="store_true", help="also report partial-transpose spectra")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_mixed_check)

    p = sub.add_parser("demo", help="run the bound-entanglement examples")
    p.add_argument("which", choices=["shifts", "dct"])
    p.add_argument("--a", type=float, default=1 / 3)
    _add_dct_flags(p)
    _add_search_flags(p)
    p.add_argument("--ppt", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("gen", help="write a library state to a JSON state file")
    p.add_argument("name", help=" | ".join(GEN_STATES))
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=4, help="mixture size for random-separable")
    p.add_argument("--factor", action="append", help="qubit factor as 'x,y' complex literals; give three")
    p.add_argument("--a", type=float, default=1 / 3)
    _add_dct_flags(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("scan-dct", help="certificate and PPT flags over a DCT parameter grid")
    p.add_argument("--a", dest="a_grid", default="0:1:11", help="start:stop:num or comma list")
    _add_dct_flags(p, auto=True)
    _add_search_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan_dct)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s", force=True)
    try:
        return args.func(args)
    except (Sep3qError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

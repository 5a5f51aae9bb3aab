"""Command-line front end.

Subcommands: ``verify`` (run property suites, exit 0 iff all pass),
``uncertainty``, ``classify``, ``rep``, ``shift``, ``kernel``.  Exit codes:
0 pass, 1 violated property, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import reporting
from .operators import FirstOrderOp, classify_symmetric, to_rep
from .quadrature import KernelPoint
from .uncertainty import soltani_up
from .verification import RunConfig, SUITES, run_suites
from .weights import CoeffVector, WeightParam
from .weightshift import ShiftOp, frame_constants, kernel_shift_residual


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--xi", type=float, default=0.0, help="weight parameter (> -1)")
    p.add_argument("--trunc", type=int, default=24, help="working truncation degree")
    p.add_argument("--quad-r", type=int, default=64, help="radial quadrature points")
    p.add_argument("--quad-m", type=int, default=256, help="angular quadrature points")
    p.add_argument("--seed", type=int, default=20240901)
    p.add_argument("--tol-exact", type=float, default=1e-10)
    p.add_argument("--tol-quad", type=float, default=1e-6)
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument(
        "--config",
        default=None,
        help="optional key=value file overriding the flag defaults",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergman11")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification suites")
    _add_common(p)
    p.add_argument("--suite", action="append", choices=sorted(SUITES), default=None)

    p = sub.add_parser("uncertainty", help="evaluate the uncertainty inequality")
    p.add_argument("f_file", help="JSON coefficient file ([re,im] pairs)")
    p.add_argument("--w", type=float, default=0.0)
    p.add_argument("--y", type=float, default=0.0)
    p.add_argument("--xi", type=float, default=0.0)

    p = sub.add_parser("classify", help="classify a first-order operator")
    p.add_argument("op_file", help='JSON {"f": [...], "g": [...]}')
    p.add_argument("--xi", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("rep", help="decompose (c z^2 + a z + conj(c)) d/dz + ((xi+2) c z + b)")
    p.add_argument("abc_file", help='JSON {"a": real, "b": real, "c": [re, im] or real}')
    p.add_argument("--xi", type=float, default=0.0)

    p = sub.add_parser("shift", help="frame constants of z d/dz + c")
    p.add_argument("c_re", type=float)
    p.add_argument("xi", type=float)
    p.add_argument("k_range", type=int)
    p.add_argument("--c-im", type=float, default=0.0)

    p = sub.add_parser("kernel", help="step-one kernel shift residual")
    p.add_argument("--alpha", type=float, default=None, help="default: the derived 1/(xi+2)")
    p.add_argument("--w", type=float, default=0.4)
    p.add_argument("--xi", type=float, default=0.0)
    p.add_argument("--trunc", type=int, default=60)
    return parser


def _load_config_file(path: str) -> dict:
    overrides = {}
    casts = {
        "xi": float,
        "trunc": int,
        "quad_r": int,
        "quad_m": int,
        "seed": int,
        "tol_exact": float,
        "tol_quad": float,
        "fmt": str,
        "out": str,
    }
    with open(path) as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{line_no}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in casts:
                raise UsageError(f"{path}:{line_no}: unknown config key {key!r}")
            overrides[key] = casts[key](value.strip())
    return overrides


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _read_json_file(path: str):
    try:
        with open(path) as fh:
            raw = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON at byte {e.pos}: {e.msg}")


def _coeff_vector(data) -> CoeffVector:
    try:
        return CoeffVector.from_json(json.dumps(data))
    except (ValueError, TypeError) as e:
        raise UsageError(f"bad coefficient data: {e}")


def _complex_field(value) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, list) and len(value) == 2:
        return complex(value[0], value[1])
    raise UsageError(f"expected number or [re, im] pair, got {value!r}")


def cmd_verify(args) -> int:
    cfg = RunConfig(
        xi=args.xi,
        trunc=args.trunc,
        quad_r=args.quad_r,
        quad_m=args.quad_m,
        seed=args.seed,
        tol_exact=args.tol_exact,
        tol_quad=args.tol_quad,
        fmt=args.fmt,
        out=args.out,
    )
    if args.config:
        cfg = replace(cfg, **_load_config_file(args.config))
    try:
        report = run_suites(cfg, args.suite)
    except ValueError as e:
        raise UsageError(str(e))
    if cfg.fmt == "json":
        _emit(reporting.dumps(report), cfg.out)
    else:
        lines = ["suite,check,passed,margin,tolerance"]
        for suite_name, checks in report["suites"].items():
            for c in checks:
                lines.append(
                    reporting.csv_row(
                        [suite_name, c["name"], int(c["passed"]), c["margin"], c["tolerance"]]
                    )
                )
        _emit("\n".join(lines), cfg.out)
    return 0 if report["passed"] else 1


def cmd_uncertainty(args) -> int:
    f = _coeff_vector(_read_json_file(args.f_file))
    r = soltani_up(f, args.w, args.y, WeightParam(args.xi))
    print(reporting.dumps({"lhs": r.lhs, "rhs": r.rhs, "slack": r.slack, "inputs": r.inputs}))
    return 0


def cmd_classify(args) -> int:
    data = _read_json_file(args.op_file)
    if not isinstance(data, dict) or "f" not in data or "g" not in data:
        raise UsageError(f'{args.op_file}: expected {{"f": [...], "g": [...]}}')
    op = FirstOrderOp(_coeff_vector(data["f"]), _coeff_vector(data["g"]))
    print(classify_symmetric(op, WeightParam(args.xi), args.tol).to_json())
    return 0


def cmd_rep(args) -> int:
    data = _read_json_file(args.abc_file)
    if not isinstance(data, dict) or not {"a", "b", "c"} <= set(data):
        raise UsageError(f'{args.abc_file}: expected {{"a": .., "b": .., "c": ..}}')
    dec = to_rep(float(data["a"]), float(data["b"]), _complex_field(data["c"]), WeightParam(args.xi))
    print(dec.to_json())
    return 0


def cmd_shift(args) -> int:
    op = ShiftOp(complex(args.c_re, args.c_im))
    fc = frame_constants(op, WeightParam(args.xi), args.k_range)
    print("xi,c_re,c_im,k_range,m,M")
    print(reporting.csv_row([args.xi, args.c_re, args.c_im, fc.k_range, fc.m, fc.M]))
    return 0


def cmd_kernel(args) -> int:
    wp = WeightParam(args.xi)
    w = KernelPoint(args.w)
    derived = 1.0 / (wp.xi + 2.0)
    printed = 2.0 / (wp.xi + 2.0)
    result = {
        "derived_alpha": derived,
        "derived_residual": kernel_shift_residual(derived, w, wp, args.trunc),
        "printed_alpha": printed,
        "printed_residual": kernel_shift_residual(printed, w, wp, args.trunc),
    }
    if args.alpha is not None:
        result["alpha"] = args.alpha
        result["residual"] = kernel_shift_residual(args.alpha, w, wp, args.trunc)
    print(reporting.dumps(result))
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "uncertainty": cmd_uncertainty,
    "classify": cmd_classify,
    "rep": cmd_rep,
    "shift": cmd_shift,
    "kernel": cmd_kernel,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

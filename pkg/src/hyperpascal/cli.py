"""Command-line front end: coefficient queries, layer/region exports, and
theorem verification with machine-readable reports.

Exit codes: 0 success (or verification Pass), 1 numeric Fail, Inconclusive
or NotConverging, 2 usage or resource errors.  Reports go to stdout as
JSON (CSV for tabular exports), diagnostics to stderr.  Output is
deterministic: fixed ordering and fixed float formatting.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys

from .bilateral import (
    CONVERGED,
    PASS,
    make_verification_report,
    verify_bilateral_binomial,
    VerificationReport,
)
from .expansion import (
    ModulusChainError,
    TheoremInstance,
    evaluate_multinomial,
    modulus_chain_residuals,
    nested_reduction_report,
    symmetric_form,
    unit_sum_probe,
)
from .gammakernel import DivergentTermError, principal_power
from .lattice import (
    ResourceLimitError,
    classify_region,
    generate_layer,
    point_value,
    region_map,
)

def _parse_complex(text: str) -> complex:
    """Parse 'a+bi' literals (also plain reals and 'i' shorthand)."""
    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise argparse.ArgumentTypeError("empty complex literal")
    normalized = cleaned.replace("i", "j")
    if normalized in ("j", "+j"):
        normalized = "1j"
    elif normalized == "-j":
        normalized = "-1j"
    try:
        return complex(normalized)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex literal {text!r}") from exc


def _dump(obj, out_path=None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_text(text: str, out_path=None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _chain_variables(thetas):
    """Modulus-chain-compliant variables from free phases."""
    variables = []
    partial = complex(0.0)
    for theta in thetas:
        radius = abs(1.0 + partial)
        x = radius * cmath.exp(1j * theta)
        variables.append(x)
        partial += x
    return tuple(variables)


def _report_exit(report: VerificationReport) -> int:
    _dump(report.to_json_obj())
    return 0 if report.verdict == PASS else 1


def cmd_coeff(args) -> int:
    if len(args.coords) < 2:
        raise SystemExit(2)
    value = point_value(args.coords)
    tag = classify_region(args.coords)
    obj = {"coords": list(args.coords)}
    obj.update(value.to_json_obj())
    obj["region"] = tag.to_json_obj()
    _dump(obj)
    return 0


def cmd_layer(args) -> int:
    table = generate_layer(args.dim, args.n)
    if args.format == "csv":
        _write_text(table.to_csv(), args.out)
    else:
        _dump(table.to_records(), args.out)
    return 0


def cmd_region_map(args) -> int:
    tagged, components = region_map(args.dim, args.window)
    if args.format == "csv":
        header = ",".join([f"x{i + 1}" for i in range(args.dim)] + ["tag", "axis"])
        lines = [f"# component_count={components}", header]
        for coords, tag in tagged:
            axis = "" if tag.axis is None else str(tag.axis)
            lines.append(",".join([str(c) for c in coords] + [tag.kind, axis]))
        _write_text("\n".join(lines) + "\n", args.out)
    else:
        obj = {
            "dim": args.dim,
            "window": args.window,
            "component_count": components,
            "points": [
                {"coords": list(coords), **tag.to_json_obj()} for coords, tag in tagged
            ],
        }
        _dump(obj, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.kind == "binomial":
        if args.x is None or args.y is None or args.z is None:
            raise SystemExit(2)
        report = verify_bilateral_binomial(
            args.x, args.y, args.z, tolerance=args.tol, window=args.window
        )
        return _report_exit(report)

    if args.kind == "trinomial":
        thetas = _collect_thetas(args, expected=2)
        x1, x2 = _chain_variables(thetas)
        anchors = tuple(args.anchors) if args.anchors else (0.5, 0.5)
        inst = TheoremInstance(args.n, (x1, x2), anchors)
        lhs = principal_power(1.0 + x1 + x2, args.n)
        value, outer = nested_reduction_report(inst, args.window)
        return _report_exit(make_verification_report(lhs, value, args.tol, outer.verdict))

    if args.kind == "multinomial":
        thetas = _collect_thetas(args, expected=None)
        variables = _chain_variables(thetas)
        anchors = tuple(args.anchors) if args.anchors else (0.5,) * len(variables)
        inst = TheoremInstance(args.n, variables, anchors)
        lhs = principal_power(1.0 + sum(variables), args.n)
        report = evaluate_multinomial(inst, args.window or 12, tolerance=args.tol)
        return _report_exit(make_verification_report(lhs, report.value, args.tol, report.verdict))

    if args.kind == "symmetric":
        if not args.vars:
            raise SystemExit(2)
        variables = tuple(args.vars)
        anchors = tuple(args.anchors) if args.anchors else (0.0,) * len(variables)
        lhs = principal_power(sum(variables), args.n)
        report = symmetric_form(args.n, variables, anchors, args.window or 12, tolerance=args.tol)
        return _report_exit(make_verification_report(lhs, report.value, args.tol, report.verdict))

    raise SystemExit(2)


def _collect_thetas(args, expected):
    thetas = []
    if args.theta1 is not None:
        thetas.append(args.theta1)
    if args.theta2 is not None:
        thetas.append(args.theta2)
    if args.theta3 is not None:
        thetas.append(args.theta3)
    if args.thetas:
        thetas.extend(args.thetas)
    if not thetas or (expected is not None and len(thetas) != expected):
        raise SystemExit(2)
    return thetas


def cmd_probe(args) -> int:
    report = unit_sum_probe(args.n, args.dim, args.anchors, args.schedule)
    _dump(report.to_json_obj())
    return 0 if report.verdict == CONVERGED else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperpascal",
        description=(
            "Regularized multinomial coefficients on the signed lattice and "
            "bilateral theorem verification"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeff = sub.add_parser("coeff", help="regularized coefficient at a lattice point")
    p_coeff.add_argument("coords", type=float, nargs="+", help="point coordinates (>= 2)")
    p_coeff.set_defaults(func=cmd_coeff)

    p_layer = sub.add_parser("layer", help="export one pyramid layer")
    p_layer.add_argument("--dim", type=int, required=True)
    p_layer.add_argument("--n", type=int, required=True)
    p_layer.add_argument("--format", choices=("json", "csv"), default="json")
    p_layer.add_argument("--out", default=None)
    p_layer.set_defaults(func=cmd_layer)

    p_region = sub.add_parser("region-map", help="region tags over a window")
    p_region.add_argument("--dim", type=int, required=True)
    p_region.add_argument("--window", type=int, required=True)
    p_region.add_argument("--format", choices=("json", "csv"), default="json")
    p_region.add_argument("--out", default=None)
    p_region.set_defaults(func=cmd_region_map)

    p_verify = sub.add_parser("verify", help="verify a bilateral theorem instance")
    p_verify.add_argument("kind", choices=("binomial", "trinomial", "multinomial", "symmetric"))
    p_verify.add_argument("--x", type=float, default=None, help="binomial exponent")
    p_verify.add_argument("--y", type=float, default=None, help="binomial anchor")
    p_verify.add_argument("--z", type=_parse_complex, default=None, help="complex a+bi literal")
    p_verify.add_argument("--n", type=float, default=None, help="expansion exponent")
    p_verify.add_argument("--theta1", type=float, default=None)
    p_verify.add_argument("--theta2", type=float, default=None)
    p_verify.add_argument("--theta3", type=float, default=None)
    p_verify.add_argument("--thetas", type=float, nargs="+", default=None)
    p_verify.add_argument("--vars", type=_parse_complex, nargs="+", default=None)
    p_verify.add_argument("--anchors", type=float, nargs="+", default=None)
    p_verify.add_argument("--tol", type=float, default=1e-6)
    p_verify.add_argument("--window", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_probe = sub.add_parser("probe", help="partial-sum probe of the all-ones sum")
    p_probe.add_argument("--n", type=float, required=True)
    p_probe.add_argument("--dim", type=int, required=True)
    p_probe.add_argument("--anchors", type=float, nargs="+", required=True)
    p_probe.add_argument(
        "--schedule", type=int, nargs="+", default=(64, 128, 256, 512)
    )
    p_probe.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ModulusChainError as exc:
        # the chain condition is a convergence prerequisite: inconclusive run
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 1
    except (ResourceLimitError, DivergentTermError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

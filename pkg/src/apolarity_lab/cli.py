"""Command line front end.

Exit codes: 0 on success, 1 when a verification check fails (verify suite
mismatch, sweep bound violation, quotient outside bounds), 2 on usage or
validation errors (bad flags, unparseable files, domain errors).

Global flags (--prime, --seed, --format, --out, -v) are accepted both before
and after the subcommand. Seed precedence: --seed, then the APOLAB_SEED
environment variable, then 0.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass

from .bounds import bounds_report, check_within
from .constructions import (
    PowerSumSpec,
    Remark5Params,
    compressed_hvector,
    expected_remark5_h,
    power_sum_presentation,
    remark5_family,
    remark5_upper_sharp,
    remark6_pair,
)
from .errors import ApolarityError, InvalidParameter, ParseError
from .field import DEFAULT_PRIME, PrimeField, SeededRng
from .hvector import HVector
from .inverse_system import generic_quotient, hvector, truncation
from .serialization import dump_presentation, load_presentation, save_presentation
from .sweep import SweepConfig, run_sweep, write_records
from .verify import run_suite

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0


@dataclass(frozen=True)
class RunConfig:
    """Resolved global options for one invocation."""

    prime: int
    prime_explicit: bool
    seed: int
    output_format: str
    verbosity: int
    out: str | None


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _parse_int_list(text: str, what: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"{what} must be a comma-separated integer list, got {text!r}")


def _parse_range(text: str) -> tuple:
    """'2:5' -> (2, 5); '3' -> (3, 3). Reversed ranges are allowed and empty."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            value = int(parts[0])
            return (value, value)
        if len(parts) == 2:
            return (int(parts[0]), int(parts[1]))
    except ValueError:
        pass
    raise ParseError(f"range must look like LO:HI or a single integer, got {text!r}")


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--prime", type=int, default=default, metavar="P",
        help=f"prime modulus for all arithmetic (default {DEFAULT_PRIME})",
    )
    parser.add_argument(
        "--seed", type=int, default=default, metavar="N",
        help="RNG seed (default: APOLAB_SEED env var, else 0)",
    )
    parser.add_argument(
        "--format", choices=("text", "structured"),
        default=default, dest="format",
        help="report format: human text or JSON (default text)",
    )
    parser.add_argument(
        "--out", default=default, metavar="PATH",
        help="write the primary output document to PATH",
    )
    parser.add_argument(
        "-v", "--verbose", action="count",
        default=argparse.SUPPRESS if suppress else 0,
        help="increase log verbosity (-v info, -vv debug)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apolab",
        description="Exact h-vector and bounds toolkit for level algebra "
        "presentations given by generator forms.",
    )
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("hvector", help="h-vector of a presentation file")
    _add_global_flags(p, suppress=True)
    p.add_argument("input", help="presentation file (JSON)")
    p.set_defaults(handler=cmd_hvector)

    p = sub.add_parser("bounds", help="two-sided bounds for a truncated quotient")
    _add_global_flags(p, suppress=True)
    p.add_argument("--h", required=True, metavar="LIST",
                   help="ambient h-vector as a comma list, e.g. 1,4,9")
    p.add_argument("--d", required=True, type=int, help="quotient socle degree")
    p.add_argument("--c", required=True, type=int, help="quotient type")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("quotient", help="generic quotient of a presentation")
    _add_global_flags(p, suppress=True)
    p.add_argument("input", help="presentation file (JSON)")
    p.add_argument("--d", required=True, type=int, help="quotient socle degree")
    p.add_argument("--c", required=True, type=int, help="quotient type")
    p.set_defaults(handler=cmd_quotient)

    p = sub.add_parser("truncate", help="truncation of a presentation")
    _add_global_flags(p, suppress=True)
    p.add_argument("input", help="presentation file (JSON)")
    p.add_argument("--d", required=True, type=int, help="truncation degree")
    p.set_defaults(handler=cmd_truncate)

    p = sub.add_parser("construct", help="emit a reference construction")
    _add_global_flags(p, suppress=True)
    kinds = p.add_subparsers(dest="kind", metavar="KIND")
    kinds.required = True

    k = kinds.add_parser("remark5", help="sparse block family")
    _add_global_flags(k, suppress=True)
    k.add_argument("--t", required=True, type=int, help="number of generators")
    k.add_argument("--block", required=True, type=int, help="variables per block")
    k.add_argument("--e", required=True, type=int, help="socle degree (>= 3)")
    k.set_defaults(handler=cmd_construct_remark5)

    k = kinds.add_parser("powersum", help="sums of powers of generic linear forms")
    _add_global_flags(k, suppress=True)
    k.add_argument("--r", required=True, type=int, help="number of variables")
    k.add_argument("--e", required=True, type=int, help="socle degree")
    k.add_argument("--groups", required=True, metavar="LIST",
                   help="summand count per generator, e.g. 5,1")
    k.set_defaults(handler=cmd_construct_powersum)

    k = kinds.add_parser("septics", help="two generic ternary septics plus the "
                                         "upper-sharp derivative quotient")
    _add_global_flags(k, suppress=True)
    k.set_defaults(handler=cmd_construct_septics)

    k = kinds.add_parser("remark6", help="equal-h pair separating the bounds")
    _add_global_flags(k, suppress=True)
    k.add_argument("--t", required=True, type=int, help="number of generators (>= 2)")
    k.add_argument("--block", required=True, type=int, help="variables per block (>= 2)")
    k.add_argument("--e", required=True, type=int, help="socle degree (>= 3)")
    k.set_defaults(handler=cmd_construct_remark6)

    k = kinds.add_parser("compressed-h", help="entrywise-maximal h-vector closed form")
    _add_global_flags(k, suppress=True)
    k.add_argument("--r", required=True, type=int, help="number of variables")
    k.add_argument("--e", required=True, type=int, help="socle degree")
    k.add_argument("--t", required=True, type=int, help="type")
    k.set_defaults(handler=cmd_compressed_h)

    p = sub.add_parser("verify", help="run a built-in verification suite")
    _add_global_flags(p, suppress=True)
    p.add_argument("--suite", required=True,
                   choices=("example4", "remark5", "remark6", "all"))
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sweep", help="randomized quotient audit over a grid")
    _add_global_flags(p, suppress=True)
    p.add_argument("--r", required=True, metavar="LO:HI", help="variable-count range")
    p.add_argument("--e", required=True, metavar="LO:HI", help="socle-degree range")
    p.add_argument("--t", required=True, metavar="LO:HI", help="type range")
    p.add_argument("--trials", type=int, default=5,
                   help="random instances per grid cell (default 5)")
    p.add_argument("--max-columns", type=int, default=5000,
                   help="skip cells whose coordinate space exceeds this (default 5000)")
    p.set_defaults(handler=cmd_sweep)

    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    prime_arg = getattr(args, "prime", None)
    prime = DEFAULT_PRIME if prime_arg is None else prime_arg
    PrimeField(prime)
    seed_arg = getattr(args, "seed", None)
    if seed_arg is not None:
        seed = seed_arg
    else:
        env = os.environ.get("APOLAB_SEED", "")
        if env:
            try:
                seed = int(env)
            except ValueError:
                raise InvalidParameter(
                    f"APOLAB_SEED must be an integer, got {env!r}"
                )
        else:
            seed = DEFAULT_SEED
    return RunConfig(
        prime=prime,
        prime_explicit=prime_arg is not None,
        seed=seed,
        output_format=getattr(args, "format", None) or "text",
        verbosity=getattr(args, "verbose", 0) or 0,
        out=getattr(args, "out", None),
    )


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _session_field(config: RunConfig):
    """Field forced by --prime, or None to adopt each input file's prime."""
    return PrimeField(config.prime) if config.prime_explicit else None


def _write_report(config: RunConfig, lines, payload, stream=None) -> None:
    """Text or JSON report to stdout, or to --out when the command has no
    other primary document."""
    if config.output_format == "structured":
        body = json.dumps(payload, indent=2) + "\n"
    else:
        body = "\n".join(lines) + "\n"
    if stream is not None:
        stream.write(body)
    elif config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _emit_document(config: RunConfig, pres, note: str) -> None:
    """Presentation document to --out (with a stdout note) or to stdout."""
    if config.out:
        save_presentation(pres, config.out)
        print(f"wrote {note} to {config.out}")
    else:
        sys.stdout.write(dump_presentation(pres))


def cmd_hvector(config: RunConfig, args) -> int:
    pres = load_presentation(args.input, _session_field(config))
    h = hvector(pres)
    lines = [
        f"h-vector: {_csv(h)}",
        f"type: {pres.type}",
        f"socle degree: {pres.socle_degree}",
    ]
    payload = {
        "hvector": list(h),
        "type": pres.type,
        "socle_degree": pres.socle_degree,
        "ranks": [{"degree": i, "rank": v} for i, v in enumerate(h)],
    }
    _write_report(config, lines, payload)
    return 0


def cmd_bounds(config: RunConfig, args) -> int:
    h = HVector(_parse_int_list(args.h, "--h"))
    report = bounds_report(h, args.d, args.c)
    exact = ("1",) + tuple(str(q) for q in report.lower_exact)
    lines = [
        f"h: {_csv(h)}",
        f"d: {args.d}",
        f"c: {args.c}",
        f"lower exact: {', '.join(exact)}",
        f"lower: {_csv(report.lower_display)}",
        f"upper: {_csv(report.upper_display)}",
    ]
    if report.degenerate_case:
        lines.append(
            "degenerate socle: h_d = 1, both bounds equal the truncated h-vector"
        )
    payload = {
        "h": list(h),
        "d": args.d,
        "c": args.c,
        "lower_exact": list(exact),
        "lower": list(report.lower_display),
        "upper": list(report.upper_display),
        "degenerate": report.degenerate_case,
    }
    _write_report(config, lines, payload)
    return 0


def cmd_quotient(config: RunConfig, args) -> int:
    pres = load_presentation(args.input, _session_field(config))
    ambient_h = hvector(pres)
    rng = SeededRng(config.seed)
    quotient = generic_quotient(pres, args.d, args.c, rng)
    qh = hvector(quotient)
    report = bounds_report(ambient_h, args.d, args.c)
    verdict = check_within(qh, ambient_h, args.d, args.c)
    lines = [
        f"ambient h-vector: {_csv(ambient_h)}",
        f"quotient h-vector: {_csv(qh)}",
        f"type: {quotient.type}",
        f"socle degree: {quotient.socle_degree}",
        f"lower: {_csv(report.lower_display)}",
        f"upper: {_csv(report.upper_display)}",
        f"within bounds: {'yes' if verdict.passed else 'no'}",
    ]
    if not verdict.passed:
        lines.append(f"violated at indices: {verdict.failing_indices()}")
    payload = {
        "ambient_hvector": list(ambient_h),
        "quotient_hvector": list(qh),
        "type": quotient.type,
        "socle_degree": quotient.socle_degree,
        "lower": list(report.lower_display),
        "upper": list(report.upper_display),
        "within_bounds": verdict.passed,
    }
    if config.out:
        save_presentation(quotient, config.out)
        lines.append(f"wrote quotient presentation to {config.out}")
        payload["out"] = config.out
    _write_report(config, lines, payload, stream=sys.stdout)
    return 0 if verdict.passed else 1


def cmd_truncate(config: RunConfig, args) -> int:
    pres = load_presentation(args.input, _session_field(config))
    truncated = truncation(pres, args.d)
    _emit_document(config, truncated, f"degree-{args.d} truncation")
    return 0


def cmd_construct_remark5(config: RunConfig, args) -> int:
    fp = PrimeField(config.prime)
    params = Remark5Params(t=args.t, block=args.block, e=args.e)
    pres = remark5_family(params, fp)
    if config.out:
        save_presentation(pres, config.out)
        print(f"wrote block family presentation to {config.out}")
        print(f"variables: {params.num_vars}, type: {params.t}, "
              f"socle degree: {params.e}")
        print(f"h-vector: {_csv(expected_remark5_h(params))}")
    else:
        sys.stdout.write(dump_presentation(pres))
    return 0


def cmd_construct_powersum(config: RunConfig, args) -> int:
    fp = PrimeField(config.prime)
    groups = _parse_int_list(args.groups, "--groups")
    spec = PowerSumSpec.all_generic(args.r, args.e, groups)
    rng = SeededRng(config.seed)
    pres = power_sum_presentation(spec, fp, rng)
    _emit_document(config, pres, "power-sum presentation")
    return 0


def cmd_construct_septics(config: RunConfig, args) -> int:
    if not config.out:
        raise InvalidParameter(
            "construct septics emits two files; pass --out PREFIX"
        )
    fp = PrimeField(config.prime)
    rng = SeededRng(config.seed)
    ambient, quotient = remark5_upper_sharp(fp, rng)
    ambient_path = config.out + ".ambient.json"
    quotient_path = config.out + ".quotient.json"
    save_presentation(ambient, ambient_path)
    save_presentation(quotient, quotient_path)
    print(f"wrote {ambient_path} (h-vector {_csv(hvector(ambient))})")
    print(f"wrote {quotient_path} (h-vector {_csv(hvector(quotient))})")
    return 0


def cmd_construct_remark6(config: RunConfig, args) -> int:
    if not config.out:
        raise InvalidParameter(
            "construct remark6 emits two files; pass --out PREFIX"
        )
    fp = PrimeField(config.prime)
    rng = SeededRng(config.seed)
    family, power = remark6_pair(args.t, args.block, args.e, fp, rng)
    family_path = config.out + ".block.json"
    power_path = config.out + ".powersum.json"
    save_presentation(family, family_path)
    save_presentation(power, power_path)
    print(f"wrote {family_path} (h-vector {_csv(hvector(family))})")
    print(f"wrote {power_path} (h-vector {_csv(hvector(power))})")
    return 0


def cmd_compressed_h(config: RunConfig, args) -> int:
    h = compressed_hvector(args.r, args.e, args.t)
    lines = [f"compressed h-vector: {_csv(h)}"]
    payload = {"r": args.r, "e": args.e, "t": args.t, "hvector": list(h)}
    _write_report(config, lines, payload)
    return 0


def cmd_verify(config: RunConfig, args) -> int:
    fp = PrimeField(config.prime)
    rows = run_suite(args.suite, fp, config.seed)
    failures = [row for row in rows if not row.ok]
    name_width = max(len(row.name) for row in rows)
    lines = [f"suite: {args.suite}"]
    for row in rows:
        tag = "  ok  " if row.ok else " FAIL "
        line = f"[{tag}] {row.name:<{name_width}}  expected {row.expected}"
        if not row.ok:
            line += f"  computed {row.computed}"
        lines.append(line)
    lines.append(f"checks: {len(rows)}, failures: {len(failures)}")
    if failures:
        lines.append(f"first failure: {failures[0].name}")
    payload = {
        "suite": args.suite,
        "checks": [
            {
                "name": row.name,
                "expected": row.expected,
                "computed": row.computed,
                "ok": row.ok,
            }
            for row in rows
        ],
        "failures": len(failures),
    }
    _write_report(config, lines, payload)
    return 1 if failures else 0


def cmd_sweep(config: RunConfig, args) -> int:
    sweep_config = SweepConfig(
        r_range=_parse_range(args.r),
        e_range=_parse_range(args.e),
        t_range=_parse_range(args.t),
        trials=args.trials,
        seed=config.seed,
        prime=config.prime,
        max_columns=args.max_columns,
    )
    records, summary = run_sweep(sweep_config)
    if config.out:
        write_records(records, config.out)
        report_stream = sys.stdout
    else:
        write_records(records, sys.stdout)
        report_stream = sys.stderr
    lines = [
        f"records: {summary.records}",
        f"violations: {summary.violations}",
    ]
    payload = {
        "records": summary.records,
        "violations": summary.violations,
        "skips": len(summary.skips),
        "out": config.out,
    }
    if summary.records:
        mlg = round(summary.mean_lower_gap, 4)
        mug = round(summary.mean_upper_gap, 4)
        lines.append(f"lower gap: min {summary.min_lower_gap} mean {mlg}")
        lines.append(f"upper gap: min {summary.min_upper_gap} mean {mug}")
        payload["lower_gap"] = {"min": summary.min_lower_gap, "mean": mlg}
        payload["upper_gap"] = {"min": summary.min_upper_gap, "mean": mug}
    lines.append(f"skips: {len(summary.skips)}")
    _write_report(config, lines, payload, stream=report_stream)
    return 1 if summary.violations else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _resolve_config(args)
    except ApolarityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _configure_logging(config.verbosity)
    try:
        return args.handler(config, args)
    except ApolarityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def app() -> None:
    raise SystemExit(main(sys.argv[1:]))

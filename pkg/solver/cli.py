#!/usr/bin/env python

import argparse
import json
import logging
import logging.config
import sys

import pandas as pd
from python.common.codec import (
    document_kind,
    measure_from_document,
    measure_to_document,
    parse_decimal,
    read_document,
    report_csv,
    spectral_from_document,
    spectral_to_document,
    write_document,
    write_report,
)
from python.config import LOGGING
from python.exceptions import KreinStarError, SchemaError, ValidationFailed
from python.models.run_config import RunConfig
from python.pipelines.approx.pipeline import approximation_sequence
from python.pipelines.forward.pipeline import pipeline as forward_pipeline
from python.pipelines.inverse.pipeline import pipeline as inverse_pipeline
from python.pipelines.inverse.validate import snap_to_matches, validate_spectral_data
from python.pipelines.oracle.compare import compare
from python.pipelines.oracle.exceptions import OracleMismatch
from python.pipelines.roundtrip.pipeline import measure_report, roundtrip, roundtrip_suite


logger = logging.getLogger("cli")


def emit(run: RunConfig, document: dict) -> None:
    if run.out:
        write_document(run.out, document)
    else:
        sys.stdout.write(json.dumps(document, sort_keys=True, indent=2) + "\n")


def emit_report(fpath: str | None, frame: pd.DataFrame, digits: int, header: str | None = None) -> None:
    if fpath:
        write_report(fpath, frame, digits, header)
    else:
        sys.stdout.write(report_csv(frame, digits, header))


def load_measure(fpath: str):
    document = read_document(fpath)
    if document_kind(document) != "measure":
        raise SchemaError("Expected a measure document", path="$")
    return measure_from_document(document)


def load_spectral(fpath: str, run: RunConfig):
    document = read_document(fpath)
    if document_kind(document) != "spectral":
        raise SchemaError("Expected a spectral data document", path="$")
    data = spectral_from_document(document)
    if run.match_tol is not None:
        data = snap_to_matches(data, run.match_tol)
    return data


def validate_handler(args):
    run = RunConfig.from_args(args)
    if args.spectral:
        violations = validate_spectral_data(load_spectral(args.spectral, run))
        if violations:
            raise ValidationFailed(violations)
    else:
        load_measure(args.measure)
    sys.stdout.write(json.dumps({"status": "ok"}) + "\n")


def forward_handler(args):
    run = RunConfig.from_args(args)
    result = forward_pipeline(load_measure(args.measure))
    emit(run, spectral_to_document(result.spectral_data, run.digits))

    if run.report:
        rows = [
            {"kind": "trace", "check": "trace", "scope": t.scope, "passed": t.passed, "deviation": t.deviation}
            for t in result.traces
        ]
        rows.extend(
            {"kind": "verdict", "check": v.check, "scope": v.scope, "passed": v.passed, "deviation": v.deviation}
            for v in result.verdicts
        )
        write_report(run.report, pd.DataFrame(rows), run.digits)


def inverse_handler(args):
    run = RunConfig.from_args(args)
    result = inverse_pipeline(load_spectral(args.spectral, run))
    emit(run, measure_to_document(result.measure, run.digits))


def roundtrip_handler(args):
    run = RunConfig.from_args(args)
    if args.measure:
        report = measure_report(roundtrip(load_measure(args.measure), run.digits))
    else:
        report = roundtrip_suite(list(range(args.seeds)), run.digits, run.jobs)
    emit_report(run.report, report.frame, run.digits, report.header)


def oracle_handler(args):
    run = RunConfig.from_args(args)
    report = compare(load_measure(args.measure), tol=run.oracle_tol, strict=False)
    emit_report(run.report, report.frame, run.digits, f"tol={run.oracle_tol}")
    if not report.passed:
        raise OracleMismatch(f"Oracle disagrees beyond {run.oracle_tol}, max deviation {report.max_deviation:.3e}")


def truncate_handler(args):
    run = RunConfig.from_args(args)
    cutoffs = [parse_decimal(c.strip(), f"--cutoffs[{i}]") for i, c in enumerate(args.cutoffs.split(","))]
    report = approximation_sequence(load_measure(args.measure), cutoffs, run.jobs)
    emit_report(run.out, report.frame, run.digits)


def error_line(err: KreinStarError) -> str:
    return json.dumps({"code": err.code, "detail": err.detail["detail"], "path": err.detail.get("path")})


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="krein-star command line interface")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    subparsers = parser.add_subparsers(dest="command", title="Commands")

    # Validate command
    validate_parser = subparsers.add_parser("validate", help="Validate a measure or a spectral data document")
    target = validate_parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--measure", help="Measure document.")
    target.add_argument("--spectral", help="Spectral data document.")
    validate_parser.add_argument("--match-tol", help="Relative tolerance for matching edge and graph eigenvalues.")
    validate_parser.set_defaults(handler=validate_handler)

    # Forward command
    forward_parser = subparsers.add_parser("forward", help="Compute the spectral data of a measure")
    forward_parser.add_argument("--measure", required=True, help="Measure document.")
    forward_parser.add_argument("--out", help="Spectral data document to write, stdout if omitted.")
    forward_parser.add_argument("--report", help="CSV report of trace checks and invariant verdicts.")
    forward_parser.add_argument("--digits", type=int, help="Significant digits of serialized decimals.")
    forward_parser.set_defaults(handler=forward_handler)

    # Inverse command
    inverse_parser = subparsers.add_parser("inverse", help="Reconstruct the measure from spectral data")
    inverse_parser.add_argument("--spectral", required=True, help="Spectral data document.")
    inverse_parser.add_argument("--out", help="Measure document to write, stdout if omitted.")
    inverse_parser.add_argument("--digits", type=int, help="Significant digits of serialized decimals.")
    inverse_parser.add_argument("--match-tol", help="Relative tolerance for matching edge and graph eigenvalues.")
    inverse_parser.set_defaults(handler=inverse_handler)

    # Roundtrip command
    roundtrip_parser = subparsers.add_parser("roundtrip", help="Check forward then inverse gives back the measure")
    source = roundtrip_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--measure", help="Measure document.")
    source.add_argument("--seeds", type=int, help="Run the seeded random measures 0 .. seeds-1.")
    roundtrip_parser.add_argument("--report", help="CSV report, stdout if omitted.")
    roundtrip_parser.add_argument("--digits", type=int, help="Significant digits of serialized decimals.")
    roundtrip_parser.add_argument("--jobs", type=int, help="Number of worker processes.")
    roundtrip_parser.set_defaults(handler=roundtrip_handler)

    # Oracle command
    oracle_parser = subparsers.add_parser("oracle", help="Compare spectra against the matrix eigenproblem")
    oracle_parser.add_argument("--measure", required=True, help="Measure document.")
    oracle_parser.add_argument("--tol", type=float, help="Relative tolerance of the comparison.")
    oracle_parser.add_argument("--report", help="CSV report, stdout if omitted.")
    oracle_parser.set_defaults(handler=oracle_handler)

    # Truncate command
    truncate_parser = subparsers.add_parser("truncate", help="Reconstruct from spectral data cut off at each cutoff")
    truncate_parser.add_argument("--measure", required=True, help="Measure document.")
    truncate_parser.add_argument("--cutoffs", required=True, help="Comma separated increasing cutoffs.")
    truncate_parser.add_argument("--out", help="CSV sequence report, stdout if omitted.")
    truncate_parser.add_argument("--digits", type=int, help="Significant digits of serialized decimals.")
    truncate_parser.add_argument("--jobs", type=int, help="Number of worker processes.")
    truncate_parser.set_defaults(handler=truncate_handler)

    args = parser.parse_args(argv)
    logging.config.dictConfig(LOGGING)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    if not hasattr(args, "handler"):
        parser.print_help()
        return 0

    try:
        args.handler(args)
    except KreinStarError as err:
        logger.debug("Command %s failed with %s", args.command, err.code)
        sys.stderr.write(error_line(err) + "\n")
        return err.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())

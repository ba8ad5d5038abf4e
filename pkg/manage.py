#!/usr/bin/env python3
"""
Command-line entry point for the double-cycle laboratory
Builds canonical double-cycles, reports their attractors, runs update
programs, canonicalizes signed double-cycles and runs the verification suites

Exit status: 0 success, 1 verification failure, 2 usage or parse error
"""

import argparse
import logging
import os
import sys
from typing import List, Optional, TextIO

# Add the project root to the Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from app import create_app, setup_logging
from business_services import (
    BadcService, DynamicsService, ReportService, SequenceService, VerificationService
)
from config import LabSettings, get_config
from helper_utilities.constants import ExitCode, OutputFormat, Suite
from helper_utilities.exceptions import LabError
from helper_utilities.formatters import (
    DataFormatter, GraphFormatter, ReportFormatter, SignFormatter, TraceFormatter
)
from helper_utilities.validators import SizeValidator

logger = logging.getLogger(__name__)

KINDS = ('positive', 'mixed', 'negative')


def _settings(args: argparse.Namespace) -> LabSettings:
    base = LabSettings.from_object(get_config(args.config))
    return base.with_overrides(
        enumeration_cap=getattr(args, 'cap', None),
        graph_workers=getattr(args, 'workers', None),
        verify_workers=getattr(args, 'verify_workers', None),
        seed=getattr(args, 'seed', None),
        exhaustive_max=getattr(args, 'exhaustive_max', None),
        expand_strict=True if getattr(args, 'strict', False) else None,
    )


def _emit(out: TextIO, text: str) -> None:
    out.write(text if text.endswith('\n') else text + '\n')


def cmd_attractors(args: argparse.Namespace, out: TextIO) -> int:
    settings = _settings(args)
    dc = BadcService.build_double_cycle(args.kind, args.n, args.m)
    graph = DynamicsService.build_graph(dc.network, settings.enumeration_cap, settings.graph_workers)
    if args.format == OutputFormat.DOT.value:
        out.write(GraphFormatter.render(graph, dc.n, dc.m, DynamicsService.recurrent(graph)))
        return ExitCode.SUCCESS
    summary = DynamicsService.summarize(graph, dc.kind.value, dc.n, dc.m)
    if args.format == OutputFormat.JSON.value:
        _emit(out, DataFormatter.to_json(summary, settings.schema_version))
    else:
        _emit(out, ReportFormatter.dynamics_text(summary))
    return ExitCode.SUCCESS


def cmd_export(args: argparse.Namespace, out: TextIO) -> int:
    settings = _settings(args)
    dc = BadcService.build_double_cycle(args.kind, args.n, args.m)
    graph = DynamicsService.build_graph(dc.network, settings.enumeration_cap, settings.graph_workers)
    lines = GraphFormatter.to_dot(graph, dc.n, dc.m, DynamicsService.recurrent(graph))
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as handle:
            handle.writelines(lines)
        logger.info(f"[SUCCESS] Wrote {graph.state_count} configurations to {args.output}")
    else:
        out.writelines(lines)
    return ExitCode.SUCCESS


def cmd_run(args: argparse.Namespace, out: TextIO) -> int:
    settings = _settings(args)
    if args.prog:
        with open(args.prog, encoding='utf-8') as handle:
            program = handle.read()
    else:
        program = args.program or ''
    dc = BadcService.build_double_cycle(args.kind, args.n, args.m)
    start = BadcService.parse_configuration(args.start, dc.spec)
    trace = SequenceService.exec(dc, start, program, strict=settings.expand_strict)
    if args.format == OutputFormat.JSON.value:
        _emit(out, DataFormatter.to_json(TraceFormatter.to_dict(trace, dc.n, dc.m), settings.schema_version))
    else:
        _emit(out, TraceFormatter.to_text(trace, dc.n, dc.m))
    if args.certify and not trace.certified:
        logger.warning("[WARNING] The run left the proven preconditions of a sequence")
        return ExitCode.VERIFICATION_FAILED
    return ExitCode.SUCCESS


def cmd_canonicalize(args: argparse.Namespace, out: TextIO) -> int:
    if args.signs:
        with open(args.signs, encoding='utf-8') as handle:
            spec = BadcService.parse_sign_spec(handle.read())
    elif args.left and args.right:
        spec = BadcService.signed_spec(args.left, args.right)
    else:
        raise LabError("canonicalize needs a sign file or both --left and --right")
    summary = BadcService.canonical_summary(spec)
    if args.format == OutputFormat.JSON.value:
        _emit(out, DataFormatter.to_json(summary))
        return ExitCode.SUCCESS
    lines = [
        f"signs L={summary['leftSigns']} R={summary['rightSigns']}: {summary['kind']} double-cycle",
        f"canonical form n={summary['canonical']['n']} m={summary['canonical']['m']}"
        + (" (cycles exchanged)" if summary['swapped'] else ""),
        SignFormatter.flips_table(summary['flips'], summary['permutation'], spec.n),
    ]
    _emit(out, "\n".join(lines))
    return ExitCode.SUCCESS


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    settings = _settings(args)
    sizes = SizeValidator()
    if args.all or not args.suite:
        suite_name = 'all'
        report = VerificationService.verify_all(settings, args.max_size, args.seed)
    else:
        suite_name = args.suite
        report = VerificationService.run_suite(
            Suite(args.suite), settings,
            n_values=sizes.parse_list(args.n) if args.n else [],
            m_values=sizes.parse_list(args.m) if args.m else [],
            sizes=sizes.parse_list(args.sizes) if args.sizes else [],
            seed=args.seed,
            samples=args.samples,
            max_n=args.max_n,
        )

    if args.format == OutputFormat.JSON.value:
        data = report.to_dict()
        data['suite'] = suite_name
        _emit(out, DataFormatter.to_json(data, settings.schema_version))
    else:
        _emit(out, ReportFormatter.verification_table(report))

    if args.save:
        parameters = {key: value for key, value in vars(args).items()
                      if key not in ('command', 'handler', 'save', 'format') and value is not None}
        with create_app(args.config).app_context():
            ReportService.save_run(report, suite_name, parameters)

    if report.all_passed:
        logger.info(f"[SUCCESS] {report.passed_count} verification case(s) passed")
        return ExitCode.SUCCESS
    logger.error(f"[ERROR] {report.failed_count} verification case(s) failed")
    return ExitCode.VERIFICATION_FAILED


def cmd_history(args: argparse.Namespace, out: TextIO) -> int:
    with create_app(args.config).app_context():
        runs = ReportService.list_runs(args.limit, args.suite)
    if args.format == OutputFormat.JSON.value:
        _emit(out, DataFormatter.to_json({'runs': runs}))
        return ExitCode.SUCCESS
    if not runs:
        _emit(out, "No verification runs stored")
        return ExitCode.SUCCESS
    for run in runs:
        _emit(out, f"#{run['id']}  {run['created_at']}  {run['suite']:<16}  "
                   f"{run['passed']} passed, {run['failed']} failed")
    return ExitCode.SUCCESS


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Boolean automata double-cycle laboratory')
    parser.add_argument('--config', help='Configuration name (development, production, testing)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    def shape(sub: argparse.ArgumentParser) -> None:
        sub.add_argument('--kind', required=True, choices=KINDS)
        sub.add_argument('-n', type=_positive_int, required=True, help='Left cycle size')
        sub.add_argument('-m', type=_positive_int, required=True, help='Right cycle size')
        sub.add_argument('--cap', type=_positive_int, help='Override the enumeration cap on automata')
        sub.add_argument('--workers', type=_positive_int, help='Threads for the transition graph build')

    attractors = subparsers.add_parser('attractors', help='Report attractors and convergence')
    shape(attractors)
    attractors.add_argument('--format', choices=[f.value for f in OutputFormat], default='text')
    attractors.set_defaults(handler=cmd_attractors)

    export = subparsers.add_parser('export', help='Write the transition graph as DOT')
    shape(export)
    export.add_argument('--output', help='DOT file path (stdout when omitted)')
    export.set_defaults(handler=cmd_export)

    run = subparsers.add_parser('run', help='Execute an update program')
    shape(run)
    run.add_argument('--start', required=True, help='Start configuration, e.g. "(0000,00)"')
    source = run.add_mutually_exclusive_group(required=True)
    source.add_argument('--prog', help='Program file')
    source.add_argument('--program', help='Program text')
    run.add_argument('--format', choices=['text', 'json'], default='text')
    run.add_argument('--certify', action='store_true', help='Exit 1 when a macro ran outside its proof')
    run.add_argument('--strict', action='store_true', help='Undefined expand is an error')
    run.set_defaults(handler=cmd_run)

    canonicalize = subparsers.add_parser('canonicalize', help='Canonical form of a signed double-cycle')
    canonicalize.add_argument('signs', nargs='?', help='Sign file: left word then right word')
    canonicalize.add_argument('--left', help='Left cycle sign word, e.g. +-+')
    canonicalize.add_argument('--right', help='Right cycle sign word')
    canonicalize.add_argument('--format', choices=['text', 'json'], default='text')
    canonicalize.set_defaults(handler=cmd_canonicalize)

    verify = subparsers.add_parser('verify', help='Run verification suites')
    verify.add_argument('--suite', choices=[s.value for s in Suite])
    verify.add_argument('--all', action='store_true', help='Run every suite')
    verify.add_argument('-n', help='Left sizes, e.g. 2,3,4')
    verify.add_argument('-m', help='Right sizes')
    verify.add_argument('--sizes', help='Even sizes for the quadratic suite')
    verify.add_argument('--max-size', type=_positive_int, help='Largest automaton count for --all')
    verify.add_argument('--max-n', type=_positive_int, help='Largest random network for the cycle checks')
    verify.add_argument('--samples', type=_positive_int, help='Random samples for cycles/canonicalization')
    verify.add_argument('--seed', type=int)
    verify.add_argument('--cap', type=_positive_int)
    verify.add_argument('--workers', type=_positive_int, help='Threads per graph build')
    verify.add_argument('--verify-workers', type=_positive_int, help='Size pairs verified concurrently')
    verify.add_argument('--exhaustive-max', type=_positive_int, help='Largest automaton count swept exhaustively')
    verify.add_argument('--format', choices=['text', 'json'], default='text')
    verify.add_argument('--save', action='store_true', help='Store the report in the history database')
    verify.set_defaults(handler=cmd_verify)

    history = subparsers.add_parser('history', help='List stored verification runs')
    history.add_argument('--limit', type=_positive_int, default=20)
    history.add_argument('--suite')
    history.add_argument('--format', choices=['text', 'json'], default='text')
    history.set_defaults(handler=cmd_history)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)

    setup_logging(get_config(args.config))
    try:
        return int(args.handler(args, out))
    except (LabError, OSError) as e:
        logger.error(f"[ERROR] {e}")
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.USAGE_ERROR


if __name__ == '__main__':
    sys.exit(main())

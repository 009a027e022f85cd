#!/usr/bin/env python3
"""
N-Unital Functions - Command Line Interface

Enumerates the N-unital rational functions, verifies the classification for
N <= 4 against the reference data, prints value sets, orbits and the
conjectured value set, checks user-supplied functions and writes PDF reports.

Usage:
    python unital_cli.py enumerate --n 4 --format json
    python unital_cli.py verify --n 3
    python unital_cli.py report --n 4 --output u4.pdf --color-scheme blue
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

from enumerator import (
    DEFAULT_CAP,
    CapExceeded,
    EnumerationError,
    SymmetryGroup,
    check_order,
    conjecture_report,
    degree_bound,
    enumerate_with_stats,
    orbit_decompose,
    sorted_values,
    value_set,
)
from refdata import REFDATA
from report_pdf import ReportGenerationError, build_report
from report_styles import ColorScheme, get_available_color_schemes
from unital import UnitalFn, definitional_oracle, render_text, value_at_zero
from unital_json import UnitalJSONError, UnitalJSONParser, dump_lines
from verifier import verify

__version__ = "1.0.0"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

FORMATS = ("text", "json", "table")


class UsageError(ValueError):
    """Raised for invalid argument values that argparse cannot check."""
    pass


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', type=int, required=True, help='Cyclotomic order N')
    common.add_argument('--format', choices=FORMATS, default='text', help='Output format (default: text)')
    common.add_argument('--jobs', type=int, default=1, help='Worker processes for the search (default: 1)')
    common.add_argument('--cap', type=int, default=DEFAULT_CAP, help=f'Largest N accepted (default: {DEFAULT_CAP})')
    common.add_argument('--no-prune', action='store_true', help='Disable degree pruning of the search')
    common.add_argument('--verbose', '-v', action='store_true', help='Enable verbose output')
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser."""
    parser = argparse.ArgumentParser(
        description="Enumerate and classify N-unital rational functions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s enumerate --n 2
  %(prog)s enumerate --n 4 --format json --jobs 4
  %(prog)s verify --n 4
  %(prog)s orbits --n 4 --format table
  %(prog)s conjecture --n 5 --verbose
  %(prog)s check --input functions.jsonl
  %(prog)s report --n 3 --output u3.pdf --color-scheme dark

Available color schemes: """ + ", ".join(get_available_color_schemes())
    )
    parser.add_argument('--version', action='version', version=f'N-Unital Functions {__version__}')

    common = _common_options()
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('enumerate', parents=[common], help='List every function of U_N')
    commands.add_parser('verify', parents=[common], help='Compare U_N with the reference data (N <= 4)')
    commands.add_parser('values', parents=[common], help='Print the value set C^N = {f(0)}')
    orbits = commands.add_parser('orbits', parents=[common], help='Decompose U_N into symmetry orbits')
    orbits.add_argument(
        '--group',
        choices=[g.value for g in SymmetryGroup],
        default=SymmetryGroup.FULL.value,
        help='Symmetry group for the decomposition (default: full)'
    )
    commands.add_parser('conjecture', parents=[common], help='Compare C^N with the conjectured set')

    report = commands.add_parser('report', parents=[common], help='Write a PDF report for U_N')
    report.add_argument('--output', required=True, help='Path to output PDF file')
    report.add_argument('--title', type=str, help='Title for the PDF document')
    report.add_argument(
        '--color-scheme',
        choices=get_available_color_schemes(),
        default='default',
        help='Color scheme for the PDF (default: default)'
    )

    check = commands.add_parser('check', help='Check functions from a JSON Lines file')
    check.add_argument('--input', required=True, help='Path to a JSON Lines file of functions')
    check.add_argument('--verbose', '-v', action='store_true', help='Enable verbose output')
    return parser


def validate_arguments(args) -> None:
    """
    Validate argument values.

    Raises:
        UsageError: On an invalid order, cap or job count
    """
    if args.command == 'check':
        return
    if args.cap < 1:
        raise UsageError(f"--cap must be positive, got {args.cap}")
    if args.jobs < 1:
        raise UsageError(f"--jobs must be positive, got {args.jobs}")
    try:
        check_order(args.n, args.cap)
    except CapExceeded as e:
        raise UsageError(f"{e}; raise --cap to run it anyway")
    except ValueError as e:
        raise UsageError(str(e))
    if args.command == 'verify' and REFDATA.expected_count(args.n) is None:
        raise UsageError(f"verify supports N in {REFDATA.orders()}, got {args.n}")
    if args.command == 'report' and not args.output.lower().endswith('.pdf'):
        print("Warning: Output file doesn't have .pdf extension", file=sys.stderr)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _enumerate(args) -> List[UnitalFn]:
    functions, stats = enumerate_with_stats(args.n, jobs=args.jobs, prune=not args.no_prune, cap=args.cap)
    if args.verbose:
        print(f"Search statistics: {json.dumps(stats.to_dict())}", file=sys.stderr)
    return list(functions)


def _print_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    cells = [list(map(str, header))] + [list(map(str, row)) for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    for index, row in enumerate(cells):
        print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        if index == 0:
            print("  ".join("-" * width for width in widths))


def cmd_enumerate(args) -> int:
    functions = _enumerate(args)
    if args.format == 'json':
        sys.stdout.write(dump_lines(functions))
    elif args.format == 'table':
        _print_table(
            ["#", "num deg", "den deg", "f(0)", "function"],
            [
                [i, f.numerator_degree, f.denominator_degree, value_at_zero(f), render_text(f)]
                for i, f in enumerate(functions, start=1)
            ],
        )
    else:
        for f in functions:
            print(render_text(f))
    return EXIT_OK


def cmd_verify(args) -> int:
    functions = _enumerate(args)
    report = verify(args.n, functions=functions)
    if args.format == 'json':
        print(json.dumps(report.to_dict()))
    else:
        for line in report.summary_lines():
            print(line)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_values(args) -> int:
    values = sorted_values(value_set(args.n, functions=_enumerate(args)))
    if args.format == 'json':
        print(json.dumps({"n": args.n, "count": len(values), "values": [v.to_json() for v in values]}))
    elif args.format == 'table':
        _print_table(["#", "value"], [[i, v] for i, v in enumerate(values, start=1)])
    else:
        for v in values:
            print(v)
    return EXIT_OK


def cmd_orbits(args) -> int:
    group = SymmetryGroup(args.group)
    orbits = orbit_decompose(_enumerate(args), group)
    if args.format == 'json':
        print(json.dumps({"n": args.n, "group": group.value, "count": len(orbits), "orbits": [o.to_dict() for o in orbits]}))
    elif args.format == 'table':
        _print_table(
            ["#", "size", "generator"],
            [[i, o.size, render_text(o.generator)] for i, o in enumerate(orbits, start=1)],
        )
    else:
        for o in orbits:
            print(f"{o.size}\t{render_text(o.generator)}")
    return EXIT_OK


def cmd_conjecture(args) -> int:
    report = conjecture_report(args.n, functions=_enumerate(args))
    data = report.to_dict()
    if args.format == 'json':
        print(json.dumps(data))
        return EXIT_OK
    print(f"N={report.order}: match={'true' if report.match else 'false'}")
    print(f"#C^N = {report.cardinality}, bound = {report.bound}, bound_holds={'true' if report.bound_holds else 'false'}")
    if not report.match:
        print("computed set differs from the conjectured set; conjecture NOT asserted")
        print(f"missing from computed: {', '.join(data['missing_from_computed']) or '-'}")
        print(f"extra in computed: {', '.join(data['extra_in_computed']) or '-'}")
    for note in report.notes:
        print(f"note: {note}")
    return EXIT_OK


def cmd_report(args) -> int:
    build_report(
        args.n,
        args.output,
        color_scheme=ColorScheme(args.color_scheme),
        jobs=args.jobs,
        prune=not args.no_prune,
        cap=args.cap,
        title=args.title,
    )
    print(f"Successfully created PDF: {args.output}")
    return EXIT_OK


def cmd_check(args) -> int:
    functions, summary = UnitalJSONParser().parse_file(args.input)
    if args.verbose:
        print(f"Read {summary['count']} functions of orders {summary['orders']}", file=sys.stderr)
    failures = 0
    for index, f in enumerate(functions, start=1):
        problems = []
        if not definitional_oracle(f):
            problems.append("not unital")
        bound = degree_bound(f.order)
        if f.numerator_degree > bound or f.denominator_degree > bound:
            problems.append(f"degree exceeds {bound}")
        if problems:
            failures += 1
            print(f"function {index}: {render_text(f)}: {'; '.join(problems)}")
    print(f"{len(functions) - failures}/{len(functions)} functions passed")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    'enumerate': cmd_enumerate,
    'verify': cmd_verify,
    'values': cmd_values,
    'orbits': cmd_orbits,
    'conjecture': cmd_conjecture,
    'report': cmd_report,
    'check': cmd_check,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the CLI application; returns the exit status."""
    parser = create_parser()
    args = None
    try:
        args = parser.parse_args(argv)
        validate_arguments(args)
        _configure_logging(args.verbose)
        return COMMANDS[args.command](args)

    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return EXIT_MISMATCH

    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    except UnitalJSONError as e:
        print(f"JSON Error: {e}", file=sys.stderr)
        return EXIT_MISMATCH

    except ReportGenerationError as e:
        print(f"PDF Generation Error: {e}", file=sys.stderr)
        return EXIT_MISMATCH

    except EnumerationError as e:
        print(f"Enumeration Error: {e}", file=sys.stderr)
        return EXIT_MISMATCH

    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        if args is not None and getattr(args, 'verbose', False):
            import traceback
            traceback.print_exc()
        return EXIT_MISMATCH


if __name__ == '__main__':
    sys.exit(main())

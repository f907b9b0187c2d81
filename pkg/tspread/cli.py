#!/usr/bin/env python3
"""
tspread - CLI Tool

A unified command-line interface for t-spread monomial combinatorics:
Macaulay expansions, successor operators, I^tlex and f_t-vector feasibility.

Exit codes: 0 success, 1 usage, 2 domain error, 3 mathematical obstruction.
"""

import argparse
import json
import sys

from tspread.config import get_settings
from tspread.errors import ConfigError, DomainError, FormatError, InfeasibleError
from tspread.expansion import (
    classic_successor,
    macaulay_expand,
    t_successor,
    t_successor_closed_form,
)
from tspread.formats import (
    format_ideal,
    format_monomial_set,
    json_int,
    parse_f_vector,
    read_ideal_file,
    read_monomial_set_file,
    report_to_json,
    trace_to_yaml,
    write_ideal_file,
)
from tspread.ideal import ft_vector, is_lex_ideal, is_strongly_stable_ideal, tlex
from tspread.kk import kk_check, kk_witness
from tspread.lexset import shadow
from tspread.monomial import enumerate_tspread

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_OBSTRUCTION = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def setup_arithmetic_commands(subparsers):
    """Set up the 'expand' and 'succ' commands."""
    expand_parser = subparsers.add_parser(
        'expand',
        help='Macaulay expansion of a with respect to d'
    )
    expand_parser.add_argument('a', type=int, help='Nonnegative integer to expand')
    expand_parser.add_argument('d', type=int, help='Positive degree')
    expand_parser.add_argument('--json', action='store_true', help='Emit JSON')

    succ_parser = subparsers.add_parser(
        'succ',
        help='Classical successor a^(d), or a^[d]_t with --t and --n'
    )
    succ_parser.add_argument('a', type=int, help='Nonnegative integer')
    succ_parser.add_argument('d', type=int, help='Positive degree')
    succ_parser.add_argument('--t', type=int, help='Spread t (together with --n)')
    succ_parser.add_argument('--n', type=int, help='Number of variables (together with --t)')
    succ_parser.add_argument(
        '--closed-form',
        action='store_true',
        help='Evaluate the sentinel closed form instead of the exact shadow count'
    )
    succ_parser.add_argument('--json', action='store_true', help='Emit JSON')


def setup_ideal_commands(subparsers):
    """Set up the commands working on ideal and monomial-set files."""
    tlex_parser = subparsers.add_parser(
        'tlex',
        help='Construct the t-spread lex ideal with the same f_t-vector'
    )
    tlex_parser.add_argument('ideal_file', help='Ideal file (header n=<int> t=<int>)')
    tlex_parser.add_argument('--trace', action='store_true', help='Print the per-degree trace as YAML')
    tlex_parser.add_argument('--inline', action='store_true', help='Print the ideal as (u1, u2, ...)')
    tlex_parser.add_argument('--output', help='Write the resulting ideal file here')

    enum_parser = subparsers.add_parser(
        'enum',
        help='List M_{n,d,t} in descending lex order'
    )
    enum_parser.add_argument('n', type=int)
    enum_parser.add_argument('d', type=int)
    enum_parser.add_argument('t', type=int)

    shadow_parser = subparsers.add_parser(
        'shadow',
        help='Shadow of a set of monomials of one common degree'
    )
    shadow_parser.add_argument('set_file', help='File in the ideal format, one common degree')
    shadow_parser.add_argument('--tau', type=int, help='Spread of the products (default: t)')

    fvec_parser = subparsers.add_parser('fvec', help='f_t-vector of an ideal')
    fvec_parser.add_argument('ideal_file')
    fvec_parser.add_argument('--json', action='store_true', help='Emit JSON')

    check_parser = subparsers.add_parser(
        'check',
        help='Report whether an ideal is strongly stable and lex'
    )
    check_parser.add_argument('ideal_file')


def setup_kk_commands(subparsers):
    """Set up the 'kk' feasibility command."""
    kk_parser = subparsers.add_parser(
        'kk',
        help='Is f the f_t-vector of a t-spread strongly stable ideal?'
    )
    kk_parser.add_argument('f', help='Comma-separated f(0),f(1),... e.g. 1,12,50,20,15')
    kk_parser.add_argument('--t', type=int, required=True, help='Spread t')
    kk_parser.add_argument('--witness', help='Write a lex ideal realizing f to this file')
    kk_parser.add_argument('--json', action='store_true', help='Emit the report as JSON')


def setup_verify_commands(subparsers):
    """Set up the 'verify' oracle command."""
    verify_parser = subparsers.add_parser(
        'verify',
        help='Check the formulas against brute-force oracles'
    )
    verify_parser.add_argument(
        '--max-n',
        type=int,
        help='Largest number of variables to sweep (default: sweep_max_n setting)'
    )
    verify_parser.add_argument('--report', help='Write a markdown report to this file')
    verify_parser.add_argument('--quick', action='store_true', help='Small ranges only')


def build_parser():
    parser = ArgumentParser(
        prog='tspread',
        description='tspread - t-spread monomial combinatorics'
    )
    parser.add_argument(
        '--verbose', '-v',
        action='store_true',
        help='Enable verbose output (bound tables, tracebacks)'
    )
    subparsers = parser.add_subparsers(
        dest='command',
        help='Command to run'
    )
    setup_arithmetic_commands(subparsers)
    setup_ideal_commands(subparsers)
    setup_kk_commands(subparsers)
    setup_verify_commands(subparsers)
    return parser


def _print_json(data):
    print(json.dumps(data, indent=2))


def dispatch_arithmetic_command(args):
    if args.command == 'expand':
        expansion = macaulay_expand(args.a, args.d)
        if args.json:
            _print_json({
                "a": json_int(expansion.a),
                "d": expansion.d,
                "terms": [{"top": json_int(top), "j": j} for top, j in expansion.terms],
                "text": str(expansion),
            })
        else:
            print(expansion)
        return EXIT_OK

    if args.t is None:
        value = classic_successor(args.a, args.d)
    else:
        operator = t_successor_closed_form if args.closed_form else t_successor
        value = operator(args.a, args.d, args.t, args.n)
    if args.json:
        _print_json({"a": json_int(args.a), "d": args.d, "t": args.t, "n": args.n, "value": json_int(value)})
    else:
        print(value)
    return EXIT_OK


def dispatch_ideal_command(args):
    if args.command == 'enum':
        for u in enumerate_tspread(args.n, args.d, args.t):
            print(u)
        return EXIT_OK

    if args.command == 'shadow':
        L = read_monomial_set_file(args.set_file)
        print(format_monomial_set(shadow(L, args.tau)), end='')
        return EXIT_OK

    ideal = read_ideal_file(args.ideal_file)

    if args.command == 'fvec':
        f = ft_vector(ideal)
        if args.json:
            _print_json({"n": ideal.n, "t": ideal.t, "f": [json_int(v) for v in f]})
        else:
            print(f)
        return EXIT_OK

    if args.command == 'check':
        stable = "yes" if is_strongly_stable_ideal(ideal) else "no"
        lex = "yes" if is_lex_ideal(ideal) else "no"
        print(f"strongly-stable: {stable}, lex: {lex}")
        return EXIT_OK

    if args.command == 'tlex':
        result = tlex(ideal)
        if args.trace:
            print(trace_to_yaml(result.trace), end='')
        if not result.succeeded:
            trace = result.trace
            print(
                f"no t-lex ideal: obstruction at degree {trace.failure_degree} "
                f"(|shad_t(L_{trace.failure_degree - 1})| = {trace.required} > "
                f"{trace.available} = |[I_{trace.failure_degree}]_t|)"
            )
            return EXIT_OBSTRUCTION
        if args.output:
            path = write_ideal_file(result.ideal, args.output)
            print(f"✓ Wrote I^tlex ({len(result.ideal.generators)} generators) to {path}")
        elif args.inline:
            print(result.ideal)
        else:
            print(format_ideal(result.ideal), end='')
        return EXIT_OK

    raise ValueError(f"Unknown command: {args.command}")


def _print_bounds(report):
    print("  d  f(d)  f(d+1)  f(d)^[d]_t")
    for row in report.bounds:
        mark = "✓" if row.next_value <= row.bound else "✗"
        print(f"  {row.degree}  {row.value}  {row.next_value}  {row.bound}  {mark}")


def dispatch_kk_command(args):
    f = parse_f_vector(args.f)
    report = kk_check(f, args.t)

    if args.json:
        _print_json(report_to_json(report))
    elif report.feasible:
        print(f"feasible (n={report.n}, t={report.t})")
    else:
        violation = report.first_violation
        where = f" at d={violation.degree}" if violation else ""
        print(f"infeasible{where}: {report.reason}")
    if args.verbose and not args.json:
        _print_bounds(report)

    if args.witness:
        # raises InfeasibleError, reported with exit code 3
        witness = kk_witness(f, args.t)
        path = write_ideal_file(witness, args.witness)
        if not args.json:
            print(f"✓ Wrote witness ideal to {path}")

    return EXIT_OK if report.feasible else EXIT_OBSTRUCTION


def dispatch_verify_command(args, settings):
    from tspread.verify import run_all, write_report

    results = run_all(max_n=args.max_n, settings=settings, quick=args.quick)
    if args.report:
        path = write_report(results, args.report, settings)
        print(f"Report written to {path}")
    failing = [result for result in results if not result.ok]
    if failing:
        print(f"❌ {len(failing)} of {len(results)} sweeps found disagreements")
        return EXIT_DOMAIN
    print(f"✓ All {len(results)} sweeps agree")
    return EXIT_OK


def main(argv=None):
    """Main entry point for the CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    if args.command == 'succ' and (args.t is None) != (args.n is None):
        parser.print_usage(sys.stderr)
        needed = '--n' if args.n is None else '--t'
        given = '--t' if args.n is None else '--n'
        print(f"tspread: error: succ {given} requires {needed}", file=sys.stderr)
        return EXIT_USAGE

    try:
        settings = get_settings()
        if args.command in ('expand', 'succ'):
            return dispatch_arithmetic_command(args)
        if args.command in ('tlex', 'enum', 'shadow', 'fvec', 'check'):
            return dispatch_ideal_command(args)
        if args.command == 'kk':
            return dispatch_kk_command(args)
        if args.command == 'verify':
            return dispatch_verify_command(args, settings)
        parser.print_help()
        return EXIT_USAGE
    except InfeasibleError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_OBSTRUCTION
    except DomainError as e:
        print(f"Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_DOMAIN
    except (FormatError, ConfigError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())

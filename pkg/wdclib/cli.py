# %%
from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from .config import SEED_VARIABLE, NumericsConfig
from .criteria import AuditOutcome, equivalence_audit
from .errors import WdcError
from .lemmas import lemmas_passed, verify_lemmas
from .report import audit_frame, frame_csv, report_json, write_frame, write_report
from .scenario import load_scenarios, parse_builtin_spec, probe, run_reports
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2

DEFAULT_SCENARIOS = 'scenarios.json'


# %%
def _configure_logging(verbose: int, log_file: Optional[str]):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, filename=log_file, force=True)


def _overrides(args) -> dict:
    result = {}
    for key in ('shells', 'angles', 'nmax'):
        value = getattr(args, key, None)
        if value is not None:
            result[key] = value
    return result


def _check(args) -> int:
    scenarios = load_scenarios(args.scenarios, overrides=_overrides(args))
    results = run_reports(scenarios, parallel=not args.serial)
    for result in results:
        print(result.summary())
    if args.out:
        write_report(results, args.out)
    elif args.json:
        sys.stdout.write(report_json(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def _audit(args) -> int:
    scenarios = load_scenarios(args.scenarios, overrides=_overrides(args))
    results = run_reports(scenarios, parallel=not args.serial)
    failed = False
    for result in results:
        for record in equivalence_audit(result.report):
            print(
                f'{result.scenario.name} {record.property} ({record.left}, {record.right}): '
                f'{record.outcome.value}'
            )
            failed |= record.outcome is AuditOutcome.FAIL
    if args.out:
        write_frame(audit_frame(results), args.out)
    return EXIT_MISMATCH if failed else EXIT_OK


def _verify_lemmas(args) -> int:
    config = NumericsConfig().with_overrides(**_overrides(args))
    frame = verify_lemmas(config)
    if args.out:
        write_frame(frame, args.out)
    else:
        sys.stdout.write(frame_csv(frame))
    return EXIT_OK if lemmas_passed(frame) else EXIT_MISMATCH


def _parse_point(text: str) -> complex:
    parts = [float(v) for v in text.split(',')]
    if len(parts) not in (1, 2):
        raise ValueError(f'expected re,im but got {text!r}')
    return complex(parts[0], parts[1] if len(parts) == 2 else 0.0)


def _probe(args) -> int:
    scenarios = {s.name: s for s in load_scenarios(args.scenarios)}
    if args.name not in scenarios:
        raise WdcError(f'no scenario named {args.name!r} in {args.scenarios}')
    f = parse_builtin_spec(args.function)
    z = _parse_point(args.at)
    value = probe(scenarios[args.name], f, z)
    print(f'{value.real:.15g} {value.imag:+.15g}j')
    return EXIT_OK


def _add_numerics(parser: argparse.ArgumentParser, *keys: str):
    if 'shells' in keys:
        parser.add_argument('--shells', type=int, default=None, help='dyadic shells J (default 16)')
    if 'angles' in keys:
        parser.add_argument('--angles', type=int, default=None, help='angles per shell K (default 1024)')
    if 'nmax' in keys:
        parser.add_argument('--nmax', type=int, default=None, help='largest monomial degree (default 256)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='wdc',
        description='Boundedness, compactness and order boundedness checks for '
        'sums of weighted differentiation composition operators.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug')
    parser.add_argument('--log-file', default=None, help='write the log here instead of stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    check = commands.add_parser('check', help='compute reports and compare fixture verdicts')
    check.add_argument('scenarios', help='scenario JSON file')
    check.add_argument('--out', default=None, help='report.json or report.csv')
    check.add_argument('--json', action='store_true', help='print the JSON report to stdout')
    check.add_argument('--serial', action='store_true', help='run scenarios one after another')
    _add_numerics(check, 'shells', 'angles', 'nmax')
    check.set_defaults(handler=_check)

    lemmas = commands.add_parser('verify-lemmas', help='run the lemma verification suite')
    lemmas.add_argument('--out', default=None, help='table.csv or table.json')
    _add_numerics(lemmas, 'shells', 'angles', 'nmax')
    lemmas.set_defaults(handler=_verify_lemmas)

    audit = commands.add_parser('audit', help='equivalence audit of the criteria')
    audit.add_argument('scenarios', help='scenario JSON file')
    audit.add_argument('--out', default=None, help='audit.csv or audit.json')
    audit.add_argument('--serial', action='store_true', help='run scenarios one after another')
    _add_numerics(audit, 'shells', 'angles', 'nmax')
    audit.set_defaults(handler=_audit)

    single = commands.add_parser('probe', help='evaluate (S f)(z) at one point')
    single.add_argument('name', help='scenario name')
    single.add_argument(
        '--scenarios', default=DEFAULT_SCENARIOS, help=f'scenario JSON file (default ./{DEFAULT_SCENARIOS})'
    )
    single.add_argument('--function', required=True, help='builtin, e.g. monomial:3')
    single.add_argument('--at', required=True, help='point as re,im')
    single.set_defaults(handler=_probe)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        # argparse exits with 2 on usage errors, 0 for --help and --version
        return int(error.code or 0)
    _configure_logging(args.verbose, args.log_file)
    logger.debug('main: %s (%s=%s)', args.command, SEED_VARIABLE, NumericsConfig().seed)
    try:
        return args.handler(args)
    except (WdcError, ValueError, OSError) as error:
        logger.debug('main: input error', exc_info=True)
        print(f'error: {error}', file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())

import argparse
import logging
import sys

from ofdmatools.errors import ConfigurationError
from ofdmatools.harness.config import ALGORITHMS, POWER_MODES, ScenarioConfig, load_config
from ofdmatools.harness.runner import emit_results, run_scenario
from ofdmatools.harness.verify import run_verification

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def build_parser():
    parser = argparse.ArgumentParser(
        prog='ofdmatools',
        description='Monte-Carlo comparison of PRB and power allocators in a multi-cell network')
    parser.add_argument('--verbose', action='store_true', help='log at DEBUG level')
    parser.add_argument('--log-file', help='also write the log to this file')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    run = commands.add_parser('run', help='run a scenario and write the summary CSV')
    run.add_argument('config', nargs='?', help='YAML scenario file; defaults apply otherwise')
    run.add_argument('--seed', type=int, dest='master_seed', help='master seed')
    run.add_argument('--drops', type=int, dest='num_drops', help='number of Monte-Carlo drops')
    run.add_argument('--algorithm', nargs='+', choices=ALGORITHMS, help='allocators to compare')
    run.add_argument('--users', type=int, nargs='+', dest='users_per_cell',
                     help='users per cell (N), one or more values')
    run.add_argument('--max-prbs', type=int, dest='max_prbs', help='maximum PRBs per user (M)')
    run.add_argument('--power-mode', nargs='+', choices=POWER_MODES, dest='power_mode',
                     help='uniform power, DPRA, or both')
    run.add_argument('--ipp', type=int, nargs='+', dest='ipp_iterations',
                     help='IPP iteration counts (J) for the dpra power mode')
    run.add_argument('--workers', type=int, help='worker processes')
    run.add_argument('--out', default='-', help='CSV destination, - for stdout (default)')

    verify = commands.add_parser('verify', help='run the self-checks and print a report')
    verify.add_argument('--seed', type=int, default=1, help='seed of the random instances')
    verify.add_argument('--instances', type=int, default=1000,
                        help='random allocation instances for the approximation bound')
    verify.add_argument('--drops', type=int, default=3, help='drops of the feasibility sweep')
    return parser


def configure_logging(verbose=False, log_file=None):
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO, format=LOG_FORMAT,
                        handlers=handlers)


def scenario_from_args(args):
    ''' File values override the defaults, flags override the file '''
    config = load_config(args.config) if args.config else ScenarioConfig()
    return config.replace(master_seed=args.master_seed, num_drops=args.num_drops,
                          algorithm=args.algorithm, users_per_cell=args.users_per_cell,
                          max_prbs=args.max_prbs, power_mode=args.power_mode,
                          ipp_iterations=args.ipp_iterations, workers=args.workers).validate()


def run_command(args):
    config = scenario_from_args(args)
    summary, _ = run_scenario(config)
    emit_results(summary, sys.stdout if args.out == '-' else args.out)
    return 0


def verify_command(args):
    report = run_verification(seed=args.seed, instances=args.instances, drops=args.drops)
    print('\n'.join(report.lines()))
    return 0 if report.passed else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.log_file)
    try:
        if args.command == 'run':
            return run_command(args)
        return verify_command(args)
    except (ConfigurationError, IOError) as err:
        logger.error('%s', err)
        return 2


if __name__ == '__main__':
    sys.exit(main())

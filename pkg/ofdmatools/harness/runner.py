import logging
from multiprocessing import Pool

import numpy as np

from ofdmatools.allocators import ALLOCATORS
from ofdmatools.errors import FeasibilityError
from ofdmatools.metrics import SUMMARY_COLUMNS, DropResult, aggregate
from ofdmatools.network import (build_hex_grid, compute_rates, draw_channel, drop_users,
                                uniform_power)
from ofdmatools.power import ipp

logger = logging.getLogger(__name__)

# Relative slack when re-checking target rates: allocation under fixed power only suffers from
# summation order, DPRA shaves rates to the target exactly
UNIFORM_RTOL = 1e-12
DPRA_RTOL = 1e-9

FLOAT_FORMAT = '%.6f'


def drop_seed(master_seed, drop_index):
    ''' Seed of one drop, derived from the master seed and the drop index only '''
    return int(np.random.SeedSequence([int(master_seed), int(drop_index)]).generate_state(1)[0])


def build_drop(config, users_per_cell, seed):
    '''
    Topology, users and channel of one drop. The users and channel only depend on `seed`, so all
    algorithms of a drop are compared on the same realization.
    '''
    topology = build_hex_grid(inter_site_distance=config.inter_site_distance_m,
                              num_cells=config.num_cells, total_power=config.total_power_w,
                              num_prbs=config.num_prbs, system_bandwidth=config.system_bandwidth_hz)
    population = drop_users(topology, users_per_cell, seed, target_rate=config.target_rate_bps)
    channel = draw_channel(topology, population, seed, intercept_db=config.pathloss_intercept_db,
                           slope_db=config.pathloss_slope_db, shadow_std_db=config.shadow_std_db,
                           noise_power=config.noise_power_w)
    return topology, population, channel


def check_allocations(topology, population, channel, allocations, powers, max_prbs, rtol):
    '''
    Check every cell's allocation against the rates under `powers`: PRB exclusivity, at most
    `max_prbs` PRBs per user, served users at their target and served/dropped users covering the
    cell. Also checks that no cell exceeds its power budget.

    Raises
    ------
    FeasibilityError
        Listing every violation found, prefixed with the cell.
    '''
    rates = compute_rates(topology, population, channel, powers)
    problems = []
    for cell in sorted(allocations):
        found = allocations[cell].violations(rates.rate, population.target_rate, max_prbs,
                                             users=population.users_in(cell), rtol=rtol)
        problems.extend('cell %d: %s' % (cell, p) for p in found)
    if not powers.within_budget(topology):
        problems.append('power budget exceeded: %s W' % powers.power.sum(axis=1))
    if problems:
        raise FeasibilityError(problems)


def simulate_drop(config, users_per_cell, drop_index):
    '''
    Run every (algorithm, power mode, J) combination of `config` on one drop.

    Uniform-power results are reported with J = 1. DPRA results come from a single IPP run with
    the largest requested J; the state after iteration j is reported for every requested j.

    Returns
    -------
    results : list of DropResult
    '''
    seed = drop_seed(config.master_seed, drop_index)
    topology, population, channel = build_drop(config, users_per_cell, seed)
    uniform = uniform_power(topology)
    results = []

    def record(algorithm, power_mode, j, allocations, powers, reported_sets, dpra_rounds):
        results.append(DropResult.from_allocations(
            allocations, powers.total(), algorithm=algorithm, power_mode=power_mode,
            max_prbs=config.max_prbs, users_per_cell=users_per_cell, seed=seed,
            ipp_iterations=j, drop_index=drop_index, dpra_rounds=dpra_rounds,
            reported_sets=[reported_sets[c] for c in sorted(reported_sets)]))

    for algorithm in config.algorithm:
        allocator = ALLOCATORS[algorithm](config.max_prbs)
        if 'uniform' in config.power_mode:
            rates = compute_rates(topology, population, channel, uniform)
            allocations = allocator.allocate_network(population, rates, seed=seed)
            check_allocations(topology, population, channel, allocations, uniform,
                              config.max_prbs, UNIFORM_RTOL)
            record(algorithm, 'uniform', 1, allocations, uniform,
                   dict(getattr(allocator, 'reported_sets', {})), 0)

        if 'dpra' in config.power_mode:
            result = ipp(topology, population, channel, allocator,
                         iterations=max(config.ipp_iterations), seed=seed,
                         max_rounds=config.max_dpra_rounds, tolerance=config.dpra_tolerance)
            for j in sorted(set(config.ipp_iterations)):
                state = result.iterations[j - 1]
                check_allocations(topology, population, channel, state.allocations, state.powers,
                                  config.max_prbs, DPRA_RTOL)
                if np.any(state.powers.power > uniform.power * (1.0 + UNIFORM_RTOL)):
                    raise FeasibilityError(['a PRB ends above the uniform per-PRB power'])
                record(algorithm, 'dpra', j, state.allocations, state.powers,
                       state.reported_sets, result.dpra_rounds(j))

    return results


def _simulate_task(task):
    config, users_per_cell, drop_index = task
    return simulate_drop(config, users_per_cell, drop_index)


def run_scenario(config):
    '''
    Run `config.num_drops` drops for every users-per-cell value and summarize them.

    Drops are independent: with `config.workers > 1` they are spread over a process pool, and
    results are gathered in task order so the summary does not depend on scheduling.

    Returns
    -------
    summary : pandas.DataFrame
        Output of `metrics.aggregate`.
    results : list of DropResult
    '''
    config.validate()
    tasks = [(config, n, index) for n in config.users_per_cell
             for index in range(config.num_drops)]
    logger.info('Running %d drops for N in %s, algorithms %s, power modes %s (M = %d)',
                config.num_drops, list(config.users_per_cell), list(config.algorithm),
                list(config.power_mode), config.max_prbs)

    results = []
    progress_step = max(len(tasks) // 10, 1)
    if config.workers > 1:
        with Pool(config.workers) as pool:
            for done, drop_results in enumerate(pool.imap(_simulate_task, tasks), 1):
                results.extend(drop_results)
                if done % progress_step == 0:
                    logger.info('%d/%d drops done', done, len(tasks))
    else:
        for done, task in enumerate(tasks, 1):
            results.extend(_simulate_task(task))
            if done % progress_step == 0:
                logger.info('%d/%d drops done', done, len(tasks))

    summary = aggregate(results)
    logger.info('Scenario finished: %d configurations over %d drops', len(summary), len(tasks))
    return summary, results


def emit_results(table, destination):
    '''
    Write the summary table as CSV with the columns of `SUMMARY_COLUMNS`, rows sorted by
    configuration. `destination` is a path or an open text file.

    Raises
    ------
    ValueError
        If the table is empty.
    IOError
        If the destination cannot be written.
    '''
    if table is None or len(table) == 0:
        raise ValueError('Refusing to write an empty results table')
    table = table.sort_values(SUMMARY_COLUMNS[:5], kind='mergesort')[SUMMARY_COLUMNS]
    try:
        table.to_csv(destination, index=False, float_format=FLOAT_FORMAT)
    except OSError as err:
        raise IOError('Cannot write results to %s: %s' % (destination, err))
    logger.info('Wrote %d rows to %s', len(table), getattr(destination, 'name', destination))

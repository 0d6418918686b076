import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from scipy import stats

logger = logging.getLogger(__name__)

CONFIDENCE = 0.95

SUMMARY_COLUMNS = ['algorithm', 'power_mode', 'M', 'N', 'J', 'drops', 'mean_dropped',
                   'ci_dropped', 'mean_eta', 'ci_eta', 'mean_total_power_w']

GROUP_COLUMNS = ['algorithm', 'power_mode', 'M', 'N', 'J']

# Kept in the summary table but not written to the CSV
STDERR_COLUMNS = ['stderr_dropped', 'stderr_eta']


@dataclass
class DropResult:
    '''
    Outcome of one algorithm on one drop.

    Attributes
    ----------
    served, dropped : list of int
        Number of served and dropped users of every cell.
    prb_counts : list of list of int
        PRBs held by each served user of every cell.
    total_power : float
        Power radiated by all cells, in watts.
    reported_sets : list of int
        Candidate sets reported to each cell (allocation-graph vertices), when known.
    dpra_rounds : int
        DPRA rounds spent over all IPP iterations.
    '''

    algorithm: str
    power_mode: str
    max_prbs: int
    users_per_cell: int
    seed: int
    ipp_iterations: int
    served: list
    dropped: list
    prb_counts: list
    total_power: float = 0.0
    reported_sets: list = field(default_factory=list)
    dpra_rounds: int = 0
    drop_index: int = 0

    @classmethod
    def from_allocations(cls, allocations, total_power, **kwargs):
        cells = sorted(allocations)
        return cls(served=[len(allocations[c].satisfied_users) for c in cells],
                   dropped=[len(allocations[c].dropped_users) for c in cells],
                   prb_counts=[allocations[c].prb_counts() for c in cells],
                   total_power=total_power, **kwargs)

    @property
    def key(self):
        return (self.algorithm, self.power_mode, self.max_prbs, self.users_per_cell,
                self.ipp_iterations)

    @property
    def mean_dropped(self):
        ''' Dropped users per cell '''
        return float(np.mean(self.dropped))

    @property
    def load(self):
        return sum(sum(counts) for counts in self.prb_counts)


def eta(result):
    '''
    Average number of PRBs per satisfied user: the mean PRB count of each cell's satisfied users,
    averaged over the cells. Cells without satisfied users are left out of the average.

    Returns
    -------
    eta : float or None
        None when no cell serves anybody.
    '''
    per_cell = [float(np.mean(counts)) for counts in result.prb_counts if len(counts) > 0]
    skipped = len(result.prb_counts) - len(per_cell)
    if skipped:
        logger.debug('eta: %d cells without satisfied users left out (drop %d)', skipped,
                     result.drop_index)
    if not per_cell:
        return None
    return float(np.mean(per_cell))


def summarize(values, confidence=CONFIDENCE):
    '''
    Mean, standard error and confidence half-width (normal approximation) of `values`. With less
    than two values the spread is unknown and reported as NaN.
    '''
    values = np.asarray(values, dtype=float)
    if len(values) == 0:
        return float('nan'), float('nan'), float('nan')
    mean = float(np.mean(values))
    if len(values) < 2:
        return mean, float('nan'), float('nan')
    stderr = float(np.std(values, ddof=1) / np.sqrt(len(values)))
    return mean, stderr, float(stats.norm.ppf(0.5 + confidence / 2.0) * stderr)


def aggregate(results, confidence=CONFIDENCE):
    '''
    Summarize drop results per (algorithm, power mode, M, N, J): mean dropped users per cell and
    mean eta, each with its standard error and confidence half-width, and the mean radiated power.

    Returns
    -------
    summary : pandas.DataFrame
        One row per configuration with the columns of `SUMMARY_COLUMNS` followed by
        `STDERR_COLUMNS`, sorted by configuration.
    '''
    records = pd.DataFrame([{
        'algorithm': r.algorithm, 'power_mode': r.power_mode, 'M': r.max_prbs,
        'N': r.users_per_cell, 'J': r.ipp_iterations, 'drop': r.drop_index,
        'dropped': r.mean_dropped, 'eta': eta(r), 'power': r.total_power,
    } for r in results])
    if records.empty:
        return pd.DataFrame(columns=SUMMARY_COLUMNS + STDERR_COLUMNS)

    rows = []
    records = records.sort_values(GROUP_COLUMNS + ['drop'], kind='mergesort')
    for key, group in records.groupby(GROUP_COLUMNS, sort=True):
        mean_dropped, stderr_dropped, ci_dropped = summarize(group['dropped'], confidence)
        mean_eta, stderr_eta, ci_eta = summarize(group['eta'].dropna(), confidence)
        rows.append(dict(zip(GROUP_COLUMNS, key), drops=len(group), mean_dropped=mean_dropped,
                         ci_dropped=ci_dropped, mean_eta=mean_eta, ci_eta=ci_eta,
                         mean_total_power_w=float(group['power'].mean()),
                         stderr_dropped=stderr_dropped, stderr_eta=stderr_eta))
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS + STDERR_COLUMNS)

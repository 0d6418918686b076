import itertools
import math
from functools import lru_cache

import numpy as np

from ofdmatools.errors import ConfigurationError


@lru_cache(maxsize=None)
def _combinations(num_items, size):
    ''' All `size`-subsets of range(num_items) in lexicographic order, as a read-only array '''
    combos = np.array(list(itertools.combinations(range(num_items), size)), dtype=int)
    combos = combos.reshape(-1, size)
    combos.setflags(write=False)
    return combos


def set_rate(user_rates, prbs):
    ''' Total rate a user obtains from the PRBs in `prbs` '''
    return math.fsum(user_rates[n] for n in prbs)


def minimal_allocation_sets(user_rates, target_rate, max_prbs):
    '''
    Enumerate the minimal resource allocation sets of one user: every set of at most `max_prbs`
    PRBs whose rates add up to `target_rate`, such that no proper subset does.

    Sets are enumerated by increasing size. Since rates are non-negative, a satisfying set is
    minimal exactly when dropping its lowest-rate PRB breaks the target, which skips every
    superset of a set already found. PRBs with zero rate never enter a candidate set.

    Parameters
    ----------
    user_rates : array-like, shape (prbs,)
        Achievable rate of the user on each PRB, in bits/s.
    target_rate : float
        Rate the user must reach, in bits/s.
    max_prbs : int
        Maximum number of PRBs per user (M).

    Returns
    -------
    family : list of tuple
        PRB indices of each minimal set, ordered by size then lexicographically. An empty list
        means the user cannot be satisfied.

    Examples
    --------
    >>> minimal_allocation_sets([4e6, 3e6, 2e6, 1e6], 5e6, 2)
    [(0, 1), (0, 2), (0, 3), (1, 2)]
    '''
    if max_prbs < 1:
        raise ConfigurationError('max_prbs must be at least 1, got %r' % (max_prbs,))

    user_rates = np.asarray(user_rates, dtype=float)
    candidates = np.flatnonzero(user_rates > 0)

    family = []
    for size in range(1, min(max_prbs, len(candidates)) + 1):
        combos = candidates[_combinations(len(candidates), size)]
        values = user_rates[combos]
        totals = values.sum(axis=1)
        satisfied = totals >= target_rate
        if size > 1:
            satisfied &= (totals - values.min(axis=1)) < target_rate
        family.extend(tuple(int(n) for n in combo) for combo in combos[satisfied])

    return family

import numpy as np

from ofdmatools.allocators.allocator import Allocator, AllocationMatrix
from ofdmatools.network.topology import substream

# Substream of the drop seed used to shuffle users in random greedy allocation
ORDERING_STREAM = 3


def greedy_allocate(order, rates, targets, max_prbs, users=None):
    '''
    Serve users one at a time in the given `order`. Each user takes its best free PRBs (highest
    rate first, lowest index on ties) until its target is met; a user still short of its target
    after `max_prbs` PRBs gives them back and is dropped.

    Parameters
    ----------
    order : sequence of int
        Row indices into `rates`, in serving order.
    rates : ndarray, shape (users, prbs)
    targets : sequence of float
    max_prbs : int
    users : sequence of int, optional
        User id of each row. Defaults to the row index.
    '''
    rates = np.asarray(rates, dtype=float)
    users = list(range(len(rates))) if users is None else [int(u) for u in users]
    free = np.ones(rates.shape[1], dtype=bool)
    assignment, dropped = {}, set()

    for row in order:
        # Stable sort on the negated rates keeps the lowest index first among equal rates
        ranked = [n for n in np.argsort(-rates[row], kind='stable')
                  if free[n] and rates[row, n] > 0]
        taken, total = [], 0.0
        for prb in ranked[:max_prbs]:
            taken.append(int(prb))
            total += rates[row, prb]
            if total >= targets[row]:
                break

        if taken and total >= targets[row]:
            free[taken] = False
            assignment[users[row]] = taken
        else:
            dropped.add(users[row])

    return AllocationMatrix(assignment=assignment, dropped_users=dropped)


def rg_allocate(rates, targets, max_prbs, rng, users=None):
    ''' Random greedy: users are served in an order shuffled by `rng` '''
    order = rng.permutation(len(rates))
    return greedy_allocate(order, rates, targets, max_prbs, users)


def meg_allocate(rates, targets, max_prbs, users=None):
    '''
    Mean enhanced greedy: users are served by ascending mean rate over all PRBs, so the users with
    the worst channels go first. Ties keep the user order.
    '''
    order = np.argsort(np.mean(rates, axis=1), kind='stable')
    return greedy_allocate(order, rates, targets, max_prbs, users)


class RandomGreedyAllocator(Allocator):

    label = 'rg'

    def allocate(self, users, rates, targets, cell=0, seed=0):
        rng = substream(seed, ORDERING_STREAM, cell)
        return rg_allocate(rates, targets, self.max_prbs, rng, users)


class MeanEnhancedGreedyAllocator(Allocator):

    label = 'meg'

    def allocate(self, users, rates, targets, cell=0, seed=0):
        return meg_allocate(rates, targets, self.max_prbs, users)

from dataclasses import dataclass, field

import numpy as np

from ofdmatools.errors import FeasibilityError
from ofdmatools.graphs.allocationsets import set_rate


@dataclass(frozen=True)
class AllocationMatrix:
    '''
    PRB assignment of one cell. `assignment` maps every served user to its PRBs; dropped users
    have no entry.
    '''

    assignment: dict = field(default_factory=dict)
    dropped_users: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'assignment', {int(u): frozenset(int(n) for n in prbs)
                                                for u, prbs in self.assignment.items()})
        object.__setattr__(self, 'dropped_users', frozenset(int(u) for u in self.dropped_users))

    @property
    def satisfied_users(self):
        return frozenset(self.assignment)

    @property
    def users(self):
        return self.satisfied_users | self.dropped_users

    @property
    def load(self):
        ''' Number of occupied PRBs in the cell '''
        return sum(len(prbs) for prbs in self.assignment.values())

    @property
    def serves_all(self):
        return not self.dropped_users

    def prbs(self, user):
        return self.assignment.get(user, frozenset())

    def prb_counts(self):
        return [len(self.assignment[u]) for u in sorted(self.assignment)]

    def allocated_prbs(self):
        return frozenset().union(*self.assignment.values())

    def unallocated_prbs(self, num_prbs):
        return frozenset(range(num_prbs)) - self.allocated_prbs()

    def as_matrix(self, users, num_prbs):
        ''' Binary matrix X with X[k, n] = 1 when PRB n is given to users[k] '''
        matrix = np.zeros((len(users), num_prbs), dtype=int)
        for row, user in enumerate(users):
            matrix[row, sorted(self.prbs(user))] = 1
        return matrix

    def violations(self, rates, targets, max_prbs, users=None, rtol=0.0):
        '''
        List every constraint the allocation breaks.

        Parameters
        ----------
        rates : mapping or ndarray
            `rates[user]` gives the per-PRB rates the allocation was computed with.
        targets : mapping or ndarray
            `targets[user]` gives the user's target rate.
        max_prbs : int
            Maximum number of PRBs per user (M).
        users : iterable, optional
            Every user of the cell; checks that served and dropped users partition them.
        rtol : float
            Relative slack on the target rates.
        '''
        problems = []
        owner_of = {}
        for user in sorted(self.assignment):
            prbs = self.assignment[user]
            for prb in sorted(prbs):
                if prb in owner_of:
                    problems.append('PRB %d given to users %d and %d' % (prb, owner_of[prb], user))
                owner_of[prb] = user
            if not 1 <= len(prbs) <= max_prbs:
                problems.append('user %d holds %d PRBs (M = %d)' % (user, len(prbs), max_prbs))
            total = set_rate(rates[user], sorted(prbs))
            if total < targets[user] * (1.0 - rtol):
                problems.append('user %d gets %.6g b/s below its target %.6g b/s'
                                % (user, total, targets[user]))

        overlap = self.satisfied_users & self.dropped_users
        if overlap:
            problems.append('users %s are both served and dropped' % sorted(overlap))
        if users is not None and frozenset(int(u) for u in users) != self.users:
            problems.append('served and dropped users do not cover the cell')
        return problems

    def validate(self, *args, **kwargs):
        ''' Raise FeasibilityError listing the output of `violations()` if it is not empty '''
        problems = self.violations(*args, **kwargs)
        if problems:
            raise FeasibilityError(problems)
        return self


class Allocator(object):
    '''
    Define interface of methods that must be implemented by all inheriting allocators. An
    allocator assigns the PRBs of one cell under a fixed power map.
    '''

    label = None

    def __init__(self, max_prbs):
        self.max_prbs = max_prbs


    def allocate(self, users, rates, targets, cell=0, seed=0):
        '''
        Assign PRBs to the users of one cell.

        Parameters
        ----------
        users : sequence of int
            Ids of the cell's users.
        rates : ndarray, shape (len(users), prbs)
            Row k holds the per-PRB rates of users[k] under the current power map.
        targets : sequence of float
            Target rate of each user, aligned with `users`.
        cell : int
            Id of the cell, for allocators that draw random numbers.
        seed : int
            Seed of the current drop, for allocators that draw random numbers.

        Returns
        -------
        allocation : AllocationMatrix
        '''
        raise NotImplementedError(
            'Classes inheriting from Allocator must override Allocator.allocate()')


    def allocate_network(self, population, rates, seed=0):
        ''' Run `allocate()` on every cell; returns a dict cell -> AllocationMatrix '''
        allocations = {}
        for cell in np.unique(population.serving_cell):
            users = population.users_in(cell)
            allocations[int(cell)] = self.allocate(
                [int(u) for u in users], rates.cell_rates(users),
                population.target_rate[users], cell=int(cell), seed=seed)
        return allocations

import dataclasses
import logging
from dataclasses import dataclass, field

import numpy as np

from ofdmatools.allocators.allocator import AllocationMatrix
from ofdmatools.graphs.allocationsets import set_rate
from ofdmatools.network.channel import PowerMap, compute_rates, uniform_power
from ofdmatools.power.dpra import DEFAULT_MAX_ROUNDS, DEFAULT_TOLERANCE, dpra_network

logger = logging.getLogger(__name__)


@dataclass
class IppIteration:
    '''
    State reached after one allocation + DPRA iteration. Since every iteration only depends on
    the previous one, iteration j holds exactly what a run with J = j would return.

    Attributes
    ----------
    rounds : list of DpraRound
        Trace of the DPRA run of this iteration.
    accepted : bool
        False when the iteration dropped more users than the one before it, in which case the
        previous allocations and powers are carried over.
    '''

    index: int
    allocations: dict
    powers: object
    converged: bool
    rounds: list = field(default_factory=list)
    reported_sets: dict = field(default_factory=dict)
    accepted: bool = True

    @property
    def dpra_rounds(self):
        return len(self.rounds)

    @property
    def dropped(self):
        return sum(len(a.dropped_users) for a in self.allocations.values())

    @property
    def load(self):
        return sum(a.load for a in self.allocations.values())

    @property
    def total_power(self):
        return self.powers.total()


@dataclass
class IppResult:
    iterations: list

    @property
    def allocations(self):
        return self.iterations[-1].allocations

    @property
    def powers(self):
        return self.iterations[-1].powers

    @property
    def reported_sets(self):
        return self.iterations[-1].reported_sets

    def dpra_rounds(self, iterations=None):
        ''' DPRA rounds spent over the first `iterations` iterations (all by default) '''
        return sum(it.dpra_rounds for it in self.iterations[:iterations])


def switch_on(topology, allocations):
    ''' Power map with every allocated PRB at the uniform per-PRB power and the others off '''
    uniform = uniform_power(topology).power
    power = np.zeros_like(uniform)
    for cell, allocation in allocations.items():
        users = sorted(allocation.assignment)
        if users:
            used = allocation.as_matrix(users, topology.num_prbs).any(axis=0)
            power[cell] = np.where(used, uniform[cell], 0.0)
    return PowerMap(power=power)


def admit(topology, population, channel, allocations):
    '''
    Switch on the PRBs of `allocations` and drop the users that miss their target under the
    resulting interference, until every remaining user reaches it. Dropping a user only lowers
    the interference seen by the others.

    Returns
    -------
    allocations : dict
        cell -> AllocationMatrix, feasible under `powers`.
    powers : PowerMap
    '''
    allocations = dict(allocations)
    targets = population.target_rate
    while True:
        powers = switch_on(topology, allocations)
        rates = compute_rates(topology, population, channel, powers)
        short = {cell: [u for u in sorted(a.assignment)
                        if set_rate(rates.rate[u], sorted(a.assignment[u])) < targets[u]]
                 for cell, a in allocations.items()}
        short = {cell: users for cell, users in short.items() if users}
        if not short:
            return allocations, powers

        logger.debug('IPP admission drops %d users', sum(len(u) for u in short.values()))
        for cell, users in short.items():
            allocation = allocations[cell]
            allocations[cell] = AllocationMatrix(
                assignment={u: p for u, p in allocation.assignment.items() if u not in users},
                dropped_users=allocation.dropped_users.union(users))


def ipp(topology, population, channel, allocator, iterations=1, seed=0,
        max_rounds=DEFAULT_MAX_ROUNDS, tolerance=DEFAULT_TOLERANCE):
    '''
    Iterative PRB and power allocation.

    The first iteration allocates PRBs under uniform power and runs DPRA on the result. Every
    later iteration allocates again with the interference of the power map left by DPRA, each
    cell evaluating its own PRBs at the uniform per-PRB power. The new allocation starts from
    its PRBs switched on at uniform power; users missing their target once all cells transmit
    are dropped (`admit`) and DPRA runs once more. An iteration that ends with more dropped users
    than the previous one is not accepted and the previous state is kept.

    Parameters
    ----------
    allocator : Allocator
        PRB allocator run in every cell, usually an `MWDGAllocator`.
    iterations : int
        Number J of allocation + DPRA iterations, at least 1.
    seed : int
        Seed of the drop, handed to allocators that draw random numbers.

    Returns
    -------
    result : IppResult
    '''
    if iterations < 1:
        raise ValueError('IPP needs at least one iteration, got %r' % (iterations,))

    uniform = uniform_power(topology)
    history = []
    for index in range(1, iterations + 1):
        if history:
            rates = compute_rates(topology, population, channel, history[-1].powers,
                                  own_powers=uniform)
            allocations = allocator.allocate_network(population, rates, seed=seed)
            reported_sets = dict(getattr(allocator, 'reported_sets', {}))
            allocations, start = admit(topology, population, channel, allocations)
        else:
            rates = compute_rates(topology, population, channel, uniform)
            allocations = allocator.allocate_network(population, rates, seed=seed)
            reported_sets = dict(getattr(allocator, 'reported_sets', {}))
            start = uniform

        dpra = dpra_network(topology, population, channel, allocations, start,
                            max_rounds=max_rounds, tolerance=tolerance)
        state = IppIteration(index=index, allocations=dpra.allocations, powers=dpra.powers,
                             converged=dpra.converged, rounds=dpra.rounds,
                             reported_sets=reported_sets)
        if history and state.dropped > history[-1].dropped:
            logger.debug('IPP iteration %d drops %d users against %d, keeping the previous state',
                         index, state.dropped, history[-1].dropped)
            state = dataclasses.replace(history[-1], index=index, rounds=dpra.rounds,
                                        accepted=False)
        history.append(state)
        logger.debug('IPP iteration %d: %d dropped, load %d, %d DPRA rounds', index,
                     state.dropped, state.load, state.dpra_rounds)

    return IppResult(iterations=history)

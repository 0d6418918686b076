import logging
from dataclasses import dataclass, field

import numpy as np

from ofdmatools.allocators.allocator import AllocationMatrix
from ofdmatools.errors import ContractError
from ofdmatools.graphs.allocationsets import set_rate
from ofdmatools.network.channel import PowerMap, compute_rates

logger = logging.getLogger(__name__)

DEFAULT_MAX_ROUNDS = 50
DEFAULT_TOLERANCE = 1e-6


def delta_power(rate_on_prb, excess_rate, interference, noise, gain, bandwidth):
    '''
    Power reduction on one PRB that lowers its rate by exactly `excess_rate` under the current
    interference: `2^(r/B) * (1 - 2^(-dr/B)) * (I + noise) / h`.

    Parameters
    ----------
    rate_on_prb : float
        Current rate r on the PRB in bits/s.
    excess_rate : float
        Rate dr to give up, with 0 <= dr < r.
    interference, noise : float
        Interference and noise power on the PRB in watts.
    gain : float
        Linear gain towards the serving base station.
    bandwidth : float
        PRB bandwidth B in Hz.
    '''
    if not 0.0 <= excess_rate < rate_on_prb:
        raise ContractError('delta_power needs 0 <= excess < rate, got excess %r and rate %r'
                            % (excess_rate, rate_on_prb))
    if excess_rate == 0.0:
        return 0.0
    log2 = np.log(2.0)
    growth = np.exp(rate_on_prb * log2 / bandwidth)
    shrink = -np.expm1(-excess_rate * log2 / bandwidth)
    return float(growth * shrink * (interference + noise) / gain)


@dataclass
class DpraCellStep:
    '''
    Outcome of one DPRA step in one cell.

    Attributes
    ----------
    cell : int
    powers : ndarray
        New transmit power of the cell on every PRB.
    allocation : AllocationMatrix
        Allocation after freeing the PRBs whose rate was covered by the excess.
    freed_prbs : set
        PRBs whose power was set to zero in this step.
    shaved_prb : dict
        user -> (PRB m*, power reduction) for every user with a positive excess.
    excess_rate : dict
        user -> rate in excess of the target after freeing PRBs.
    '''

    cell: int
    powers: np.ndarray
    allocation: AllocationMatrix
    freed_prbs: set = field(default_factory=set)
    shaved_prb: dict = field(default_factory=dict)
    excess_rate: dict = field(default_factory=dict)


def dpra_cell(cell, allocation, rates, powers, channel, targets, bandwidth):
    '''
    One power reassignment step of one cell, against the rates and interference in `rates`.

    Unallocated PRBs are switched off. Then, for each served user, PRBs are released (lowest rate
    first) while the lowest rate is covered by the user's excess rate, and the remaining excess is
    removed from the single PRB where it saves the most power, so that the user ends up exactly at
    its target.

    Parameters
    ----------
    cell : int
    allocation : AllocationMatrix
    rates : RateTable
    powers : PowerMap
    channel : ChannelTensor
    targets : ndarray
        Target rate of every user, indexed by user id.
    bandwidth : float
        PRB bandwidth in Hz.

    Returns
    -------
    step : DpraCellStep
    '''
    new_powers = np.array(powers.power[cell], dtype=float)
    step = DpraCellStep(cell=cell, powers=new_powers, allocation=allocation)

    for prb in sorted(allocation.unallocated_prbs(len(new_powers))):
        if new_powers[prb] > 0:
            step.freed_prbs.add(prb)
        new_powers[prb] = 0.0

    assignment = {}
    for user in sorted(allocation.assignment):
        user_rates = rates.rate[user]
        prbs = sorted(allocation.assignment[user])
        excess = max(set_rate(user_rates, prbs) - targets[user], 0.0)

        while len(prbs) > 1:
            weakest = min(prbs, key=lambda n: (user_rates[n], n))
            if user_rates[weakest] > excess:
                break
            prbs.remove(weakest)
            new_powers[weakest] = 0.0
            step.freed_prbs.add(weakest)
            excess -= user_rates[weakest]

        assignment[user] = prbs
        step.excess_rate[user] = excess
        if excess <= 0.0:
            continue

        savings = [(delta_power(user_rates[n], excess, rates.interference[user, n],
                                channel.noise_power, channel.gain[user, n, cell], bandwidth), n)
                   for n in prbs]
        saving, best = max(savings, key=lambda item: (item[0], -item[1]))
        new_powers[best] = max(new_powers[best] - saving, 0.0)
        step.shaved_prb[user] = (best, saving)

    step.allocation = AllocationMatrix(assignment=assignment,
                                       dropped_users=allocation.dropped_users)
    return step


@dataclass(frozen=True)
class DpraRound:
    index: int
    total_power: float
    max_change: float
    loads: tuple

    def to_line(self):
        return 'round=%d total_power_w=%.9g max_change_w=%.9g loads=%s' % (
            self.index, self.total_power, self.max_change, ','.join(str(n) for n in self.loads))


@dataclass
class DpraResult:
    powers: PowerMap
    allocations: dict
    rounds: list
    converged: bool

    def trace_lines(self):
        return [r.to_line() for r in self.rounds]


def dpra_network(topology, population, channel, allocations, powers,
                 max_rounds=DEFAULT_MAX_ROUNDS, tolerance=DEFAULT_TOLERANCE):
    '''
    Synchronous DPRA over all cells. In every round each cell takes one `dpra_cell` step against
    the rates of the previous round's power map; the new powers of all cells are applied at once.
    Rounds stop once no per-PRB power moves by more than `tolerance` times the uniform per-PRB
    power P/|pi| of the topology, or after `max_rounds`. The threshold does not depend on
    `powers`.

    Parameters
    ----------
    allocations : dict
        cell -> AllocationMatrix computed under `powers`.
    powers : PowerMap
        Starting power map.

    Returns
    -------
    result : DpraResult
    '''
    epsilon = tolerance * float(np.mean(topology.total_power)) / topology.num_prbs
    allocations = dict(allocations)
    targets = population.target_rate
    rounds = []
    converged = False

    for index in range(1, max_rounds + 1):
        rates = compute_rates(topology, population, channel, powers)
        next_power = np.array(powers.power, dtype=float)
        for cell in sorted(allocations):
            step = dpra_cell(cell, allocations[cell], rates, powers, channel, targets,
                             topology.prb_bandwidth)
            next_power[cell] = step.powers
            allocations[cell] = step.allocation

        # Powers never go up; the clamp only absorbs round-off
        next_power = np.minimum(next_power, powers.power)
        max_change = float(np.max(powers.power - next_power)) if next_power.size else 0.0
        powers = PowerMap(power=next_power)
        rounds.append(DpraRound(index=index, total_power=powers.total(), max_change=max_change,
                                loads=tuple(allocations[c].load for c in sorted(allocations))))
        logger.debug('DPRA %s', rounds[-1].to_line())

        if max_change < epsilon:
            converged = True
            break

    if not converged:
        logger.warning('DPRA did not converge within %d rounds (last change %.3g W)',
                       max_rounds, rounds[-1].max_change if rounds else 0.0)
    return DpraResult(powers=powers, allocations=allocations, rounds=rounds, converged=converged)

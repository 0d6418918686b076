import numpy as np

from ofdmatools.graphs import build_graph, minimal_allocation_sets
from ofdmatools.network.topology import substream

# Substream of the master seed reserved for random allocation instances
INSTANCE_STREAM = 7


def random_rates(rng, num_users, num_prbs):
    ''' Per-PRB rates and targets such that one to three PRBs are usually needed per user '''
    rates = rng.exponential(1.0, size=(num_users, num_prbs))
    targets = rng.uniform(0.5, 2.5, size=num_users)
    return rates, targets


def random_instance(seed, index, num_prbs=None, num_users=None, max_prbs=None):
    '''
    Allocation graph of a random cell built from real minimal-set enumeration. Unspecified sizes
    are drawn from |pi| in [4, 10], 2 to 6 users and M in {1, 2, 3}.

    Returns
    -------
    graph : AllocGraph
    max_prbs : int
    '''
    rng = substream(seed, INSTANCE_STREAM, index)
    num_prbs = int(rng.integers(4, 11)) if num_prbs is None else num_prbs
    num_users = int(rng.integers(2, 7)) if num_users is None else num_users
    max_prbs = int(rng.integers(1, 4)) if max_prbs is None else max_prbs
    rates, targets = random_rates(rng, num_users, num_prbs)
    families = {user: minimal_allocation_sets(rates[user], targets[user], max_prbs)
                for user in range(num_users)}
    return build_graph(families, num_prbs), max_prbs


def random_instances(seed, count, max_vertices=None, **kwargs):
    ''' Yield `count` (graph, M) pairs, skipping graphs with more than `max_vertices` vertices '''
    index = produced = 0
    while produced < count:
        graph, max_prbs = random_instance(seed, index, **kwargs)
        index += 1
        if max_vertices is not None and graph.num_vertices > max_vertices:
            continue
        produced += 1
        yield graph, max_prbs

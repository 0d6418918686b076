import logging
from dataclasses import dataclass

import numpy as np

from ofdmatools.allocators.allocator import Allocator, AllocationMatrix
from ofdmatools.graphs import build_graph, minimal_allocation_sets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MwdgStep:
    iteration: int
    selected: int
    removed: frozenset
    remaining: int


class MwdgTrace(list):
    ''' Ordered list of `MwdgStep`, one per selected vertex '''

    def selected(self):
        return [step.selected for step in self]

    def removed(self):
        return frozenset().union(*(step.removed for step in self))


def mwdg(graph):
    '''
    Minimal weighted-degree greedy selection of an independent set of `graph`.

    Each iteration picks the remaining vertex with the smallest weighted degree (lowest vertex id
    on ties), gives its PRB set to its owner and removes the vertex with all of its neighbors.
    Users whose clique disappears without a selection are dropped, as are the users that never
    made it into the graph.

    Returns
    -------
    allocation : AllocationMatrix
    trace : MwdgTrace
    '''
    alive = np.ones(graph.num_vertices, dtype=bool)
    trace = MwdgTrace()
    assignment = {}

    while alive.any():
        degrees = np.where(alive, graph.weighted_degrees(alive), np.inf)
        chosen = int(np.argmin(degrees))
        removed = graph.closed_neighborhood(chosen) & alive
        alive &= ~removed

        assignment[graph.owner(chosen)] = graph.prb_sets[chosen]
        trace.append(MwdgStep(iteration=len(trace) + 1, selected=chosen,
                              removed=frozenset(int(v) for v in np.flatnonzero(removed)),
                              remaining=int(alive.sum())))
        logger.debug('MWDG iteration %d: vertex %d (user %d, PRBs %s, d_w %.4f), %d left',
                     len(trace), chosen, graph.owner(chosen), graph.prb_sets[chosen],
                     degrees[chosen], trace[-1].remaining)

    dropped = (set(graph.cliques) - set(assignment)) | graph.excluded_users
    return AllocationMatrix(assignment=assignment, dropped_users=dropped), trace


class MWDGAllocator(Allocator):
    '''
    Load-minimizing allocator: every user reports its minimal allocation sets, the cell builds
    the allocation graph and picks an independent set with `mwdg()`.
    '''

    label = 'mwdg'

    def __init__(self, max_prbs):
        Allocator.__init__(self, max_prbs)
        self.reported_sets = {}


    def families(self, users, rates, targets):
        return {user: minimal_allocation_sets(rates[row], targets[row], self.max_prbs)
                for row, user in enumerate(users)}


    def allocate(self, users, rates, targets, cell=0, seed=0):
        num_prbs = np.shape(rates)[1]
        graph = build_graph(self.families(users, rates, targets), num_prbs)
        self.reported_sets[cell] = graph.num_vertices
        allocation, _ = mwdg(graph)
        return allocation

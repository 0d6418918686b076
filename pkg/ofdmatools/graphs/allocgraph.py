import itertools
import logging

import networkx as nx
import numpy as np

from ofdmatools.errors import ConfigurationError

logger = logging.getLogger(__name__)


class AllocGraph(object):
    '''
    Vertex-weighted conflict graph of the candidate allocations of one cell.

    Every vertex stands for one minimal allocation set of one user and weighs
    `num_prbs - len(prb_set)`. The vertices of a user form a clique, and vertices of different
    users are adjacent when their PRB sets intersect. Vertex ids follow the user id, then the PRB
    set in lexicographic order.

    Adjacency is never materialized: it follows from the owners and PRB sets, and weighted
    degrees are computed by inclusion-exclusion over the (at most M) PRBs of each vertex.
    '''

    def __init__(self, owners, prb_sets, num_prbs, excluded_users=()):
        if len(owners) != len(prb_sets):
            raise ConfigurationError('Every vertex needs an owner and a PRB set')

        self.num_prbs = int(num_prbs)
        self.owners = np.asarray(owners, dtype=int).reshape(-1)
        self.prb_sets = tuple(tuple(sorted(prbs)) for prbs in prb_sets)
        self.weights = np.array([self.num_prbs - len(prbs) for prbs in self.prb_sets], dtype=int)
        self.excluded_users = frozenset(int(u) for u in excluded_users)

        cliques = {}
        for vertex, owner in enumerate(self.owners):
            cliques.setdefault(int(owner), []).append(vertex)
        self.cliques = {owner: frozenset(members) for owner, members in cliques.items()}

        self._incidence = np.zeros((len(self.prb_sets), self.num_prbs), dtype=bool)
        for vertex, prbs in enumerate(self.prb_sets):
            self._incidence[vertex, list(prbs)] = True

        self._build_subset_index()


    def _build_subset_index(self):
        '''
        For every vertex, list the non-empty subsets S of its PRB set with their inclusion-exclusion
        sign. The weight of the vertices sharing at least one PRB with v is then
        sum_S sign(S) * (weight of the vertices whose PRB set contains S).
        '''
        subset_ids, owner_subset_ids = {}, {}
        entry_vertex, entry_sign, entry_subset, entry_owner_subset = [], [], [], []
        for vertex, prbs in enumerate(self.prb_sets):
            owner = int(self.owners[vertex])
            for size in range(1, len(prbs) + 1):
                for subset in itertools.combinations(prbs, size):
                    entry_vertex.append(vertex)
                    entry_sign.append(1 if size % 2 else -1)
                    entry_subset.append(subset_ids.setdefault(subset, len(subset_ids)))
                    entry_owner_subset.append(
                        owner_subset_ids.setdefault((owner, subset), len(owner_subset_ids)))

        self._entry_vertex = np.array(entry_vertex, dtype=int)
        self._entry_sign = np.array(entry_sign, dtype=float)
        self._entry_subset = np.array(entry_subset, dtype=int)
        self._entry_owner_subset = np.array(entry_owner_subset, dtype=int)
        self._num_subsets = len(subset_ids)
        self._num_owner_subsets = len(owner_subset_ids)


    @property
    def num_vertices(self):
        return len(self.prb_sets)


    @property
    def users(self):
        return sorted(self.cliques)


    def vertices(self):
        return range(self.num_vertices)


    def owner(self, vertex):
        return int(self.owners[vertex])


    def weight(self, vertex):
        return int(self.weights[vertex])


    def adjacent(self, vertex_a, vertex_b):
        if vertex_a == vertex_b:
            return False
        if self.owners[vertex_a] == self.owners[vertex_b]:
            return True
        return bool(np.any(self._incidence[vertex_a] & self._incidence[vertex_b]))


    def closed_neighborhood(self, vertex):
        ''' Boolean mask of `vertex` and all of its neighbors '''
        mask = self._incidence[:, self._incidence[vertex]].any(axis=1)
        mask |= self.owners == self.owners[vertex]
        return mask


    def neighbors(self, vertex):
        mask = self.closed_neighborhood(vertex)
        mask[vertex] = False
        return [int(v) for v in np.flatnonzero(mask)]


    def edges(self):
        for vertex in self.vertices():
            for other in self.neighbors(vertex):
                if other > vertex:
                    yield vertex, other


    def weighted_degrees(self, alive=None):
        '''
        Weighted degree of every vertex of the subgraph induced by the `alive` vertices: the
        summed weight of a vertex's neighbors divided by its own weight. Entries of removed
        vertices are meaningless.

        Weights are integers, so the numerators are exact and ties compare equal.

        Parameters
        ----------
        alive : ndarray of bool, optional
            Mask of the vertices still in the graph. Defaults to all vertices.

        Returns
        -------
        degrees : ndarray of float, shape (vertices,)
        '''
        if alive is None:
            alive = np.ones(self.num_vertices, dtype=bool)
        live_weights = np.where(alive, self.weights, 0).astype(float)

        # Vertices (any owner) containing each subset, then the same restricted to one owner
        entry_weight = live_weights[self._entry_vertex]
        sharing_all = np.bincount(self._entry_subset, weights=entry_weight,
                                  minlength=self._num_subsets)
        sharing_own = np.bincount(self._entry_owner_subset, weights=entry_weight,
                                  minlength=self._num_owner_subsets)
        cross = np.bincount(
            self._entry_vertex,
            weights=self._entry_sign * (sharing_all[self._entry_subset]
                                        - sharing_own[self._entry_owner_subset]),
            minlength=self.num_vertices)

        clique_weight = np.bincount(self.owners, weights=live_weights)
        peers = clique_weight[self.owners] - live_weights
        return (peers + cross) / self.weights


    def weighted_degree(self, vertex):
        return float(self.weighted_degrees()[vertex])


    def is_independent(self, vertices):
        vertices = list(vertices)
        return not any(self.adjacent(a, b) for a, b in itertools.combinations(vertices, 2))


    def weight_of(self, vertices):
        return int(sum(self.weights[v] for v in vertices))


    def vertex_of(self, user, prbs):
        ''' Id of the vertex of `user` whose PRB set is `prbs` '''
        prbs = tuple(sorted(prbs))
        for vertex in self.cliques.get(user, ()):
            if self.prb_sets[vertex] == prbs:
                return vertex
        raise KeyError('User %r has no candidate set %r' % (user, prbs))


    def to_networkx(self):
        ''' Explicit networkx graph with `owner`, `prbs` and `weight` vertex attributes '''
        graph = nx.Graph()
        for vertex in self.vertices():
            graph.add_node(vertex, owner=self.owner(vertex), prbs=self.prb_sets[vertex],
                           weight=self.weight(vertex))
        graph.add_edges_from(self.edges())
        return graph


    def to_text(self):
        '''
        Plain-text adjacency listing, one vertex per line:
        `<vertex> <owner> <prb,prb,...> <weight> <neighbor neighbor ...>`.
        '''
        lines = []
        for vertex in self.vertices():
            lines.append('%d %d %s %d %s' % (
                vertex, self.owner(vertex), ','.join(str(n) for n in self.prb_sets[vertex]),
                self.weight(vertex), ' '.join(str(v) for v in self.neighbors(vertex))))
        return '\n'.join(lines) + '\n'


def build_graph(families, num_prbs):
    '''
    Build the allocation graph of one cell from the minimal allocation sets of its users.

    Parameters
    ----------
    families : dict
        Maps each user id to its list of minimal allocation sets. Users with an empty list cannot
        be served: they get no clique and are reported in `excluded_users`.
    num_prbs : int
        Number of PRBs of the cell.

    Returns
    -------
    graph : AllocGraph
    '''
    owners, prb_sets, excluded = [], [], []
    for user in sorted(families):
        family = sorted(tuple(sorted(prbs)) for prbs in families[user])
        if not family:
            excluded.append(user)
            continue
        for prbs in family:
            if len(prbs) >= num_prbs:
                raise ConfigurationError('A candidate set must leave at least one PRB unused, '
                                         'got %r with %d PRBs' % (prbs, num_prbs))
            owners.append(user)
            prb_sets.append(prbs)

    if excluded:
        logger.debug('%d users have no allocation set and are dropped up front', len(excluded))
    return AllocGraph(owners, prb_sets, num_prbs, excluded_users=excluded)


def weighted_degree(graph, vertex):
    '''
    Ratio between the summed weight of the neighbors of `vertex` (its clique peers and the
    vertices of other users sharing a PRB with it) and the weight of `vertex` itself.
    '''
    return graph.weighted_degree(vertex)

from ofdmatools.errors import DomainError, OracleLimitError

DEFAULT_VERTEX_CAP = 40


def approximation_ratio(max_prbs, num_prbs):
    '''
    Worst-case ratio between the optimal independent-set weight and the weight selected by MWDG:
    `M * max((|pi| - 2) / (|pi| - M), 1)`.

    Examples
    --------
    >>> approximation_ratio(1, 24)
    1.0
    >>> approximation_ratio(2, 24)
    2.0
    '''
    if num_prbs < 2 or not 1 <= max_prbs < num_prbs:
        raise DomainError('The approximation ratio needs 1 <= M < |pi| and |pi| >= 2, got M = %r, '
                          '|pi| = %r' % (max_prbs, num_prbs))
    return max_prbs * max(float(num_prbs - 2) / (num_prbs - max_prbs), 1.0)


def exact_mwis(graph, max_vertices=DEFAULT_VERTEX_CAP):
    '''
    Maximum weight independent set by branch and bound. Only meant to check heuristics on small
    graphs.

    The search branches on the remaining vertex with the most remaining neighbors (lowest id on
    ties), first taking it and then discarding it. A branch is cut when its weight plus the
    heaviest remaining vertex of every user cannot beat the incumbent, which is a valid bound
    because at most one vertex per user can be selected.

    Returns
    -------
    vertices : frozenset
    weight : int
    '''
    if graph.num_vertices > max_vertices:
        raise OracleLimitError('exact_mwis handles at most %d vertices, the graph has %d'
                               % (max_vertices, graph.num_vertices))

    neighbors = {v: frozenset(graph.neighbors(v)) for v in graph.vertices()}
    weights = {v: graph.weight(v) for v in graph.vertices()}
    owners = {v: graph.owner(v) for v in graph.vertices()}
    best = {'weight': -1, 'vertices': frozenset()}

    def bound(candidates):
        heaviest = {}
        for v in candidates:
            heaviest[owners[v]] = max(heaviest.get(owners[v], 0), weights[v])
        return sum(heaviest.values())

    def branch(candidates, chosen, weight):
        if weight + bound(candidates) <= best['weight']:
            return
        if not candidates:
            best['weight'], best['vertices'] = weight, frozenset(chosen)
            return

        pivot = min(candidates, key=lambda v: (-len(neighbors[v] & candidates), v))
        if not neighbors[pivot] & candidates:
            # Only isolated vertices remain: take them all
            branch(frozenset(), chosen | candidates, weight + sum(weights[v] for v in candidates))
            return
        branch(candidates - neighbors[pivot] - {pivot}, chosen | {pivot}, weight + weights[pivot])
        branch(candidates - {pivot}, chosen, weight)

    branch(frozenset(graph.vertices()), frozenset(), 0)
    return best['vertices'], best['weight']

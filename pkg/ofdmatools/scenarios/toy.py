'''
Three users competing for four PRBs. Users are numbered 1 to 3 and PRBs m1..m4 are indices
0..3, so vertex V(u, j) is the j-th candidate set of user u in lexicographic order.
'''

from ofdmatools.graphs import build_graph

NUM_PRBS = 4

FAMILIES = {
    1: [(0,), (1,), (3,)],
    2: [(0,), (1, 2), (1, 3)],
    3: [(0,), (1, 2), (3,)],
}


def toy_graph():
    return build_graph(FAMILIES, NUM_PRBS)


def vertex(graph, user, index):
    ''' Id of V(user, index), with `index` counted from 1 '''
    return sorted(graph.cliques[user])[index - 1]

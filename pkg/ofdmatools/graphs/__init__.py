from .allocationsets import minimal_allocation_sets, set_rate
from .allocgraph import AllocGraph, build_graph, weighted_degree

__all__ = ['minimal_allocation_sets', 'set_rate', 'AllocGraph', 'build_graph', 'weighted_degree']

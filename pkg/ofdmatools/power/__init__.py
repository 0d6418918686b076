from .dpra import (DpraCellStep, DpraRound, DpraResult, delta_power, dpra_cell, dpra_network,
                   DEFAULT_MAX_ROUNDS, DEFAULT_TOLERANCE)
from .ipp import IppIteration, IppResult, ipp

__all__ = ['DpraCellStep', 'DpraRound', 'DpraResult', 'delta_power', 'dpra_cell', 'dpra_network',
           'DEFAULT_MAX_ROUNDS', 'DEFAULT_TOLERANCE', 'IppIteration', 'IppResult', 'ipp']

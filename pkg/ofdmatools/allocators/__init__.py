from .allocator import Allocator, AllocationMatrix
from .mwdg import MWDGAllocator, MwdgStep, MwdgTrace, mwdg
from .greedy import (RandomGreedyAllocator, MeanEnhancedGreedyAllocator, greedy_allocate,
                     rg_allocate, meg_allocate)
from .exact import exact_mwis, approximation_ratio

ALLOCATORS = {cls.label: cls for cls in
              (MWDGAllocator, RandomGreedyAllocator, MeanEnhancedGreedyAllocator)}

__all__ = ['Allocator', 'AllocationMatrix', 'MWDGAllocator', 'MwdgStep', 'MwdgTrace', 'mwdg',
           'RandomGreedyAllocator', 'MeanEnhancedGreedyAllocator', 'greedy_allocate',
           'rg_allocate', 'meg_allocate', 'exact_mwis', 'approximation_ratio', 'ALLOCATORS']

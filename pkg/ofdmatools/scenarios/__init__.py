from . import toy
from .random_instances import random_instance, random_instances, random_rates

__all__ = ['toy', 'random_instance', 'random_instances', 'random_rates']

from .topology import (CellTopology, UserPopulation, build_hex_grid, drop_users, dbm_to_watts,
                       watts_to_dbm)
from .channel import (ChannelTensor, PowerMap, RateTable, draw_channel, compute_rates,
                      uniform_power, thermal_noise_power, shannon_rate, required_power)

__all__ = ['CellTopology', 'UserPopulation', 'build_hex_grid', 'drop_users', 'dbm_to_watts',
           'watts_to_dbm', 'ChannelTensor', 'PowerMap', 'RateTable', 'draw_channel',
           'compute_rates', 'uniform_power', 'thermal_noise_power', 'shannon_rate',
           'required_power']

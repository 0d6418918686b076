import dataclasses
import logging
from dataclasses import dataclass

import yaml

from ofdmatools.errors import ConfigurationError
from ofdmatools.network.channel import thermal_noise_power
from ofdmatools.network.topology import dbm_to_watts

logger = logging.getLogger(__name__)

ALGORITHMS = ('mwdg', 'rg', 'meg')
POWER_MODES = ('uniform', 'dpra')

# Fields that may hold a single value or a sweep list
SWEEP_FIELDS = ('users_per_cell', 'algorithm', 'power_mode', 'ipp_iterations')


@dataclass(frozen=True)
class ScenarioConfig:
    '''
    Parameters of a Monte-Carlo experiment. Defaults reproduce the reference seven-cell scenario:
    5 MHz split in 24 PRBs, 500 m between sites, 43 dBm per cell, 768 kbps per user.
    '''

    num_cells: int = 7
    inter_site_distance_m: float = 500.0
    system_bandwidth_hz: float = 5e6
    num_prbs: int = 24
    total_power_dbm: float = 43.0
    pathloss_intercept_db: float = 128.1
    pathloss_slope_db: float = 37.6
    shadow_std_db: float = 8.0
    noise_density_dbm_hz: float = -174.0
    noise_figure_db: float = 9.0
    target_rate_bps: float = 768e3
    max_prbs: int = 2
    users_per_cell: tuple = (16,)
    algorithm: tuple = ('mwdg',)
    power_mode: tuple = ('uniform',)
    ipp_iterations: tuple = (1,)
    num_drops: int = 200
    master_seed: int = 1
    max_dpra_rounds: int = 50
    dpra_tolerance: float = 1e-6
    workers: int = 1

    def __post_init__(self):
        for name in SWEEP_FIELDS:
            value = getattr(self, name)
            if isinstance(value, (str, int, float)):
                value = (value,)
            object.__setattr__(self, name, tuple(value))

    @property
    def total_power_w(self):
        return float(dbm_to_watts(self.total_power_dbm))

    @property
    def prb_bandwidth_hz(self):
        return self.system_bandwidth_hz / self.num_prbs

    @property
    def noise_power_w(self):
        return thermal_noise_power(self.prb_bandwidth_hz, self.noise_density_dbm_hz,
                                   self.noise_figure_db)

    def problems(self):
        found = []
        if self.num_cells not in (1, 7):
            found.append('num_cells must be 1 or 7, got %r' % (self.num_cells,))
        if self.num_prbs < 2:
            found.append('num_prbs must be at least 2, got %r' % (self.num_prbs,))
        if not 1 <= self.max_prbs < self.num_prbs:
            found.append('max_prbs must satisfy 1 <= M < num_prbs, got M = %r with %r PRBs'
                         % (self.max_prbs, self.num_prbs))
        for name in ('inter_site_distance_m', 'system_bandwidth_hz', 'target_rate_bps'):
            if getattr(self, name) <= 0:
                found.append('%s must be positive' % name)
        if self.shadow_std_db < 0:
            found.append('shadow_std_db must be non-negative')
        if self.num_drops < 1:
            found.append('num_drops must be at least 1, got %r' % (self.num_drops,))
        if self.master_seed < 0:
            found.append('master_seed must be non-negative')
        if self.workers < 1:
            found.append('workers must be at least 1')
        if self.max_dpra_rounds < 1:
            found.append('max_dpra_rounds must be at least 1')
        if any(n < 1 for n in self.users_per_cell) or not self.users_per_cell:
            found.append('users_per_cell values must be at least 1')
        unknown = sorted(set(self.algorithm) - set(ALGORITHMS))
        if unknown or not self.algorithm:
            found.append('algorithm must be among %s, got %s' % (ALGORITHMS, self.algorithm))
        unknown = sorted(set(self.power_mode) - set(POWER_MODES))
        if unknown or not self.power_mode:
            found.append('power_mode must be among %s, got %s' % (POWER_MODES, self.power_mode))
        if any(j < 1 for j in self.ipp_iterations) or not self.ipp_iterations:
            found.append('ipp_iterations values must be at least 1')
        if max(self.ipp_iterations, default=1) > 1 and 'dpra' not in self.power_mode:
            found.append('ipp_iterations above 1 need the dpra power mode to reassign power')
        return found

    def validate(self):
        found = self.problems()
        if found:
            raise ConfigurationError('Invalid scenario: ' + '; '.join(found))
        return self

    def replace(self, **overrides):
        ''' Copy with every override that is not None applied '''
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self):
        values = dataclasses.asdict(self)
        for name in SWEEP_FIELDS:
            values[name] = list(values[name])
        return values


def parse_config(text):
    '''
    Parse a flat YAML mapping of `ScenarioConfig` fields. Unknown keys are rejected; sweep fields
    accept a scalar or a list.
    '''
    values = yaml.safe_load(text) or {}
    if not isinstance(values, dict):
        raise ConfigurationError('A scenario file must be a mapping of field names to values')
    known = {f.name for f in dataclasses.fields(ScenarioConfig)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise ConfigurationError('Unknown scenario fields: %s' % ', '.join(unknown))
    return ScenarioConfig(**values)


def load_config(path):
    with open(path) as config_file:
        config = parse_config(config_file.read())
    logger.debug('Loaded scenario from %s', path)
    return config


def dump_config(config):
    return yaml.safe_dump(config.to_dict(), default_flow_style=None, sort_keys=False)


def save_config(config, path):
    with open(path, 'w') as config_file:
        config_file.write(dump_config(config))

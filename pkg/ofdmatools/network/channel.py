import logging
from dataclasses import dataclass

import numpy as np

from ofdmatools.errors import ConfigurationError
from ofdmatools.network.topology import SHADOWING_STREAM, FADING_STREAM, dbm_to_watts, substream

logger = logging.getLogger(__name__)

PATHLOSS_INTERCEPT_DB = 128.1
PATHLOSS_SLOPE_DB = 37.6
SHADOW_STD_DB = 8.0
NOISE_DENSITY_DBM_HZ = -174.0
NOISE_FIGURE_DB = 9.0
MIN_DISTANCE_M = 1.0


def thermal_noise_power(bandwidth, density_dbm_hz=NOISE_DENSITY_DBM_HZ,
                        noise_figure_db=NOISE_FIGURE_DB):
    ''' Receiver noise power in watts over `bandwidth` Hz '''
    return float(dbm_to_watts(density_dbm_hz + noise_figure_db)) * bandwidth


def pathloss_db(distance_km, intercept_db=PATHLOSS_INTERCEPT_DB, slope_db=PATHLOSS_SLOPE_DB):
    return intercept_db + slope_db * np.log10(distance_km)


def link_gain(distance_m, shadow_db=0.0, fading=1.0, intercept_db=PATHLOSS_INTERCEPT_DB,
              slope_db=PATHLOSS_SLOPE_DB):
    '''
    Linear power gain of a link: pathloss (distance in km) times log-normal shadowing times the
    small-scale fading power. Distances below one meter are clamped to one meter.
    '''
    distance_km = np.maximum(np.asarray(distance_m, dtype=float), MIN_DISTANCE_M) / 1e3
    loss_db = pathloss_db(distance_km, intercept_db, slope_db)
    return 10.0 ** (-(loss_db - np.asarray(shadow_db)) / 10.0) * fading


def shannon_rate(power, gain, interference, noise, bandwidth):
    ''' Achievable rate in bits/s on one PRB '''
    return bandwidth * np.log2(1.0 + power * gain / (interference + noise))


def required_power(rate, gain, interference, noise, bandwidth):
    ''' Inverse of `shannon_rate`: the power that yields `rate` under the given interference '''
    return np.expm1(np.asarray(rate) * np.log(2.0) / bandwidth) * (interference + noise) / gain


@dataclass(frozen=True, eq=False)
class ChannelTensor:
    '''
    Link gains frozen for one drop.

    Attributes
    ----------
    gain : ndarray, shape (users, prbs, cells)
        Linear power gain between user u and the base station of each cell on each PRB.
    noise_power : float
        Noise power per PRB in watts.
    '''

    gain: np.ndarray
    noise_power: float

    def __post_init__(self):
        if self.gain.ndim != 3:
            raise ConfigurationError('Channel gains must be indexed by (user, prb, cell)')
        if not np.all(np.isfinite(self.gain)) or np.any(self.gain <= 0):
            raise ConfigurationError('Channel gains must be positive and finite')
        if self.noise_power <= 0:
            raise ConfigurationError('Noise power must be positive')
        self.gain.setflags(write=False)

    @property
    def num_users(self):
        return self.gain.shape[0]

    @property
    def num_prbs(self):
        return self.gain.shape[1]

    def serving_gain(self, population):
        ''' Gains towards the serving base station, shape (users, prbs) '''
        return self.gain[np.arange(self.num_users), :, population.serving_cell]


def draw_channel(topology, population, rng_seed, intercept_db=PATHLOSS_INTERCEPT_DB,
                 slope_db=PATHLOSS_SLOPE_DB, shadow_std_db=SHADOW_STD_DB, noise_power=None):
    '''
    Draw the gains of every (user, PRB, base station) triple. Shadowing is drawn once per
    (user, base station) link and shared by all PRBs; Rayleigh fading is an independent unit-mean
    exponential power gain per (user, PRB, base station).

    Every user draws from substreams keyed by its serving cell and its index in that cell, so
    dropping more users does not change the channels of the existing ones.

    Parameters
    ----------
    noise_power : float, optional
        Noise power per PRB in watts. Defaults to thermal noise with a 9 dB noise figure over the
        PRB bandwidth.
    '''
    if noise_power is None:
        noise_power = thermal_noise_power(topology.prb_bandwidth)

    distances = population.distances(topology)
    if np.any(distances < MIN_DISTANCE_M):
        logger.debug('Clamping %d user-BS distances to %.1f m',
                     np.count_nonzero(distances < MIN_DISTANCE_M), MIN_DISTANCE_M)

    num_cells = topology.num_cells
    shadow_db = np.empty((population.num_users, num_cells))
    fading = np.empty((population.num_users, topology.num_prbs, num_cells))
    for user in range(population.num_users):
        key = (population.serving_cell[user], population.index_in_cell[user])
        shadow_db[user] = substream(rng_seed, SHADOWING_STREAM, *key).normal(
            0.0, shadow_std_db, size=num_cells)
        fading[user] = substream(rng_seed, FADING_STREAM, *key).exponential(
            1.0, size=(topology.num_prbs, num_cells))

    gain = link_gain(distances[:, None, :], shadow_db[:, None, :], fading, intercept_db, slope_db)
    return ChannelTensor(gain=gain, noise_power=float(noise_power))


@dataclass(frozen=True, eq=False)
class PowerMap:
    ''' Transmit power of every cell on every PRB, shape (cells, prbs), in watts '''

    power: np.ndarray

    def __post_init__(self):
        if np.any(self.power < 0):
            raise ConfigurationError('Transmit powers must be non-negative')
        self.power.setflags(write=False)

    def total(self, cell=None):
        if cell is None:
            return float(self.power.sum())
        return float(self.power[cell].sum())

    def within_budget(self, topology, rtol=1e-9):
        return bool(np.all(self.power.sum(axis=1) <= topology.total_power * (1.0 + rtol)))


def uniform_power(topology):
    ''' Every cell spreads its total power evenly over all PRBs '''
    per_prb = topology.total_power / topology.num_prbs
    return PowerMap(power=np.repeat(per_prb[:, None], topology.num_prbs, axis=1))


@dataclass(frozen=True, eq=False)
class RateTable:
    '''
    Rates and interference seen by every user on every PRB, both of shape (users, prbs).
    '''

    rate: np.ndarray
    interference: np.ndarray

    def __post_init__(self):
        self.rate.setflags(write=False)
        self.interference.setflags(write=False)

    def cell_rates(self, users):
        return self.rate[np.asarray(users, dtype=int)]


def compute_rates(topology, population, channel, powers, own_powers=None):
    '''
    Evaluate the per-PRB achievable rate of every user against its serving cell's power, with the
    interference summed over all other cells transmitting on the same PRB.

    Parameters
    ----------
    powers : PowerMap
        Transmit powers of all cells.
    own_powers : PowerMap, optional
        Power each serving cell is assumed to use on its own PRBs. Defaults to `powers`; the
        interference always comes from `powers`.

    Returns
    -------
    rates : RateTable
    '''
    serving = population.serving_cell
    users = np.arange(population.num_users)

    # received[u, n, j] = p_n^(j) * h_{u,n}^(j)
    received = channel.gain * powers.power.T[None, :, :]
    interferers = np.ones((population.num_users, topology.num_cells))
    interferers[users, serving] = 0.0
    interference = np.einsum('unj,uj->un', received, interferers)
    own_power = (powers if own_powers is None else own_powers).power[serving]
    rate = shannon_rate(own_power, channel.serving_gain(population), interference,
                        channel.noise_power, topology.prb_bandwidth)
    return RateTable(rate=rate, interference=interference)

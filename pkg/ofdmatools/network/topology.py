import logging
from dataclasses import dataclass

import numpy as np

from ofdmatools.errors import ConfigurationError

logger = logging.getLogger(__name__)

# Substream identifiers appended to the master seed
PLACEMENT_STREAM = 0
SHADOWING_STREAM = 1
FADING_STREAM = 2

# Candidate points drawn per rejection-sampling batch. Fixed so that the k-th accepted user of a
# cell does not depend on how many users are requested.
_PLACEMENT_BATCH = 64


def dbm_to_watts(dbm):
    return 10.0 ** ((np.asarray(dbm, dtype=float) - 30.0) / 10.0)


def watts_to_dbm(watts):
    return 10.0 * np.log10(np.asarray(watts, dtype=float)) + 30.0


def substream(seed, *keys):
    '''
    Independent generator for the stream identified by `keys` under the master `seed`. The same
    (seed, keys) always yields the same sequence, regardless of which other streams were used.
    '''
    return np.random.default_rng([int(seed)] + [int(k) for k in keys])


@dataclass(frozen=True, eq=False)
class CellTopology:
    '''
    Positions of the base stations, their power budgets and the PRB grid shared by all cells
    (frequency reuse one).

    The system bandwidth is derived from the PRB bandwidth, so that
    `prb_bandwidth * num_prbs == system_bandwidth` holds exactly.
    '''

    positions: np.ndarray
    inter_site_distance: float
    total_power: np.ndarray
    num_prbs: int
    prb_bandwidth: float

    def __post_init__(self):
        if self.num_prbs < 1:
            raise ConfigurationError('num_prbs must be at least 1, got %r' % (self.num_prbs,))
        if self.prb_bandwidth <= 0:
            raise ConfigurationError('PRB bandwidth must be positive')
        if len(self.total_power) != len(self.positions):
            raise ConfigurationError('One power budget per cell is required')
        if np.any(np.asarray(self.total_power) <= 0):
            raise ConfigurationError('Every cell needs a positive total power')
        for arr in (self.positions, self.total_power):
            arr.setflags(write=False)

    @property
    def num_cells(self):
        return len(self.positions)

    @property
    def cells(self):
        return range(self.num_cells)

    @property
    def system_bandwidth(self):
        return self.prb_bandwidth * self.num_prbs

    @property
    def apothem(self):
        ''' Distance from a cell center to the middle of its hexagon's edges '''
        return self.inter_site_distance / 2.0

    def contains(self, cell, points):
        '''
        Whether each of the planar `points` lies inside the hexagon of `cell`. Neighbors sit at
        multiples of 60 degrees, so the hexagon edges are normal to the 0, 60 and 120 degree
        directions.
        '''
        rel = np.atleast_2d(points) - self.positions[cell]
        angles = np.deg2rad([0.0, 60.0, 120.0])
        normals = np.stack([np.cos(angles), np.sin(angles)], axis=1)
        return np.all(np.abs(rel @ normals.T) <= self.apothem + 1e-9, axis=1)


def build_hex_grid(inter_site_distance=500.0, num_cells=7, total_power=dbm_to_watts(43.0),
                   num_prbs=24, system_bandwidth=5e6):
    '''
    Build a hexagonal layout: one center cell at the origin and, for seven cells, six neighbors
    at angles k * 60 degrees and distance `inter_site_distance`. There is no wrap-around, so edge
    cells see less interference than the center cell.

    Parameters
    ----------
    inter_site_distance : float
        Distance between neighboring base stations in meters.
    num_cells : int
        Either 7 (default layout) or 1 (single cell, no interference).
    total_power : float or array-like
        Power budget of each cell in watts.
    num_prbs : int
        Number of PRBs in the system bandwidth.
    system_bandwidth : float
        Total bandwidth in Hz, split evenly among the PRBs.

    Returns
    -------
    topology : CellTopology
    '''
    if num_cells not in (1, 7):
        raise ConfigurationError('Unsupported number of cells %r: only 1 or 7 are laid out'
                                 % (num_cells,))
    if inter_site_distance <= 0:
        raise ConfigurationError('inter_site_distance must be positive')
    if num_prbs < 1:
        raise ConfigurationError('num_prbs must be at least 1, got %r' % (num_prbs,))

    positions = [(0.0, 0.0)]
    if num_cells == 7:
        for k in range(6):
            angle = np.deg2rad(60.0 * k)
            positions.append((inter_site_distance * np.cos(angle),
                              inter_site_distance * np.sin(angle)))

    power = np.broadcast_to(np.asarray(total_power, dtype=float), (num_cells,)).copy()
    return CellTopology(positions=np.array(positions),
                        inter_site_distance=float(inter_site_distance),
                        total_power=power, num_prbs=int(num_prbs),
                        prb_bandwidth=float(system_bandwidth) / num_prbs)


@dataclass(frozen=True, eq=False)
class UserPopulation:
    '''
    Users of all cells. User ids are row indices; users are grouped by serving cell and, within a
    cell, `index_in_cell` gives the order in which they were dropped.
    '''

    serving_cell: np.ndarray
    index_in_cell: np.ndarray
    positions: np.ndarray
    target_rate: np.ndarray

    def __post_init__(self):
        if np.any(self.target_rate <= 0):
            raise ConfigurationError('Target rates must be positive')
        for arr in (self.serving_cell, self.index_in_cell, self.positions, self.target_rate):
            arr.setflags(write=False)

    @property
    def num_users(self):
        return len(self.serving_cell)

    def users_in(self, cell):
        return np.flatnonzero(self.serving_cell == cell)

    def distances(self, topology):
        ''' Matrix of user to base station distances in meters, shape (users, cells) '''
        diff = self.positions[:, None, :] - topology.positions[None, :, :]
        return np.hypot(diff[..., 0], diff[..., 1])


def _sample_hexagon(topology, cell, count, rng):
    radius = topology.inter_site_distance / np.sqrt(3.0)
    accepted = []
    num_accepted = 0
    while num_accepted < count:
        candidates = rng.uniform(-1.0, 1.0, size=(_PLACEMENT_BATCH, 2)) * [topology.apothem, radius]
        candidates = candidates + topology.positions[cell]
        inside = candidates[topology.contains(cell, candidates)]
        accepted.append(inside)
        num_accepted += len(inside)
    return np.concatenate(accepted)[:count]


def drop_users(topology, users_per_cell, rng_seed, target_rate=768e3):
    '''
    Drop `users_per_cell` users uniformly inside every hexagon by rejection sampling. Each cell
    draws from its own substream of `rng_seed`, so adding users to a cell keeps the positions of
    the users already dropped.

    Returns
    -------
    population : UserPopulation
    '''
    if users_per_cell < 1:
        raise ConfigurationError('users_per_cell must be at least 1, got %r' % (users_per_cell,))

    cells, indices, positions = [], [], []
    for cell in topology.cells:
        rng = substream(rng_seed, PLACEMENT_STREAM, cell)
        positions.append(_sample_hexagon(topology, cell, users_per_cell, rng))
        cells.append(np.full(users_per_cell, cell))
        indices.append(np.arange(users_per_cell))

    num_users = users_per_cell * topology.num_cells
    logger.debug('Dropped %d users over %d cells (seed %d)', num_users, topology.num_cells,
                 rng_seed)
    return UserPopulation(serving_cell=np.concatenate(cells),
                          index_in_cell=np.concatenate(indices),
                          positions=np.concatenate(positions),
                          target_rate=np.full(num_users, float(target_rate)))


def mean_hexagon_distance(apothem):
    ''' Mean distance between the center of a regular hexagon and a uniform point inside it '''
    return apothem * np.sqrt(3.0) / 3.0 * (2.0 / 3.0 + np.log(3.0) / 2.0)

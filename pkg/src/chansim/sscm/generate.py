"""Omnidirectional CIR generation with time clusters and spatial lobes."""

from __future__ import annotations

import math
from dataclasses import replace
from typing import TYPE_CHECKING, Final, NamedTuple

import numpy as np

from chansim.config import (
    Environment,
    ModelParameters,
    scenario_defaults,
)
from chansim.constants import MAX_SPATIAL_LOBES, MAX_TIME_CLUSTERS, SPEED_OF_LIGHT
from chansim.pathloss import (
    additional_losses,
    ci_path_loss,
    load_attenuation_table,
    sample_shadow_fading,
)
from chansim.prints import warning

from .pdp import bin_width
from .types import MultipathComponent, OmniCIR

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from chansim.config import SimulationConfig
    from chansim.pathloss import AttenuationTable

    from .types import SpatialLobe

LOBE_PLACEMENT_ATTEMPTS: Final[int] = 1000
TX_BORESIGHT: Final[tuple[float, float]] = (0.0, 0.0)
RX_BORESIGHT: Final[tuple[float, float]] = (180.0, 0.0)


class ClusterStructure(NamedTuple):
    """Time partitioning of one CIR, all in excess delay ns."""

    start_delays: NDArray[np.float64]
    durations: NDArray[np.float64]
    power_fractions: NDArray[np.float64]
    """Sums to one."""

    @property
    def end_delays(self) -> NDArray[np.float64]:
        """Excess delay at which each cluster ends, ns."""
        return self.start_delays + self.durations


class LargeScaleParameters(NamedTuple):
    """Path loss exponent and shadow fading sigma (dB) used for a link."""

    ple: float
    shadow_sigma: float


class LobeSet(NamedTuple):
    """Lobe centers of one end of the link and the lobe of every MPC."""

    azimuths: NDArray[np.float64]
    elevations: NDArray[np.float64]
    labels: NDArray[np.int64]


def large_scale_parameters(
    config: SimulationConfig, params: ModelParameters
) -> LargeScaleParameters:
    """The scenario's path loss exponent and shadow fading, with overrides."""
    defaults = scenario_defaults(config.scenario, config.environment)
    ple = defaults.ple if params.ple_override is None else params.ple_override
    sigma = (
        defaults.shadow_sigma
        if params.shadow_sigma_override_db is None
        else params.shadow_sigma_override_db
    )
    return LargeScaleParameters(ple, sigma)


def attenuation_table_for(params: ModelParameters) -> AttenuationTable:
    """The attenuation table selected by a parameter set."""
    return load_attenuation_table(
        params.attenuation_table,
        params.reference_humidity_pct,
        params.reference_rain_rate_mmhr,
    )


def sample_omni_path_loss(
    config: SimulationConfig,
    distance: float,
    rng: np.random.Generator,
    params: ModelParameters,
    table: AttenuationTable | None = None,
) -> float:
    """Draws shadow fading and returns the omnidirectional path loss, dB."""
    large_scale = large_scale_parameters(config, params)
    shadow = sample_shadow_fading(large_scale.shadow_sigma, rng)
    losses = additional_losses(
        config, distance, params, table or attenuation_table_for(params)
    )
    return ci_path_loss(config.frequency, distance, large_scale.ple, losses, shadow)


def sample_num_time_clusters(
    rng: np.random.Generator, maximum: int = MAX_TIME_CLUSTERS
) -> int:
    """Number of time clusters, uniform on 1..maximum."""
    return int(rng.integers(1, maximum, endpoint=True))


def clamp_lobe_count(raw: int, maximum: int = MAX_SPATIAL_LOBES) -> int:
    """Clamps a lobe count draw to [1, maximum]."""
    return max(1, min(raw, maximum))


def sample_num_spatial_lobes(
    rng: np.random.Generator,
    mean: float = 2.0,
    maximum: int = MAX_SPATIAL_LOBES,
) -> int:
    """Number of spatial lobes, Poisson distributed and clamped to [1, maximum]."""
    return clamp_lobe_count(int(rng.poisson(mean)), maximum)


def sample_cluster_structure(
    n_tc: int, rng: np.random.Generator, params: ModelParameters | None = None
) -> ClusterStructure:
    """Draws cluster start delays, durations and power fractions.

    The first cluster starts at zero excess delay. Each further cluster starts
    a minimum void plus an exponential excess after the end of the previous
    one. Durations are exponential and capped. Power fractions decay
    exponentially with start delay, are shadowed lognormally and then
    normalized to one.

    Raises:
        ValueError: If n_tc is outside [1, max_time_clusters].
    """
    params = params or ModelParameters()
    if not 1 <= n_tc <= params.max_time_clusters:
        raise ValueError(
            f"number of time clusters must be in [1, {params.max_time_clusters}], "
            f"got {n_tc}"
        )
    durations = np.minimum(
        rng.exponential(params.cluster_duration_mean_ns, n_tc),
        params.cluster_duration_cap_ns,
    )
    gaps = params.min_void_ns + rng.exponential(params.void_excess_mean_ns, n_tc - 1)
    starts = np.zeros(n_tc)
    for i in range(1, n_tc):
        starts[i] = starts[i - 1] + durations[i - 1] + gaps[i - 1]
    shadowing = rng.normal(0.0, params.cluster_shadowing_db, n_tc)
    weights = np.exp(-starts / params.cluster_decay_ns) * 10.0 ** (shadowing / 10.0)
    return ClusterStructure(starts, durations, weights / np.sum(weights))


def sample_subpaths(
    structure: ClusterStructure,
    rng: np.random.Generator,
    params: ModelParameters,
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.int64]]:
    """Intra-cluster subpaths. Returns excess delays, power fractions, cluster ids.

    The first subpath of a cluster arrives at the cluster start. Power fractions
    of a cluster's subpaths sum to the cluster's fraction.
    """
    delays, powers, clusters = [], [], []
    for cid, (start, duration, fraction) in enumerate(zip(*structure, strict=True)):
        n_sp = int(rng.integers(1, params.max_subpaths, endpoint=True))
        later = np.minimum(rng.exponential(duration / 4.0, n_sp - 1), duration)
        intra = np.concatenate(([0.0], np.sort(later)))
        spread = rng.uniform(
            -params.subpath_power_spread_db, params.subpath_power_spread_db, n_sp
        )
        weights = np.exp(-intra / params.subpath_decay_ns) * 10.0 ** (spread / 10.0)
        delays.append(start + intra)
        powers.append(fraction * weights / np.sum(weights))
        clusters.append(np.full(n_sp, cid, dtype=np.int64))
    return np.concatenate(delays), np.concatenate(powers), np.concatenate(clusters)


def merge_unresolvable(
    excess: NDArray[np.float64],
    fractions: NDArray[np.float64],
    cluster_ids: NDArray[np.int64],
    los_delay: float,
    bandwidth: float,
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.int64]]:
    """Merges subpaths the bandwidth cannot resolve into single MPCs.

    Subpaths whose absolute delays fall into the same 1000/bandwidth ns bin
    become one MPC at the earliest delay of the bin, carrying the summed power
    and the cluster of that earliest subpath. Excess delays must be ascending.
    A zero bandwidth keeps every subpath.
    """
    if bandwidth <= 0:
        return excess, fractions, cluster_ids
    index = np.floor((los_delay + excess) / bin_width(bandwidth)).astype(np.int64)
    _, first, inverse = np.unique(index, return_index=True, return_inverse=True)
    merged = np.bincount(inverse.reshape(-1), weights=fractions)
    return excess[first], merged, cluster_ids[first]


def _circular_separation(a: NDArray[np.float64]) -> float:
    if a.size < 2:
        return math.inf
    diff = np.abs(a[:, None] - a[None, :]) % 360.0
    diff = np.minimum(diff, 360.0 - diff)
    return float(np.min(diff[np.triu_indices(a.size, k=1)]))


def sample_lobe_centers(
    n_lobes: int,
    rng: np.random.Generator,
    params: ModelParameters,
    fixed: tuple[float, float] | None = None,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Draws lobe center azimuths and elevations in degrees.

    Azimuths are uniform on [0, 360) with a minimum circular separation of
    lobe_min_separation_deg / n_lobes, enforced by redrawing. Elevations are
    Gaussian and clipped. A fixed center, if given, is used for lobe 0. If no
    draw meets the separation, the last one is kept and a warning is printed.
    """
    limit = params.lobe_elevation_limit_deg
    min_separation = params.lobe_min_separation_deg / n_lobes
    n_free = n_lobes - (fixed is not None)
    azimuths = np.empty(0)
    for _ in range(LOBE_PLACEMENT_ATTEMPTS):
        azimuths = rng.uniform(0.0, 360.0, n_free)
        if fixed is not None:
            azimuths = np.concatenate(([fixed[0]], azimuths))
        if _circular_separation(azimuths) >= min_separation:
            break
    else:
        warning(
            f"Placed {n_lobes} spatial lobes closer than {min_separation:.1f} deg",
            reason=f"No separated placement in {LOBE_PLACEMENT_ATTEMPTS} draws",
            suggestion="Lower lobe_min_separation_deg in the model parameters",
        )
    elevations = np.clip(
        rng.normal(0.0, params.lobe_elevation_sigma_deg, n_free), -limit, limit
    )
    if fixed is not None:
        elevations = np.concatenate(([fixed[1]], elevations))
    return azimuths, elevations


def assign_lobes(
    n_mpc: int, n_lobes: int, rng: np.random.Generator, pinned: bool = False
) -> NDArray[np.int64]:
    """Assigns every MPC to a lobe, uniformly at random, leaving no lobe empty.

    With pinned set, MPC 0 belongs to lobe 0 and the remaining MPCs fill the
    other lobes.

    Raises:
        ValueError: If there are more lobes than MPCs can cover.
    """
    if n_lobes > n_mpc:
        raise ValueError(f"{n_lobes} lobes cannot be covered by {n_mpc} MPCs")
    first_free = 1 if pinned else 0
    n_free = n_mpc - first_free
    labels = rng.integers(0, n_lobes, n_free)
    required = np.arange(first_free, n_lobes)
    labels[rng.permutation(n_free)[: required.size]] = required
    if pinned:
        labels = np.concatenate(([0], labels))
    return labels.astype(np.int64)


def sample_lobes(
    n_mpc: int,
    rng: np.random.Generator,
    params: ModelParameters,
    boresight: tuple[float, float] | None = None,
) -> LobeSet:
    """Lobe count, centers and MPC assignment of one end of the link.

    With a boresight given, MPC 0 is the direct path and lobe 0 is centered on
    the boresight.
    """
    n_lobes = sample_num_spatial_lobes(
        rng, params.mean_spatial_lobes, params.max_spatial_lobes
    )
    n_lobes = min(n_lobes, n_mpc)
    azimuths, elevations = sample_lobe_centers(n_lobes, rng, params, boresight)
    labels = assign_lobes(n_mpc, n_lobes, rng, pinned=boresight is not None)
    return LobeSet(azimuths, elevations, labels)


def sample_mpc_angles(
    lobes: LobeSet,
    rng: np.random.Generator,
    params: ModelParameters,
    boresight: tuple[float, float] | None = None,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Per-MPC azimuth and elevation scattered around their lobe centers."""
    n = lobes.labels.size
    az_offset = rng.normal(0.0, params.mpc_azimuth_spread_deg, n)
    el_offset = rng.normal(0.0, params.mpc_elevation_spread_deg, n)
    azimuths = np.mod(lobes.azimuths[lobes.labels] + az_offset, 360.0)
    azimuths[azimuths >= 360.0] = 0.0
    elevations = np.clip(lobes.elevations[lobes.labels] + el_offset, -90.0, 90.0)
    if boresight is not None:
        azimuths[0], elevations[0] = boresight
    return azimuths, elevations


def _with_sampled_centers(
    lobes: tuple[SpatialLobe, ...], sampled: LobeSet
) -> tuple[SpatialLobe, ...]:
    return tuple(
        replace(
            lobe,
            azimuth=float(sampled.azimuths[lobe.lobe_id]),
            elevation=float(sampled.elevations[lobe.lobe_id]),
        )
        for lobe in lobes
    )


def generate_cir(
    config: SimulationConfig,
    distance: float,
    rng: np.random.Generator,
    params: ModelParameters | None = None,
    table: AttenuationTable | None = None,
) -> OmniCIR:
    """Generates one omnidirectional channel impulse response.

    Draws the path loss, the time cluster structure, subpaths, spatial lobes
    on both ends and phases, in that order. MPC powers sum to the received
    power implied by the transmit power and the path loss. In LOS the first
    MPC is the direct path at d/c on the TX-RX boresight. Lobes keep the
    centers they were drawn with.

    Raises:
        ValueError: If the distance is below 1 m.
    """
    params = params or ModelParameters()
    path_loss = sample_omni_path_loss(config, distance, rng, params, table)
    total_mw = 10.0 ** ((config.tx_power - path_loss) / 10.0)

    structure = sample_cluster_structure(
        sample_num_time_clusters(rng, params.max_time_clusters), rng, params
    )
    excess, fractions, cluster_ids = sample_subpaths(structure, rng, params)
    los_delay = distance / SPEED_OF_LIGHT * 1e9
    excess, fractions, cluster_ids = merge_unresolvable(
        excess, fractions, cluster_ids, los_delay, config.rf_bandwidth
    )

    los = config.environment == Environment.LOS
    if los:
        # The direct path takes the place of the first arrival of cluster 0.
        los_fraction = rng.uniform(
            params.los_power_fraction_min, params.los_power_fraction_max
        )
        rest = fractions[1:]
        if rest.size:
            rest = (1.0 - los_fraction) * rest / np.sum(rest)
        else:
            los_fraction = 1.0
        fractions = np.concatenate(([los_fraction], rest))

    n_mpc = excess.size
    tx_boresight = TX_BORESIGHT if los else None
    rx_boresight = RX_BORESIGHT if los else None
    aod_lobes = sample_lobes(n_mpc, rng, params, tx_boresight)
    aoa_lobes = sample_lobes(n_mpc, rng, params, rx_boresight)
    aod_az, aod_el = sample_mpc_angles(aod_lobes, rng, params, tx_boresight)
    aoa_az, aoa_el = sample_mpc_angles(aoa_lobes, rng, params, rx_boresight)
    phases = rng.uniform(0.0, 2.0 * np.pi, n_mpc)

    powers = fractions * (total_mw / np.sum(fractions))
    delays = los_delay + excess
    mpcs = [
        MultipathComponent(
            delay=float(delays[i]),
            power=float(powers[i]),
            phase=float(phases[i]),
            aod_az=float(aod_az[i]),
            aod_el=float(aod_el[i]),
            aoa_az=float(aoa_az[i]),
            aoa_el=float(aoa_el[i]),
            cluster_id=int(cluster_ids[i]),
            lobe_id_tx=int(aod_lobes.labels[i]),
            lobe_id_rx=int(aoa_lobes.labels[i]),
        )
        for i in range(n_mpc)
    ]
    cir = OmniCIR.from_mpcs(mpcs, tr_distance=distance, tx_power=config.tx_power)
    clusters = tuple(
        replace(
            c,
            start=float(structure.start_delays[c.cluster_id]),
            end=float(structure.end_delays[c.cluster_id]),
        )
        for c in cir.clusters
    )
    return replace(
        cir,
        omni_path_loss=path_loss,
        clusters=clusters,
        aod_lobes=_with_sampled_centers(cir.aod_lobes, aod_lobes),
        aoa_lobes=_with_sampled_centers(cir.aoa_lobes, aoa_lobes),
    )

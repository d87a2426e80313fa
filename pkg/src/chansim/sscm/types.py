"""Channel impulse response types."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Self

import numpy as np

from chansim.constants import SPEED_OF_LIGHT

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import NDArray


class LobeSide(StrEnum):
    """Which end of the link a spatial lobe belongs to."""

    AOD = "AOD"
    AOA = "AOA"


@dataclass(frozen=True, slots=True)
class MultipathComponent:
    """One resolvable propagation path.

    Angles are in degrees, azimuth in [0, 360) and elevation in [-90, 90].
    """

    delay: float
    """Absolute propagation delay, ns."""

    power: float
    """mW."""

    phase: float
    """rad, in [0, 2*pi)."""

    aod_az: float
    aod_el: float
    aoa_az: float
    aoa_el: float
    cluster_id: int = 0
    lobe_id_tx: int = 0
    lobe_id_rx: int = 0


@dataclass(frozen=True)
class TimeCluster:
    """MPCs arriving close together in excess delay."""

    cluster_id: int
    start: float
    """Excess delay of the cluster start, ns."""

    end: float
    """Excess delay of the cluster end, ns."""

    members: tuple[int, ...]
    """Indices into OmniCIR.mpcs, in delay order."""

    power: float
    """mW."""


@dataclass(frozen=True)
class SpatialLobe:
    """A main direction of departure or arrival.

    Generated CIRs keep the center each lobe was drawn with. A CIR assembled
    from labelled paths centers a lobe on its strongest member.
    """

    lobe_id: int
    side: LobeSide
    azimuth: float
    elevation: float
    members: tuple[int, ...]
    power: float


@dataclass(frozen=True)
class OmniCIR:
    """One omnidirectional channel realization.

    The MPC powers sum to the received power implied by the transmit power and
    the omnidirectional path loss.
    """

    mpcs: tuple[MultipathComponent, ...]
    tr_distance: float
    """m."""

    omni_path_loss: float
    """dB."""

    tx_power: float
    """dBm."""

    clusters: tuple[TimeCluster, ...] = ()
    aod_lobes: tuple[SpatialLobe, ...] = ()
    aoa_lobes: tuple[SpatialLobe, ...] = ()
    _arrays: dict[str, NDArray[np.float64]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    @classmethod
    def from_mpcs(
        cls,
        mpcs: Sequence[MultipathComponent],
        tr_distance: float = 1.0,
        tx_power: float = 0.0,
    ) -> Self:
        """Builds a CIR from a list of paths.

        The path loss is derived from the total power so that the power
        identity holds. Clusters and lobes are rebuilt from the MPC labels.
        """
        ordered = tuple(sorted(mpcs, key=lambda m: m.delay))
        total = math.fsum(m.power for m in ordered)
        path_loss = tx_power - 10.0 * math.log10(total)
        los_delay = tr_distance / SPEED_OF_LIGHT * 1e9
        clusters = []
        for cid in sorted({m.cluster_id for m in ordered}):
            members = tuple(i for i, m in enumerate(ordered) if m.cluster_id == cid)
            excess = [ordered[i].delay - los_delay for i in members]
            clusters.append(
                TimeCluster(
                    cid,
                    min(excess),
                    max(excess),
                    members,
                    math.fsum(ordered[i].power for i in members),
                )
            )
        return cls(
            mpcs=ordered,
            tr_distance=tr_distance,
            omni_path_loss=path_loss,
            tx_power=tx_power,
            clusters=tuple(clusters),
            aod_lobes=_lobes_from_labels(ordered, LobeSide.AOD),
            aoa_lobes=_lobes_from_labels(ordered, LobeSide.AOA),
        )

    def _array(self, name: str) -> NDArray[np.float64]:
        if name not in self._arrays:
            values = np.array([getattr(m, name) for m in self.mpcs], dtype=np.float64)
            values.setflags(write=False)
            self._arrays[name] = values
        return self._arrays[name]

    @property
    def delays(self) -> NDArray[np.float64]:
        """Delays, ns."""
        return self._array("delay")

    @property
    def powers(self) -> NDArray[np.float64]:
        """Powers, mW."""
        return self._array("power")

    @property
    def phases(self) -> NDArray[np.float64]:
        """Phases, rad."""
        return self._array("phase")

    @property
    def aod_az(self) -> NDArray[np.float64]:
        """Azimuth AODs, degrees."""
        return self._array("aod_az")

    @property
    def aod_el(self) -> NDArray[np.float64]:
        """Elevation AODs, degrees."""
        return self._array("aod_el")

    @property
    def aoa_az(self) -> NDArray[np.float64]:
        """Azimuth AOAs, degrees."""
        return self._array("aoa_az")

    @property
    def aoa_el(self) -> NDArray[np.float64]:
        """Elevation AOAs, degrees."""
        return self._array("aoa_el")

    @property
    def received_power(self) -> float:
        """Omnidirectional received power, dBm."""
        return self.tx_power - self.omni_path_loss

    @property
    def los_delay(self) -> float:
        """Free space propagation delay of the direct path, ns."""
        return self.tr_distance / SPEED_OF_LIGHT * 1e9

    def lobes(self, side: LobeSide) -> tuple[SpatialLobe, ...]:
        """The spatial lobes of one end of the link."""
        return self.aod_lobes if side == LobeSide.AOD else self.aoa_lobes


def _lobes_from_labels(
    mpcs: Sequence[MultipathComponent], side: LobeSide
) -> tuple[SpatialLobe, ...]:
    """Groups MPCs by lobe label and centers each lobe on its strongest path."""
    if side == LobeSide.AOD:
        attr, az_attr, el_attr = "lobe_id_tx", "aod_az", "aod_el"
    else:
        attr, az_attr, el_attr = "lobe_id_rx", "aoa_az", "aoa_el"
    lobes = []
    for lid in sorted({getattr(m, attr) for m in mpcs}):
        members = tuple(i for i, m in enumerate(mpcs) if getattr(m, attr) == lid)
        strongest = max(members, key=lambda i: mpcs[i].power)
        lobes.append(
            SpatialLobe(
                lobe_id=lid,
                side=side,
                azimuth=getattr(mpcs[strongest], az_attr),
                elevation=getattr(mpcs[strongest], el_attr),
                members=members,
                power=math.fsum(mpcs[i].power for i in members),
            )
        )
    return tuple(lobes)

"""Antenna array geometries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal, Self

import numpy as np

from chansim.config import ArrayType

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from chansim.config import SimulationConfig


@dataclass(frozen=True)
class ArrayGeometry:
    """A uniform linear or rectangular array.

    Element m of a ULA sits at m * spacing along a line. Element m of a URA sits
    at row m // W and column m % W of a grid with the same spacing in both
    dimensions. Spacings are in wavelengths and indices start at 0.
    """

    kind: ArrayType
    n_elements: int
    elements_per_row: int
    spacing: float
    """Wavelengths."""

    def __post_init__(self) -> None:
        """Checks the element count matches the layout."""
        if self.n_elements < 1:
            raise ValueError(
                f"an array needs at least 1 element, got {self.n_elements}"
            )
        if self.spacing <= 0:
            raise ValueError(f"element spacing must be > 0, got {self.spacing:g}")
        if self.elements_per_row < 1 or self.n_elements % self.elements_per_row:
            raise ValueError(
                f"{self.elements_per_row} elements per row do not divide "
                f"{self.n_elements} elements"
            )

    @classmethod
    def ula(cls, n_elements: int, spacing: float = 0.5) -> Self:
        """A linear array."""
        return cls(ArrayType.ULA, n_elements, n_elements, spacing)

    @classmethod
    def ura(cls, n_elements: int, elements_per_row: int, spacing: float = 0.5) -> Self:
        """A rectangular array with elements_per_row columns."""
        return cls(ArrayType.URA, n_elements, elements_per_row, spacing)

    @classmethod
    def from_config(cls, config: SimulationConfig, side: Literal["tx", "rx"]) -> Self:
        """The TX or RX array of a simulation config."""
        if side == "tx":
            return cls(
                config.tx_array_type,
                config.num_tx_elements,
                config.tx_elements_per_row,
                config.tx_spacing,
            )
        return cls(
            config.rx_array_type,
            config.num_rx_elements,
            config.rx_elements_per_row,
            config.rx_spacing,
        )

    @property
    def rows(self) -> NDArray[np.int64]:
        """Row index of every element. All zero for a ULA."""
        index = np.arange(self.n_elements)
        if self.kind == ArrayType.ULA:
            return np.zeros(self.n_elements, dtype=np.int64)
        return index // self.elements_per_row

    @property
    def columns(self) -> NDArray[np.int64]:
        """Column index of every element."""
        index = np.arange(self.n_elements)
        if self.kind == ArrayType.ULA:
            return index
        return index % self.elements_per_row

    def projection(
        self, azimuth: NDArray[np.float64], elevation: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """Element position projected on each path direction, in spacings.

        A ULA uses m * sin(az) and ignores elevation. A URA uses
        col * sin(az) cos(el) + row * sin(el).

        Returns:
            Array of shape (n_elements, n_paths).
        """
        az = np.deg2rad(np.asarray(azimuth, dtype=np.float64))
        el = np.deg2rad(np.asarray(elevation, dtype=np.float64))
        if self.kind == ArrayType.ULA:
            return np.outer(self.columns, np.sin(az))
        return np.outer(self.columns, np.sin(az) * np.cos(el)) + np.outer(
            self.rows, np.sin(el)
        )

    def steering(
        self, azimuth: NDArray[np.float64], elevation: NDArray[np.float64]
    ) -> NDArray[np.complex128]:
        """Array response exp(-j 2 pi d u) per element and path."""
        return np.exp(-2j * np.pi * self.spacing * self.projection(azimuth, elevation))

"""Tests for condition numbers and spectral efficiency."""

import math

import numpy as np
import pytest

from chansim.mimo import (
    INFINITE_CONDITION,
    ChannelMatrixSet,
    average_spectral_efficiency,
    condition_number_cdf,
    condition_number_db,
    db_to_linear,
    empirical_cdf,
    spectral_efficiency,
    waterfilling,
)

# ruff: noqa: PLR2004

SNR_DB = (-20.0, -10.0, 0.0, 10.0, 20.0, 30.0)


def _random_matrices(
    rng: np.random.Generator, count: int, shape: tuple[int, int]
) -> list[np.ndarray]:
    return [
        (rng.normal(size=shape) + 1j * rng.normal(size=shape)) / math.sqrt(2)
        for _ in range(count)
    ]


def test_condition_number_of_diagonal_matrix() -> None:
    """Tests 20 log10 of the singular value ratio."""
    assert condition_number_db(np.diag([10.0, 1.0])) == pytest.approx(20.0)
    assert condition_number_db(np.eye(3)) == pytest.approx(0.0, abs=1e-12)


def test_rank_deficient_matrix_is_infinite() -> None:
    """Tests the rank deficiency threshold."""
    assert condition_number_db(np.ones((2, 2))) == INFINITE_CONDITION


@pytest.mark.parametrize(
    "matrix", [np.zeros((2, 2)), np.zeros((0, 0))], ids=["zero", "empty"]
)
def test_degenerate_matrices_raise(matrix: np.ndarray) -> None:
    """Tests the all-zero and empty matrix errors."""
    with pytest.raises(ValueError):
        condition_number_db(matrix)


def test_empirical_cdf_counts_infinite_values() -> None:
    """Tests the CDF steps and the rank deficient count."""
    cdf = empirical_cdf([3.0, math.inf, 1.0, 2.0])
    assert cdf.values.tolist() == [1.0, 2.0, 3.0]
    assert cdf.probabilities.tolist() == [0.25, 0.5, 0.75]
    assert cdf.n_infinite == 1
    assert cdf.n_total == 4
    assert cdf.median == 2.5
    assert cdf.points[-1] == (3.0, 0.75)


def test_empirical_cdf_needs_values() -> None:
    """Tests the empty case."""
    with pytest.raises(ValueError):
        empirical_cdf([])


def test_condition_number_cdf_over_subcarriers() -> None:
    """Tests the CDF of a matrix set."""
    matrices = np.stack([np.diag([10.0, 1.0]), np.eye(2)]).astype(np.complex128)
    cdf = condition_number_cdf(ChannelMatrixSet(np.array([-1e6, 1e6]), matrices))
    assert cdf.values == pytest.approx([0.0, 20.0], abs=1e-12)
    assert cdf.probabilities.tolist() == [0.5, 1.0]


def test_waterfilling_closed_forms() -> None:
    """Tests water levels that fill both or only the strongest mode."""
    assert waterfilling(np.array([2.0, 1.0]), 1.0) == pytest.approx([0.75, 0.25])
    assert waterfilling(np.array([10.0, 0.01]), 1.0) == pytest.approx([1.0, 0.0])
    assert waterfilling(np.array([0.0, 0.0]), 1.0).tolist() == [0.0, 0.0]


def test_waterfilling_spends_the_total_power(rng: np.random.Generator) -> None:
    """Tests that the allocation is non-negative and sums to the budget."""
    for _ in range(100):
        gains = rng.exponential(1.0, 4)
        powers = waterfilling(gains, 3.0)
        assert np.all(powers >= 0)
        assert powers.sum() == pytest.approx(3.0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("snr_db", SNR_DB)
def test_identity_matrix_closed_form(n: int, snr_db: float) -> None:
    """Tests SE(I_N) = N log2(1 + snr / N) for both allocations."""
    snr = db_to_linear(snr_db)
    expected = n * math.log2(1 + snr / n)
    for allocation in ("equal", "waterfilling"):
        assert spectral_efficiency(np.eye(n), snr, n, allocation) == pytest.approx(
            expected, abs=1e-12
        )


def test_spectral_efficiency_is_monotone_in_snr(rng: np.random.Generator) -> None:
    """Tests SE does not decrease with SNR."""
    for h in _random_matrices(rng, 50, (3, 3)):
        for allocation in ("equal", "waterfilling"):
            for n in (1, 2, 3):
                values = [
                    spectral_efficiency(h, db_to_linear(s), n, allocation)
                    for s in SNR_DB
                ]
                assert np.all(np.diff(values) >= 0)


def test_waterfilling_beats_equal_split(rng: np.random.Generator) -> None:
    """Tests water-filling SE is at least equal-split SE on every matrix."""
    for h in _random_matrices(rng, 200, (3, 2)):
        for s in SNR_DB:
            for n in (1, 2):
                snr = db_to_linear(s)
                assert spectral_efficiency(
                    h, snr, n, "waterfilling"
                ) >= spectral_efficiency(h, snr, n, "equal") - 1e-12


@pytest.mark.parametrize("n_streams", [0, 3])
def test_stream_count_is_bounded(n_streams: int) -> None:
    """Tests the stream count range."""
    with pytest.raises(ValueError, match="number of streams"):
        spectral_efficiency(np.eye(2), 1.0, n_streams)


def test_negative_snr_raises() -> None:
    """Tests the SNR bound."""
    with pytest.raises(ValueError, match="SNR"):
        spectral_efficiency(np.eye(2), -1.0, 1)


def test_average_spectral_efficiency_over_runs() -> None:
    """Tests the mean over subcarriers and runs."""
    identity = ChannelMatrixSet(
        np.zeros(2), np.stack([np.eye(2), np.eye(2)]).astype(np.complex128)
    )
    doubled = ChannelMatrixSet(
        np.zeros(1), (np.sqrt(2) * np.eye(2))[None].astype(np.complex128)
    )
    average = average_spectral_efficiency([identity, doubled], 2.0, 2)
    expected = (2 * math.log2(2.0) + 2 * math.log2(3.0)) / 2
    assert average == pytest.approx(expected)


def test_average_spectral_efficiency_needs_runs() -> None:
    """Tests the empty case."""
    with pytest.raises(ValueError):
        average_spectral_efficiency([], 1.0, 1)


def test_condition_number_ignores_channel_scale(rng: np.random.Generator) -> None:
    """Tests kappa(cH) equals kappa(H) for any nonzero c."""
    for h in _random_matrices(rng, 30, (4, 2)):
        reference = condition_number_db(h)
        for scale in (1e-6, 0.5, 3.0 - 4.0j, 1e5):
            assert condition_number_db(scale * h) == pytest.approx(
                reference, abs=1e-9
            )


def test_waterfilling_rate_grows_with_streams(rng: np.random.Generator) -> None:
    """Tests opening more eigenmodes never lowers the water-filling rate."""
    for h in _random_matrices(rng, 100, (4, 4)):
        for s in SNR_DB:
            rates = [
                spectral_efficiency(h, db_to_linear(s), n, "waterfilling")
                for n in (1, 2, 3, 4)
            ]
            assert np.all(np.diff(rates) >= -1e-12)

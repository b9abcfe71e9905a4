import numpy as np
import pytest

from helix48.errors import InvalidParams
from helix48.wavelet import (
    SubbandSet,
    _analyze_rows,
    _synthesize_rows,
    band_shapes,
    dwt_forward,
    dwt_inverse,
)


def test_1d_round_trip_all_lengths(rng):
    for n in range(1, 40):
        x = rng.integers(-1000, 1000, (3, n)).astype(np.int64)
        lo, hi = _analyze_rows(x)
        assert lo.shape[1] == (n + 1) // 2
        assert hi.shape[1] == n // 2
        assert np.array_equal(_synthesize_rows(lo, hi), x)


def test_2d_round_trip(rng):
    for h, w, levels in [(64, 64, 1), (64, 64, 2), (64, 64, 3), (65, 43, 3), (17, 9, 2), (2, 2, 1)]:
        img = rng.integers(0, 256, (h, w)).astype(np.int64)
        bands = dwt_forward(img, levels)
        assert np.array_equal(dwt_inverse(bands), img)


def test_coefficient_count_preserved(rng):
    img = rng.integers(0, 256, (37, 53)).astype(np.int64)
    bands = dwt_forward(img, 3)
    assert sum(b.size for _, b in bands.ordered_bands()) == img.size
    assert [b.shape for _, b in bands.ordered_bands()] == band_shapes(37, 53, 3)


def test_constant_image_detail_free():
    img = np.full((32, 48), 128, dtype=np.int64)
    bands = dwt_forward(img, 3)
    assert np.all(bands.ll == 128)
    for level in bands.details:
        for key in ("HL", "LH", "HH"):
            assert np.all(level[key] == 0)


def test_tiny_constant_block():
    img = np.full((2, 2), 7, dtype=np.int64)
    bands = dwt_forward(img, 1)
    assert bands.ll.shape == (1, 1) and bands.ll[0, 0] == 7
    for key in ("HL", "LH", "HH"):
        assert np.all(bands.details[0][key] == 0)


def test_all_zero_bands_invert_to_zero():
    shapes = band_shapes(16, 16, 2)
    zero = SubbandSet(
        height=16,
        width=16,
        levels=2,
        ll=np.zeros(shapes[0], np.int64),
        details=[
            {"HL": np.zeros(shapes[1], np.int64), "LH": np.zeros(shapes[2], np.int64), "HH": np.zeros(shapes[3], np.int64)},
            {"HL": np.zeros(shapes[4], np.int64), "LH": np.zeros(shapes[5], np.int64), "HH": np.zeros(shapes[6], np.int64)},
        ],
    )
    assert np.all(dwt_inverse(zero) == 0)


def test_geometry_validation(rng):
    with pytest.raises(InvalidParams):
        dwt_forward(np.zeros((4, 4), np.int64), 3)  # too small for 3 levels
    with pytest.raises(InvalidParams):
        dwt_forward(np.zeros((8, 8), np.int64), 0)
    bands = dwt_forward(rng.integers(0, 256, (16, 16)).astype(np.int64), 2)
    bands.details[0]["HH"] = np.zeros((5, 5), np.int64)  # break geometry
    with pytest.raises(InvalidParams):
        dwt_inverse(bands)

"""Reversible integer 5/3 lifting wavelet, dyadic decomposition.

One lifting step along an axis splits a signal into ceil(n/2) lowpass and
floor(n/2) highpass samples:

    d[i] = x[2i+1] - floor((x[2i] + x[2i+2]) / 2)
    s[i] = x[2i]   + floor((d[i-1] + d[i] + 2) / 4)

with whole-sample symmetric extension at the edges.  Everything is exact
int64 arithmetic, so synthesis reverses analysis bit for bit.

Band naming: the first letter is the horizontal (column) filter, the
second the vertical (row) filter; HL is the horizontally-highpassed,
vertically-lowpassed band.  Serialization order is the deepest LL first,
then HL, LH, HH per level from deepest to shallowest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams

DETAIL_KEYS = ("HL", "LH", "HH")


def _analyze_rows(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split along axis 1 into (lowpass, highpass)."""
    n = x.shape[1]
    if n == 1:
        return x.copy(), x[:, :0].copy()
    even = x[:, 0::2]
    odd = x[:, 1::2]
    ne = even.shape[1]
    no = odd.shape[1]
    if n % 2 == 0:
        e_next = np.concatenate([even[:, 1:], even[:, -1:]], axis=1)
    else:
        e_next = even[:, 1:]
    d = odd - ((even[:, :no] + e_next) >> 1)
    d_prev = np.concatenate([d[:, :1], d[:, : ne - 1]], axis=1)
    d_curr = d if ne == no else np.concatenate([d, d[:, -1:]], axis=1)
    s = even + ((d_prev + d_curr + 2) >> 2)
    return s, d


def _synthesize_rows(s: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Exact inverse of :func:`_analyze_rows`."""
    ne = s.shape[1]
    no = d.shape[1]
    n = ne + no
    if n == 1:
        return s.copy()
    d_prev = np.concatenate([d[:, :1], d[:, : ne - 1]], axis=1)
    d_curr = d if ne == no else np.concatenate([d, d[:, -1:]], axis=1)
    even = s - ((d_prev + d_curr + 2) >> 2)
    if n % 2 == 0:
        e_next = np.concatenate([even[:, 1:], even[:, -1:]], axis=1)
    else:
        e_next = even[:, 1:]
    odd = d + ((even[:, :no] + e_next) >> 1)
    out = np.empty((s.shape[0], n), dtype=np.int64)
    out[:, 0::2] = even
    out[:, 1::2] = odd
    return out


def _analyze_cols(x):
    lo, hi = _analyze_rows(np.ascontiguousarray(x.T))
    return lo.T, hi.T


def _synthesize_cols(s, d):
    return _synthesize_rows(
        np.ascontiguousarray(s.T), np.ascontiguousarray(d.T)
    ).T


@dataclass
class SubbandSet:
    """Result of a dyadic decomposition; ``details[0]`` is the deepest level."""

    height: int
    width: int
    levels: int
    ll: np.ndarray
    details: list[dict[str, np.ndarray]]

    def ordered_bands(self) -> list[tuple[str, np.ndarray]]:
        """Bands in canonical serialization order."""
        out = [("LL", self.ll)]
        for depth, level in enumerate(self.details):
            for key in DETAIL_KEYS:
                out.append((f"{key}{self.levels - depth}", level[key]))
        return out


def band_shapes(height: int, width: int, levels: int) -> list[tuple[int, int]]:
    """Shapes of the bands in canonical order for a given geometry."""
    dims = [(height, width)]
    r, c = height, width
    for _ in range(levels):
        r, c = (r + 1) // 2, (c + 1) // 2
        dims.append((r, c))
    shapes = [dims[levels]]
    for lvl in range(levels, 0, -1):
        r0, c0 = dims[lvl - 1]
        r1, c1 = dims[lvl]
        shapes.append((r1, c0 - c1))  # HL
        shapes.append((r0 - r1, c1))  # LH
        shapes.append((r0 - r1, c0 - c1))  # HH
    return shapes


def dwt_forward(image: np.ndarray, levels: int) -> SubbandSet:
    """Decompose an image into ``levels`` dyadic subband levels."""
    if image.ndim != 2:
        raise InvalidParams("image must be two-dimensional")
    h, w = image.shape
    if levels < 1:
        raise InvalidParams("levels must be >= 1")
    if min(h, w) < 2**levels:
        raise InvalidParams(
            f"image {h}x{w} too small for {levels} decomposition levels"
        )
    cur = image.astype(np.int64)
    details = []
    for _ in range(levels):
        lo_h, hi_h = _analyze_rows(cur)
        ll, lh = _analyze_cols(lo_h)
        hl, hh = _analyze_cols(hi_h)
        details.append({"HL": hl, "LH": lh, "HH": hh})
        cur = ll
    details.reverse()
    return SubbandSet(height=h, width=w, levels=levels, ll=cur, details=details)


def dwt_inverse(bands: SubbandSet) -> np.ndarray:
    """Exact inverse of :func:`dwt_forward` (no range clamping)."""
    expected = band_shapes(bands.height, bands.width, bands.levels)
    got = [b.shape for _, b in bands.ordered_bands()]
    if got != expected:
        raise InvalidParams(f"band geometry mismatch: {got} != {expected}")
    cur = bands.ll
    for level in bands.details:
        lo_h = _synthesize_cols(cur, level["LH"])
        hi_h = _synthesize_cols(level["HL"], level["HH"])
        cur = _synthesize_rows(lo_h, hi_h)
    return cur

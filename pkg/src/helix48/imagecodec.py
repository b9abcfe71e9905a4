"""Wavelet bit-plane codec driving the base-48 coder.

Pipeline: 5/3 integer DWT -> deadzone scalar quantization -> per-band
magnitude bit planes coded MSB-first through one shared arithmetic coder.
Each band owns five contexts: three significance contexts keyed by the
number of already-significant 8-neighbours (clamped to 2), one sign
context, one refinement context.  Rate control truncates low planes;
reconstruction then adds the midpoint of the remaining uncertainty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from ._kernels import CTX_PER_BAND
from .arith import DigitDecoder, DigitEncoder, ModelTable
from .errors import CorruptPayload, InvalidParams
from .wavelet import SubbandSet, band_shapes, dwt_forward, dwt_inverse


@dataclass
class ImageParams:
    """Everything a decoder needs besides the digit stream itself."""

    width: int
    height: int
    levels: int
    step: Fraction
    planes_coded: list[int]  # per band, canonical band order
    n_planes: list[int]

    @property
    def n_bands(self) -> int:
        return 3 * self.levels + 1


def quantize(values: np.ndarray, step: Fraction) -> tuple[np.ndarray, np.ndarray]:
    """Deadzone quantizer: magnitude = floor(|v| / step), plus sign bits."""
    if step <= 0:
        raise InvalidParams("quantizer step must be positive")
    mag = np.abs(values) * step.denominator // step.numerator
    sign_neg = (values < 0).astype(np.uint8)
    return mag, sign_neg


def dequantize(
    mag: np.ndarray, sign_neg: np.ndarray, step: Fraction, planes_dropped: int = 0
) -> np.ndarray:
    """Midpoint reconstruction at the surviving precision, rounded to int.

    With no truncation and step <= 1 the reconstruction is plain
    magnitude * step, which makes integer inputs round-trip exactly for
    steps of the form 1/k.  Otherwise significant coefficients get
    sign * (partial + 0.5) * step * 2**dropped, rounded half away from
    zero; insignificant ones are zero.
    """
    num, den = step.numerator, step.denominator
    partial = mag >> planes_dropped
    if planes_dropped == 0 and step <= 1:
        recon = (2 * partial * num + den) // (2 * den)
    else:
        recon = np.where(
            partial > 0,
            ((2 * partial + 1) * num * (1 << planes_dropped) + den) // (2 * den),
            0,
        )
    return np.where(sign_neg.astype(bool), -recon, recon)


def num_planes(mag: np.ndarray) -> int:
    """Bit length of the largest magnitude in a band (0 for an empty band)."""
    return int(mag.max()).bit_length() if mag.size else 0


def _plane_range(n_planes: int, coded: int):
    return range(n_planes - 1, n_planes - coded - 1, -1)


def encode_image(
    image: np.ndarray,
    levels: int,
    step: Fraction,
    planes_kept: int | None = None,
) -> tuple[np.ndarray, ImageParams, int]:
    """Encode a grayscale image; returns (digits, params, bits_coded)."""
    if planes_kept is not None and planes_kept < 0:
        raise InvalidParams("planes_kept must be >= 0")
    bands = dwt_forward(image, levels)
    models = ModelTable(CTX_PER_BAND * (3 * levels + 1))
    enc = DigitEncoder()
    planes_coded: list[int] = []
    plane_counts: list[int] = []
    total_bits = 0
    for band_idx, (_, band) in enumerate(bands.ordered_bands()):
        mag, sign_neg = quantize(band, step)
        npl = num_planes(mag)
        coded = npl if planes_kept is None else min(npl, planes_kept)
        plane_counts.append(npl)
        planes_coded.append(coded)
        sig = np.zeros(mag.shape, dtype=np.uint8)
        base_ctx = band_idx * CTX_PER_BAND
        for plane in _plane_range(npl, coded):
            enc.reserve(4 * mag.size + 16)
            enc.low, enc.range, enc.n_emitted, n_bits = _kernels.encode_plane(
                mag, sign_neg, sig, plane, base_ctx,
                models.count0, models.count1, models.adaptive,
                enc.low, enc.range, enc.buf, enc.n_emitted,
            )
            sig[sig == 2] = 1
            total_bits += n_bits
    params = ImageParams(
        width=bands.width,
        height=bands.height,
        levels=levels,
        step=step,
        planes_coded=planes_coded,
        n_planes=plane_counts,
    )
    return enc.flush(), params, total_bits


def decode_image(params: ImageParams, digits, expected_bits: int | None = None) -> np.ndarray:
    """Mirror of :func:`encode_image`; returns a uint8 image."""
    shapes = band_shapes(params.height, params.width, params.levels)
    if len(shapes) != len(params.n_planes) or len(shapes) != len(params.planes_coded):
        raise InvalidParams("band metadata does not match geometry")
    models = ModelTable(CTX_PER_BAND * params.n_bands)
    dec = DigitDecoder(digits)
    recon_bands: list[np.ndarray] = []
    total_bits = 0
    for band_idx, shape in enumerate(shapes):
        npl = params.n_planes[band_idx]
        coded = params.planes_coded[band_idx]
        if coded > npl:
            raise InvalidParams("planes_coded exceeds n_planes")
        mag = np.zeros(shape, dtype=np.int64)
        sign_neg = np.zeros(shape, dtype=np.uint8)
        sig = np.zeros(shape, dtype=np.uint8)
        base_ctx = band_idx * CTX_PER_BAND
        for plane in _plane_range(npl, coded):
            dec.value, dec.range, dec.pos, n_bits = _kernels.decode_plane(
                mag, sign_neg, sig, plane, base_ctx,
                models.count0, models.count1, models.adaptive,
                dec.digits, dec.value, dec.range, dec.pos,
            )
            sig[sig == 2] = 1
            total_bits += n_bits
        recon_bands.append(dequantize(mag, sign_neg, params.step, npl - coded))
    if expected_bits is not None and total_bits != expected_bits:
        raise CorruptPayload(
            f"decoded {total_bits} bits, header declared {expected_bits}"
        )
    ll = recon_bands[0]
    details = []
    for lvl in range(params.levels):
        group = recon_bands[1 + 3 * lvl : 4 + 3 * lvl]
        details.append(dict(zip(("HL", "LH", "HH"), group)))
    bands = SubbandSet(
        height=params.height,
        width=params.width,
        levels=params.levels,
        ll=ll,
        details=details,
    )
    raw = dwt_inverse(bands)
    return np.clip(raw, 0, 255).astype(np.uint8)


def psnr(a: np.ndarray, b: np.ndarray) -> float:
    """Peak signal-to-noise ratio in dB; ``inf`` for identical images."""
    if a.shape != b.shape:
        raise InvalidParams(f"dimension mismatch: {a.shape} vs {b.shape}")
    diff = a.astype(np.float64) - b.astype(np.float64)
    mse = float(np.mean(diff * diff))
    if mse == 0.0:
        return float("inf")
    return 10.0 * np.log10(255.0**2 / mse)

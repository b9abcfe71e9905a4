"""Adaptive binary arithmetic coder with base-48 digit output.

The coder narrows an interval inside ``[0, 1)`` one input bit at a time,
keeping a 10-digit base-48 register window ``(low, range)``.  Settled
leading digits leave the register during renormalization; a carry out of
the register increments the emitted digit chain in place.  All register
updates are exact integer operations, so the buffered digits plus the
final ``(low, range)`` describe the final interval exactly.  Finalizing a
stream therefore does not append a conservative tail: it picks the number
with the shortest base-48 development inside the exact final interval,
which a decoder reconstructs by padding missing digits with zeros.

:func:`oracle_encode` recomputes the same interval with independent
arbitrary-precision bookkeeping and applies the shortest-development rule
directly; it exists as a cross-check for the register coder.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _kernels
from ._kernels import BASE, REG_DIGITS, REG_TOP, REG_TOTAL, RESCALE_LIMIT

__all__ = [
    "BASE",
    "ModelTable",
    "DigitEncoder",
    "DigitDecoder",
    "encode_bits",
    "decode_bits",
    "oracle_encode",
    "truncate_base48",
]

_POW48: dict[int, int] = {}


def _pow48(k: int) -> int:
    p = _POW48.get(k)
    if p is None:
        p = 48**k
        _POW48[k] = p
    return p


def _digits_to_int(digits) -> int:
    """Value of a big-endian base-48 digit sequence (divide and conquer)."""
    n = len(digits)
    if n <= 32:
        v = 0
        for d in digits:
            v = v * BASE + int(d)
        return v
    h = n // 2
    return _digits_to_int(digits[:h]) * _pow48(n - h) + _digits_to_int(digits[h:])


def _int_to_digits(value: int, n: int) -> list[int]:
    """Big-endian base-48 digits of ``value``, zero-padded to width ``n``."""
    if n <= 32:
        out = [0] * n
        for i in range(n - 1, -1, -1):
            value, d = divmod(value, BASE)
            out[i] = d
        return out
    h = n // 2
    q, r = divmod(value, _pow48(n - h))
    return _int_to_digits(q, h) + _int_to_digits(r, n - h)


class ModelTable:
    """Adaptive binary probability models, one per integer context id.

    Each context keeps Laplace-initialized counts; p(0) = count0 / total.
    After a bit is coded the observed count is incremented, and both
    counts are halved (floored at 1) once the total exceeds 1024.
    ``adaptive=False`` freezes the counts.
    """

    def __init__(self, n_contexts: int, *, adaptive: bool = True):
        if n_contexts < 1:
            raise ValueError("need at least one context")
        self.count0 = np.ones(n_contexts, dtype=np.int64)
        self.count1 = np.ones(n_contexts, dtype=np.int64)
        self.adaptive = adaptive

    def __len__(self) -> int:
        return len(self.count0)

    def copy(self) -> "ModelTable":
        other = ModelTable(len(self), adaptive=self.adaptive)
        other.count0[:] = self.count0
        other.count1[:] = self.count1
        return other

    def p_zero(self, ctx: int) -> Fraction:
        c0 = int(self.count0[ctx])
        return Fraction(c0, c0 + int(self.count1[ctx]))

    def update(self, ctx: int, bit: int) -> None:
        """Python mirror of the kernel-side update rule."""
        if not self.adaptive:
            return
        if bit == 0:
            self.count0[ctx] += 1
        else:
            self.count1[ctx] += 1
        if self.count0[ctx] + self.count1[ctx] > RESCALE_LIMIT:
            self.count0[ctx] = max(1, int(self.count0[ctx]) >> 1)
            self.count1[ctx] = max(1, int(self.count1[ctx]) >> 1)


def _as_bits(bits) -> np.ndarray:
    arr = np.ascontiguousarray(bits, dtype=np.uint8)
    if arr.ndim != 1:
        raise ValueError("bits must be one-dimensional")
    if arr.size and arr.max() > 1:
        raise ValueError("bits must be 0 or 1")
    return arr


def _as_ctxs(contexts, n_models: int) -> np.ndarray:
    arr = np.ascontiguousarray(contexts, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("contexts must be one-dimensional")
    if arr.size and (arr.min() < 0 or arr.max() >= n_models):
        raise ValueError("unknown context id")
    return arr


def _as_digits(digits) -> np.ndarray:
    arr = np.ascontiguousarray(digits, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("digit stream must be one-dimensional")
    if arr.size and (arr.min() < 0 or arr.max() > _kernels.MAX_DIGIT):
        raise ValueError("digit out of range [0, 47]")
    return arr


class DigitEncoder:
    """Incremental encoder; feed bit batches, then :meth:`flush` once."""

    def __init__(self):
        self.low = 0
        self.range = REG_TOTAL
        self.buf = np.zeros(256, dtype=np.int64)
        self.n_emitted = 0

    def reserve(self, extra_digits: int) -> None:
        need = self.n_emitted + extra_digits
        if need > len(self.buf):
            grown = np.zeros(max(need, 2 * len(self.buf)), dtype=np.int64)
            grown[: self.n_emitted] = self.buf[: self.n_emitted]
            self.buf = grown

    def encode(self, bits, contexts, models: ModelTable) -> None:
        bits = _as_bits(bits)
        ctxs = _as_ctxs(contexts, len(models))
        if len(bits) != len(ctxs):
            raise ValueError("bits and contexts must have equal length")
        self.reserve(2 * len(bits) + 16)
        self.low, self.range, self.n_emitted = _kernels.encode_stream(
            bits, ctxs, models.count0, models.count1, models.adaptive,
            self.low, self.range, self.buf, self.n_emitted,
        )

    def exact_interval(self) -> tuple[Fraction, Fraction]:
        """The interval currently represented, as exact rationals in [0, 1)."""
        scale = _pow48(self.n_emitted + REG_DIGITS)
        lo = _digits_to_int(self.buf[: self.n_emitted]) * REG_TOTAL + int(self.low)
        return Fraction(lo, scale), Fraction(lo + int(self.range), scale)

    def flush(self) -> np.ndarray:
        """Emit the shortest base-48 development inside the final interval."""
        positions = self.n_emitted + REG_DIGITS
        lo = _digits_to_int(self.buf[: self.n_emitted]) * REG_TOTAL + int(self.low)
        hi = lo + int(self.range)

        def has_multiple(n: int) -> bool:
            step = _pow48(positions - n)
            return -(-lo // step) * step < hi

        # minimal digit count; has_multiple is monotone in n and always
        # true at n == positions (step 1)
        if has_multiple(0):
            n = 0
        else:
            lo_n, hi_n = 0, positions
            while hi_n - lo_n > 1:
                mid = (lo_n + hi_n) // 2
                if has_multiple(mid):
                    hi_n = mid
                else:
                    lo_n = mid
            n = hi_n
        step = _pow48(positions - n)
        return np.array(_int_to_digits(-(-lo // step), n), dtype=np.int64)


class DigitDecoder:
    """Incremental decoder over a digit stream (zero-padded past its end)."""

    def __init__(self, digits):
        self.digits = _as_digits(digits)
        value = 0
        for i in range(REG_DIGITS):
            d = int(self.digits[i]) if i < len(self.digits) else 0
            value = value * BASE + d
        self.value = value
        self.range = REG_TOTAL
        self.pos = REG_DIGITS

    def decode(self, n_bits: int, contexts, models: ModelTable) -> np.ndarray:
        ctxs = _as_ctxs(contexts, len(models))
        if len(ctxs) != n_bits:
            raise ValueError("contexts must have length n_bits")
        bits = np.empty(n_bits, dtype=np.uint8)
        self.value, self.range, self.pos = _kernels.decode_stream(
            n_bits, ctxs, models.count0, models.count1, models.adaptive,
            self.digits, self.value, self.range, self.pos, bits,
        )
        return bits


def encode_bits(bits, contexts, models: ModelTable) -> np.ndarray:
    """One-shot encode: returns the base-48 digit stream for ``bits``."""
    enc = DigitEncoder()
    enc.encode(bits, contexts, models)
    return enc.flush()


def decode_bits(digits, n_bits: int, contexts, models: ModelTable) -> np.ndarray:
    """One-shot decode of ``n_bits`` bits from a digit stream."""
    return DigitDecoder(digits).decode(n_bits, contexts, models)


def oracle_encode(bits, contexts, models: ModelTable) -> np.ndarray:
    """Reference encoder using exact big-integer interval bookkeeping.

    Replays the register coder's split schedule (so both model identical
    sub-intervals), tracks the interval lower bound without any digit
    emission or carry machinery, and finally picks the smallest number
    with the shortest base-48 development inside the interval.  Intended
    for short messages; cost grows with message length.
    """
    bits = _as_bits(bits)
    ctxs = _as_ctxs(contexts, len(models))
    if len(bits) != len(ctxs):
        raise ValueError("bits and contexts must have equal length")

    lo = 0  # numerator over 48**(REG_DIGITS + shifts)
    rng = REG_TOTAL
    shifts = 0
    for k in range(len(bits)):
        ctx = int(ctxs[k])
        c0 = int(models.count0[ctx])
        total = c0 + int(models.count1[ctx])
        s = (rng // total) * c0 + (rng % total) * c0 // total
        if s < 1:
            s = 1
        elif s > rng - 1:
            s = rng - 1
        if bits[k] == 0:
            rng = s
        else:
            lo += s
            rng -= s
        while rng < REG_TOP:
            rng *= BASE
            lo *= BASE
            shifts += 1
        models.update(ctx, int(bits[k]))

    positions = REG_DIGITS + shifts
    hi = lo + rng
    for n in range(positions + 1):
        step = 48 ** (positions - n)
        a = -(-lo // step)
        if a * step < hi:
            break
    out = []
    for _ in range(n):
        a, d = divmod(a, 48)
        out.append(d)
    out.reverse()
    return np.array(out, dtype=np.int64)


def truncate_base48(x: Fraction, n: int) -> Fraction:
    """Truncate ``x`` to ``n`` base-48 digits: floor(48**n * x) / 48**n.

    The truncation error is always in [0, 48**-n), which is what makes
    every real in [0, 1] approachable by finite base-48 developments.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = _pow48(n)
    scaled = x * p
    return Fraction(scaled.numerator // scaled.denominator, p)

"""Numba-compiled hot loops for the base-48 range coder and bit-plane passes.

All register arithmetic stays inside int64: the register holds 10 base-48
digits (48**10 < 2**56), and the split point is computed in two pieces so
that no intermediate product exceeds 48**10 * 48.
"""

from __future__ import annotations

import numba as nb

BASE = 48
MAX_DIGIT = BASE - 1
REG_DIGITS = 10
REG_TOTAL = BASE**REG_DIGITS
REG_TOP = BASE ** (REG_DIGITS - 1)
RESCALE_LIMIT = 1024

# per-band context slots for the bit-plane coder
CTX_SIGN = 3
CTX_REFINE = 4
CTX_PER_BAND = 5


@nb.njit(inline="always")
def _split_point(rng, c0, total):
    # floor(rng * c0 / total) without overflowing int64; both halves >= 1
    s = (rng // total) * c0 + (rng % total) * c0 // total
    if s < 1:
        s = 1
    elif s > rng - 1:
        s = rng - 1
    return s


@nb.njit(inline="always")
def _update_model(count0, count1, ctx, bit, adaptive):
    if adaptive:
        if bit == 0:
            count0[ctx] += 1
        else:
            count1[ctx] += 1
        if count0[ctx] + count1[ctx] > RESCALE_LIMIT:
            c = count0[ctx] >> 1
            count0[ctx] = c if c > 0 else 1
            c = count1[ctx] >> 1
            count1[ctx] = c if c > 0 else 1


@nb.njit(inline="always")
def _enc_step(bit, ctx, count0, count1, adaptive, low, rng, out, n_out):
    c0 = count0[ctx]
    s = _split_point(rng, c0, c0 + count1[ctx])
    if bit == 0:
        rng = s
    else:
        low += s
        rng -= s
        if low >= REG_TOTAL:
            # carry: increment the emitted digit chain (47s roll over to 0).
            # A carry before any emission, or cascading past the first digit,
            # would mean the coded value reached 1.0 and cannot happen.
            low -= REG_TOTAL
            i = n_out - 1
            while out[i] == MAX_DIGIT:
                out[i] = 0
                i -= 1
            out[i] += 1
    while rng < REG_TOP:
        out[n_out] = low // REG_TOP
        n_out += 1
        low = (low % REG_TOP) * BASE
        rng *= BASE
    _update_model(count0, count1, ctx, bit, adaptive)
    return low, rng, n_out


@nb.njit(inline="always")
def _dec_step(ctx, count0, count1, adaptive, digits, value, rng, pos):
    c0 = count0[ctx]
    s = _split_point(rng, c0, c0 + count1[ctx])
    if value < s:
        bit = 0
        rng = s
    else:
        bit = 1
        value -= s
        rng -= s
    while rng < REG_TOP:
        if pos < digits.shape[0]:
            d = digits[pos]
        else:
            d = 0  # reads past the stream end are zero
        pos += 1
        value = value * BASE + d
        rng *= BASE
    _update_model(count0, count1, ctx, bit, adaptive)
    return bit, value, rng, pos


@nb.njit(cache=True)
def encode_stream(bits, ctxs, count0, count1, adaptive, low, rng, out, n_out):
    for k in range(bits.shape[0]):
        low, rng, n_out = _enc_step(
            bits[k], ctxs[k], count0, count1, adaptive, low, rng, out, n_out
        )
    return low, rng, n_out


@nb.njit(cache=True)
def decode_stream(n_bits, ctxs, count0, count1, adaptive, digits, value, rng, pos, bits_out):
    for k in range(n_bits):
        bit, value, rng, pos = _dec_step(
            ctxs[k], count0, count1, adaptive, digits, value, rng, pos
        )
        bits_out[k] = bit
    return value, rng, pos


@nb.njit(inline="always")
def _significance_ctx(sig, i, j, h, w):
    # count significant 8-neighbours (live state), clamped to 2
    n = 0
    i0 = i - 1 if i > 0 else 0
    i1 = i + 2 if i + 2 <= h else h
    j0 = j - 1 if j > 0 else 0
    j1 = j + 2 if j + 2 <= w else w
    for ii in range(i0, i1):
        for jj in range(j0, j1):
            if (ii != i or jj != j) and sig[ii, jj] != 0:
                n += 1
    return n if n < 2 else 2


@nb.njit(cache=True)
def encode_plane(mag, sign_neg, sig, plane, base_ctx, count0, count1, adaptive, low, rng, out, n_out):
    """Code one magnitude bit plane of a band; returns state + bits coded.

    sig: 0 = insignificant, 1 = significant in an earlier plane,
    2 = became significant in this plane (caller merges 2 -> 1 afterwards).
    """
    h, w = mag.shape
    n_bits = 0
    for i in range(h):
        for j in range(w):
            bit = (mag[i, j] >> plane) & 1
            if sig[i, j] == 1:
                low, rng, n_out = _enc_step(
                    bit, base_ctx + CTX_REFINE, count0, count1, adaptive, low, rng, out, n_out
                )
                n_bits += 1
            else:
                ctx = base_ctx + _significance_ctx(sig, i, j, h, w)
                low, rng, n_out = _enc_step(
                    bit, ctx, count0, count1, adaptive, low, rng, out, n_out
                )
                n_bits += 1
                if bit == 1:
                    sig[i, j] = 2
                    low, rng, n_out = _enc_step(
                        sign_neg[i, j], base_ctx + CTX_SIGN, count0, count1, adaptive,
                        low, rng, out, n_out,
                    )
                    n_bits += 1
    return low, rng, n_out, n_bits


@nb.njit(cache=True)
def decode_plane(mag, sign_neg, sig, plane, base_ctx, count0, count1, adaptive, digits, value, rng, pos):
    """Mirror of encode_plane; fills mag/sign_neg/sig in place."""
    h, w = mag.shape
    n_bits = 0
    for i in range(h):
        for j in range(w):
            if sig[i, j] == 1:
                bit, value, rng, pos = _dec_step(
                    base_ctx + CTX_REFINE, count0, count1, adaptive, digits, value, rng, pos
                )
                n_bits += 1
                if bit == 1:
                    mag[i, j] |= 1 << plane
            else:
                ctx = base_ctx + _significance_ctx(sig, i, j, h, w)
                bit, value, rng, pos = _dec_step(
                    ctx, count0, count1, adaptive, digits, value, rng, pos
                )
                n_bits += 1
                if bit == 1:
                    mag[i, j] |= 1 << plane
                    sig[i, j] = 2
                    sbit, value, rng, pos = _dec_step(
                        base_ctx + CTX_SIGN, count0, count1, adaptive, digits, value, rng, pos
                    )
                    sign_neg[i, j] = sbit
                    n_bits += 1
    return value, rng, pos, n_bits

"""Fixed-rate byte <-> base-48 digit transcoding for headers and overheads.

Each byte maps to exactly two digits (value = 48 * first + second), so a
byte always costs 6 nt once the digits become codewords.  Routing the
overhead through the same codeword dictionary as the payload keeps the
whole output stream homopolymer-safe with no special cases.
"""

from __future__ import annotations

import numpy as np

from .errors import MalformedOverhead

DIGITS_PER_BYTE = 2


def bytes_to_digits(data: bytes) -> np.ndarray:
    """Expand bytes into a digit stream, two digits per byte."""
    arr = np.frombuffer(bytes(data), dtype=np.uint8).astype(np.int64)
    out = np.empty(2 * len(arr), dtype=np.int64)
    out[0::2] = arr // 48
    out[1::2] = arr % 48
    return out


def digits_to_bytes(digits) -> bytes:
    """Inverse of :func:`bytes_to_digits`.

    Raises :class:`MalformedOverhead` on odd-length input, digits outside
    [0, 47], or pairs whose value exceeds 255.
    """
    arr = np.ascontiguousarray(digits, dtype=np.int64)
    if len(arr) % 2 != 0:
        raise MalformedOverhead(f"odd digit count: {len(arr)}")
    if arr.size and (arr.min() < 0 or arr.max() > 47):
        raise MalformedOverhead("digit out of range [0, 47]")
    values = 48 * arr[0::2] + arr[1::2]
    if values.size and values.max() > 255:
        raise MalformedOverhead("digit pair exceeds byte range")
    return values.astype(np.uint8).tobytes()

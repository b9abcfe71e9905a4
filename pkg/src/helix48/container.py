"""Container framing: a transcoded byte header followed by payload digits.

Header layout (bytes, all integers big-endian), fixed part first:

    offset  size  field
    0       4     magic "HLX1"
    4       1     mode (0 = raw file, 1 = image)
    5       8     payload_bit_count
    13      8     payload_digit_count
    21      4     CRC32 of the payload digits, one byte per digit
                  (polynomial 0xEDB88320, reflected; zlib.crc32)

Image mode appends, with n_bands = 3 * levels + 1:

    25      4     width
    29      4     height
    33      1     levels
    34      4     quantizer step numerator
    38      4     quantizer step denominator
    42      nb    planes actually coded, one byte per band
    42+nb   nb    total magnitude planes, one byte per band

Bands follow the canonical order (deepest LL, then HL, LH, HH per level
from deepest to shallowest).  The header bytes become digits via the
fixed-rate transcoder, so its length in digits is exactly twice its
length in bytes and the parser never needs a delimiter.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadMagic, CorruptPayload, InvalidParams, TruncatedContainer
from .imagecodec import ImageParams
from .transcode import bytes_to_digits, digits_to_bytes

MAGIC = b"HLX1"
MODE_RAW = 0
MODE_IMAGE = 1

_FIXED_LEN = 25  # bytes


@dataclass
class ContainerHeader:
    mode: int
    payload_bit_count: int
    payload_digit_count: int
    checksum: int
    image: ImageParams | None = None


def payload_checksum(digits) -> int:
    arr = np.ascontiguousarray(digits, dtype=np.int64)
    return zlib.crc32(arr.astype(np.uint8).tobytes())


def header_for_payload(
    mode: int, bit_count: int, payload, image: ImageParams | None = None
) -> ContainerHeader:
    """Build a header whose counts and checksum match ``payload``."""
    if mode == MODE_IMAGE and image is None:
        raise InvalidParams("image mode requires image parameters")
    return ContainerHeader(
        mode=mode,
        payload_bit_count=bit_count,
        payload_digit_count=len(payload),
        checksum=payload_checksum(payload),
        image=image,
    )


def serialize_header(header: ContainerHeader) -> bytes:
    out = MAGIC + struct.pack(
        ">BQQI",
        header.mode,
        header.payload_bit_count,
        header.payload_digit_count,
        header.checksum,
    )
    if header.mode == MODE_RAW:
        return out
    if header.mode != MODE_IMAGE:
        raise InvalidParams(f"unsupported container mode {header.mode}")
    img = header.image
    if img is None:
        raise InvalidParams("image mode requires image parameters")
    nb = img.n_bands
    if len(img.planes_coded) != nb or len(img.n_planes) != nb:
        raise InvalidParams("per-band plane lists must have one entry per band")
    if not 0 < img.step.numerator < 2**32 or not 0 < img.step.denominator < 2**32:
        raise InvalidParams("quantizer step does not fit the header fields")
    if any(not 0 <= p <= 255 for p in img.planes_coded + img.n_planes):
        raise InvalidParams("plane counts must fit one byte")
    out += struct.pack(
        ">IIBII",
        img.width,
        img.height,
        img.levels,
        img.step.numerator,
        img.step.denominator,
    )
    out += bytes(img.planes_coded) + bytes(img.n_planes)
    return out


def build_container(header: ContainerHeader, payload) -> np.ndarray:
    """Serialize header + payload into one digit stream."""
    payload = np.ascontiguousarray(payload, dtype=np.int64)
    if header.payload_digit_count != len(payload):
        raise InvalidParams("header digit count does not match payload")
    if header.checksum != payload_checksum(payload):
        raise InvalidParams("header checksum does not match payload")
    return np.concatenate([bytes_to_digits(serialize_header(header)), payload])


def _take_bytes(digits, start: int, n_bytes: int) -> bytes:
    end = start + 2 * n_bytes
    if end > len(digits):
        raise TruncatedContainer(
            f"need {end} header digits, stream has {len(digits)}"
        )
    return digits_to_bytes(digits[start:end])


def parse_container(digits) -> tuple[ContainerHeader, np.ndarray]:
    """Inverse of :func:`build_container`; validates magic and checksum.

    Digits past the declared payload are ignored (oligo fill).
    """
    digits = np.ascontiguousarray(digits, dtype=np.int64)
    fixed = _take_bytes(digits, 0, _FIXED_LEN)
    if fixed[:4] != MAGIC:
        raise BadMagic(f"bad magic {fixed[:4]!r}")
    mode, bit_count, digit_count, checksum = struct.unpack(">BQQI", fixed[4:])
    pos = 2 * _FIXED_LEN
    image = None
    if mode == MODE_IMAGE:
        head = _take_bytes(digits, pos, 17)
        pos += 34
        width, height, levels, num, den = struct.unpack(">IIBII", head)
        if levels < 1 or num < 1 or den < 1:
            raise InvalidParams("invalid image header fields")
        nb = 3 * levels + 1
        planes = _take_bytes(digits, pos, 2 * nb)
        pos += 4 * nb
        image = ImageParams(
            width=width,
            height=height,
            levels=levels,
            step=Fraction(num, den),
            planes_coded=list(planes[:nb]),
            n_planes=list(planes[nb:]),
        )
    elif mode != MODE_RAW:
        raise InvalidParams(f"unsupported container mode {mode}")
    if pos + digit_count > len(digits):
        raise TruncatedContainer(
            f"payload needs {digit_count} digits, {len(digits) - pos} available"
        )
    payload = digits[pos : pos + digit_count]
    if payload_checksum(payload) != checksum:
        raise CorruptPayload("payload checksum mismatch")
    header = ContainerHeader(
        mode=mode,
        payload_bit_count=bit_count,
        payload_digit_count=digit_count,
        checksum=checksum,
        image=image,
    )
    return header, payload

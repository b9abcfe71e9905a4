"""End-to-end encode/decode flows shared by the CLI and the test suite."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import ModelTable, decode_bits, encode_bits
from .codewords import gc_content, max_homopolymer_run
from .container import (
    MODE_IMAGE,
    MODE_RAW,
    build_container,
    header_for_payload,
    parse_container,
)
from .errors import CodecError, InvalidParams
from .imagecodec import decode_image, encode_image, psnr
from .oligos import DEFAULT_OLIGO_LEN, OligoRecord, packetize, reassemble


def _bytes_to_bits(data: bytes) -> np.ndarray:
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8))  # MSB first


def _bits_to_bytes(bits: np.ndarray) -> bytes:
    return np.packbits(bits).tobytes()


def encode_file_bytes(data: bytes, oligo_len: int = DEFAULT_OLIGO_LEN) -> list[OligoRecord]:
    """Compress arbitrary bytes under a single adaptive context."""
    bits = _bytes_to_bits(data)
    payload = encode_bits(bits, np.zeros(len(bits), dtype=np.int64), ModelTable(1))
    header = header_for_payload(MODE_RAW, len(bits), payload)
    return packetize(build_container(header, payload), oligo_len)


def decode_file_records(records) -> bytes:
    digits = reassemble(records)
    header, payload = parse_container(digits)
    if header.mode != MODE_RAW:
        raise InvalidParams("container does not hold a raw file")
    n_bits = header.payload_bit_count
    bits = decode_bits(payload, n_bits, np.zeros(n_bits, dtype=np.int64), ModelTable(1))
    return _bits_to_bytes(bits)[: n_bits // 8]


def encode_image_array(
    image: np.ndarray,
    step: Fraction,
    levels: int = 3,
    planes_kept: int | None = None,
    oligo_len: int = DEFAULT_OLIGO_LEN,
) -> list[OligoRecord]:
    payload, params, n_bits = encode_image(image, levels, step, planes_kept)
    header = header_for_payload(MODE_IMAGE, n_bits, payload, image=params)
    return packetize(build_container(header, payload), oligo_len)


def decode_image_records(records) -> np.ndarray:
    digits = reassemble(records)
    header, payload = parse_container(digits)
    if header.mode != MODE_IMAGE or header.image is None:
        raise InvalidParams("container does not hold an image")
    return decode_image(header.image, payload, expected_bits=header.payload_bit_count)


@dataclass
class StreamStats:
    n_oligos: int
    oligo_len: int | None  # None when lengths are mixed
    total_nt: int
    gc: float
    max_run: int
    payload_digits: int | None  # None when no container parses
    overhead_fraction: float | None
    violations: list[str]


def stream_stats(records) -> StreamStats:
    """Constraint report over a pool of oligo records."""
    records = list(records)
    if not records:
        raise InvalidParams("empty oligo pool")
    violations: list[str] = []
    lengths = {len(r.nucleotides) for r in records}
    uniform = len(lengths) == 1
    if not uniform:
        violations.append(f"mixed oligo lengths: {sorted(lengths)}")
    max_run = 0
    for r in records:
        run = max_homopolymer_run(r.nucleotides)
        if run > 3:
            violations.append(f"oligo {r.index}: homopolymer run {run}")
        if run > max_run:
            max_run = run
    pool = "".join(r.nucleotides for r in records)
    payload_digits = None
    overhead = None
    if uniform:
        try:
            header, payload = parse_container(reassemble(records))
            payload_digits = int(header.payload_digit_count)
            overhead = (len(pool) - 3 * payload_digits) / len(pool)
        except CodecError:
            pass
    return StreamStats(
        n_oligos=len(records),
        oligo_len=lengths.pop() if uniform else None,
        total_nt=len(pool),
        gc=gc_content(pool),
        max_run=max_run,
        payload_digits=payload_digits,
        overhead_fraction=overhead,
        violations=violations,
    )


@dataclass
class RdPoint:
    step: Fraction
    planes_kept: int | None
    rate_nt_per_pixel: float
    psnr_db: float


def rd_sweep(
    image: np.ndarray,
    steps,
    planes_list,
    levels: int = 3,
    oligo_len: int = DEFAULT_OLIGO_LEN,
) -> list[RdPoint]:
    """Encode/decode the grid of (step, planes_kept) pairs; rows sorted by rate."""
    points = []
    n_pixels = image.shape[0] * image.shape[1]
    for step in steps:
        for planes in planes_list:
            records = encode_image_array(
                image, step, levels=levels, planes_kept=planes, oligo_len=oligo_len
            )
            decoded = decode_image_records(records)
            rate = len(records) * oligo_len / n_pixels
            points.append(
                RdPoint(
                    step=step,
                    planes_kept=planes,
                    rate_nt_per_pixel=rate,
                    psnr_db=psnr(image, decoded),
                )
            )
    points.sort(
        key=lambda p: (
            p.rate_nt_per_pixel,
            p.step,
            p.planes_kept if p.planes_kept is not None else 1 << 30,
        )
    )
    return points

from fractions import Fraction

import numpy as np
import pytest

from helix48.container import (
    MODE_IMAGE,
    MODE_RAW,
    build_container,
    header_for_payload,
    parse_container,
)
from helix48.errors import BadMagic, CorruptPayload, InvalidParams, TruncatedContainer
from helix48.imagecodec import ImageParams


def make_raw(payload, bit_count=None):
    payload = np.asarray(payload, np.int64)
    header = header_for_payload(
        MODE_RAW, 8 * len(payload) if bit_count is None else bit_count, payload
    )
    return header, build_container(header, payload)


def test_empty_payload_round_trip():
    header, stream = make_raw([], bit_count=0)
    parsed, payload = parse_container(stream)
    assert parsed == header
    assert len(payload) == 0
    assert len(stream) == 50  # 25 fixed bytes, two digits each


def test_raw_round_trip(rng):
    payload = rng.integers(0, 48, 1000)
    header, stream = make_raw(payload, bit_count=12345)
    parsed, back = parse_container(stream)
    assert parsed.mode == MODE_RAW
    assert parsed.payload_bit_count == 12345
    assert parsed.payload_digit_count == 1000
    assert np.array_equal(back, payload)


def test_image_round_trip(rng):
    params = ImageParams(
        width=640, height=480, levels=3, step=Fraction(3, 2),
        planes_coded=[4] * 10, n_planes=[7, 6, 6, 6, 5, 5, 5, 4, 4, 4],
    )
    payload = rng.integers(0, 48, 57)
    header = header_for_payload(MODE_IMAGE, 9999, payload, image=params)
    parsed, back = parse_container(build_container(header, payload))
    assert parsed.image == params
    assert np.array_equal(back, payload)


def test_trailing_fill_ignored(rng):
    payload = rng.integers(0, 48, 64)
    _, stream = make_raw(payload)
    padded = np.concatenate([stream, np.zeros(61, np.int64)])
    _, back = parse_container(padded)
    assert np.array_equal(back, payload)


def test_single_digit_corruption_detected(rng):
    payload = rng.integers(0, 48, 200)
    _, stream = make_raw(payload)
    corrupt = stream.copy()
    pos = 50 + 17  # inside the payload region
    corrupt[pos] = (corrupt[pos] + 1) % 48
    with pytest.raises(CorruptPayload):
        parse_container(corrupt)


def test_bad_magic():
    _, stream = make_raw([1, 2, 3])
    wrong = stream.copy()
    wrong[0] = (wrong[0] + 1) % 48
    with pytest.raises(BadMagic):
        parse_container(wrong)


def test_truncation_detected(rng):
    payload = rng.integers(0, 48, 100)
    _, stream = make_raw(payload)
    with pytest.raises(TruncatedContainer):
        parse_container(stream[:40])  # inside the fixed header
    with pytest.raises(TruncatedContainer):
        parse_container(stream[:80])  # payload cut short


def test_header_payload_consistency_enforced(rng):
    payload = rng.integers(0, 48, 10)
    header = header_for_payload(MODE_RAW, 80, payload)
    with pytest.raises(InvalidParams):
        build_container(header, payload[:5])
    header.checksum ^= 1
    with pytest.raises(InvalidParams):
        build_container(header, payload)

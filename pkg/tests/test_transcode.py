import pytest
from hypothesis import given
from hypothesis import strategies as st

from helix48.codewords import digits_to_nucleotides, max_homopolymer_run
from helix48.errors import MalformedOverhead
from helix48.transcode import bytes_to_digits, digits_to_bytes


def test_examples():
    assert list(bytes_to_digits(b"\x00")) == [0, 0]
    assert list(bytes_to_digits(b"\xff")) == [5, 15]
    assert list(bytes_to_digits(b"Hi")) == [1, 24, 2, 9]
    assert digits_to_bytes([5, 15]) == b"\xff"
    assert digits_to_bytes([0, 0]) == b"\x00"


def test_zero_byte_nucleotide_form():
    assert digits_to_nucleotides(bytes_to_digits(b"\x00")) == "AATAAT"


def test_malformed_streams():
    with pytest.raises(MalformedOverhead):
        digits_to_bytes([1, 2, 3])  # odd length
    with pytest.raises(MalformedOverhead):
        digits_to_bytes([6, 0])  # 288 > 255
    with pytest.raises(MalformedOverhead):
        digits_to_bytes([0, 48])  # digit out of range
    with pytest.raises(MalformedOverhead):
        digits_to_bytes([-1, 0])


@given(st.binary(max_size=4096))
def test_round_trip_and_fixed_rate(data):
    digits = bytes_to_digits(data)
    assert len(digits) == 2 * len(data)
    assert digits_to_bytes(digits) == data
    # 6 nt per byte, homopolymer-safe
    seq = digits_to_nucleotides(digits[:512])
    assert max_homopolymer_run(seq) <= 3

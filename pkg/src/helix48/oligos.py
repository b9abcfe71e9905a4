"""Cutting digit streams into fixed-length indexed oligos and back.

Every oligo is ``oligo_len`` nt (default 200): a 4-digit base-48 index
(12 nt, most significant digit first), then floor((oligo_len - 12) / 3)
payload codewords, then 0-2 pad nucleotides.  Pads are chosen as the
first nucleotide in A < T < C < G order that differs from its
predecessor, so the homopolymer bound survives every junction.  The
final oligo's unused payload slots carry digit-0 codewords; the true
payload length lives in the container header, not here.

FASTA serialization is canonical: ``>oligo_<index>`` on one line, the
full sequence on the next, LF endings.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .codewords import CODEWORDS, NUCLEOTIDES, max_homopolymer_run
from .errors import (
    CapacityExceeded,
    InconsistentDuplicate,
    InvalidOligo,
    InvalidParams,
    MissingOligo,
    TruncatedContainer,
)

INDEX_DIGITS = 4
INDEX_NT = 3 * INDEX_DIGITS
MAX_OLIGOS = 48**INDEX_DIGITS
DEFAULT_OLIGO_LEN = 200

_CODEWORD_BYTES = np.frombuffer("".join(CODEWORDS).encode("ascii"), dtype=np.uint8)
_CODEWORD_BYTES = _CODEWORD_BYTES.reshape(48, 3)

# ascii code -> nucleotide rank in A<T<C<G order, -1 for foreign symbols
_NT_RANK = np.full(256, -1, dtype=np.int64)
for _i, _ch in enumerate(NUCLEOTIDES):
    _NT_RANK[ord(_ch)] = _i

# rank triplet -> digit, -1 where the third symbol equals the second
_TRIPLET_DIGIT = np.full((4, 4, 4), -1, dtype=np.int64)
for _d, _cw in enumerate(CODEWORDS):
    _TRIPLET_DIGIT[
        _NT_RANK[ord(_cw[0])], _NT_RANK[ord(_cw[1])], _NT_RANK[ord(_cw[2])]
    ] = _d

# ascii code of a nucleotide -> ascii of the first nucleotide differing from it
_FIRST_DIFF = np.zeros(256, dtype=np.uint8)
for _ch in NUCLEOTIDES:
    _FIRST_DIFF[ord(_ch)] = ord(next(c for c in NUCLEOTIDES if c != _ch))


@dataclass(frozen=True)
class OligoRecord:
    index: int
    nucleotides: str


def payload_capacity(oligo_len: int = DEFAULT_OLIGO_LEN) -> int:
    """Payload digits carried per oligo of the given length."""
    return (oligo_len - INDEX_NT) // 3


def packetize(digits, oligo_len: int = DEFAULT_OLIGO_LEN) -> list[OligoRecord]:
    """Cut a digit stream into indexed oligos (at least one, even if empty)."""
    if oligo_len < INDEX_NT + 3:
        raise InvalidParams(f"oligo_len must be >= {INDEX_NT + 3}")
    digits = np.ascontiguousarray(digits, dtype=np.int64)
    if digits.size and (digits.min() < 0 or digits.max() > 47):
        raise ValueError("digit out of range [0, 47]")
    cap = payload_capacity(oligo_len)
    n_oligos = max(1, math.ceil(len(digits) / cap))
    if n_oligos > MAX_OLIGOS:
        raise CapacityExceeded(
            f"{n_oligos} oligos exceed the {MAX_OLIGOS}-oligo index space"
        )
    slots = np.zeros(n_oligos * cap, dtype=np.int64)
    slots[: len(digits)] = digits
    slots = slots.reshape(n_oligos, cap)

    indices = np.arange(n_oligos, dtype=np.int64)
    idx_digits = np.empty((n_oligos, INDEX_DIGITS), dtype=np.int64)
    rem = indices
    for k in range(INDEX_DIGITS - 1, -1, -1):
        rem, idx_digits[:, k] = np.divmod(rem, 48)

    rows = np.concatenate([idx_digits, slots], axis=1)
    nt = _CODEWORD_BYTES[rows].reshape(n_oligos, 3 * (INDEX_DIGITS + cap))
    pad_len = oligo_len - INDEX_NT - 3 * cap
    for _ in range(pad_len):
        nt = np.concatenate([nt, _FIRST_DIFF[nt[:, -1]][:, None]], axis=1)
    return [
        OligoRecord(index=int(i), nucleotides=row.tobytes().decode("ascii"))
        for i, row in zip(indices, nt)
    ]


def _decode_rows(seqs: np.ndarray, n_payload: int) -> tuple[np.ndarray, np.ndarray]:
    """Decode index values and payload digits from an (n, oligo_len) byte grid."""
    ranks = _NT_RANK[seqs]
    if ranks.min() < 0:
        raise InvalidOligo("oligo contains a symbol outside {A, T, C, G}")
    # homopolymer bound: any window of four equal symbols is a violation
    w = seqs
    if w.shape[1] >= 4:
        runs4 = (
            (w[:, :-3] == w[:, 1:-2]) & (w[:, 1:-2] == w[:, 2:-1]) & (w[:, 2:-1] == w[:, 3:])
        )
        if runs4.any():
            raise InvalidOligo("homopolymer run exceeds 3")
    cw_region = ranks[:, : 3 * (INDEX_DIGITS + n_payload)]
    trip = cw_region.reshape(ranks.shape[0], -1, 3)
    dig = _TRIPLET_DIGIT[trip[:, :, 0], trip[:, :, 1], trip[:, :, 2]]
    if dig.min() < 0:
        raise InvalidOligo("invalid codeword (third symbol equals second)")
    idx = np.zeros(ranks.shape[0], dtype=np.int64)
    for k in range(INDEX_DIGITS):
        idx = idx * 48 + dig[:, k]
    return idx, dig[:, INDEX_DIGITS:]


def reassemble(records, expected_digits: int | None = None) -> np.ndarray:
    """Rebuild the digit stream from oligo records in any order.

    Duplicates are tolerated when byte-identical.  When
    ``expected_digits`` is given, exactly that many digits are returned
    (trailing fill stripped); otherwise every payload slot is returned.
    """
    by_index: dict[int, str] = {}
    for rec in records:
        prev = by_index.get(rec.index)
        if prev is None:
            by_index[rec.index] = rec.nucleotides
        elif prev != rec.nucleotides:
            raise InconsistentDuplicate(rec.index)
    if not by_index:
        raise MissingOligo([0])
    if min(by_index) < 0:
        raise InvalidOligo("negative oligo index")
    n = max(by_index) + 1
    if n > MAX_OLIGOS:
        raise InvalidOligo(f"oligo index {n - 1} outside the addressable space")
    if len(by_index) != n:
        raise MissingOligo(sorted(set(range(n)) - set(by_index)))

    lengths = {len(s) for s in by_index.values()}
    if len(lengths) != 1:
        raise InvalidOligo(f"mixed oligo lengths: {sorted(lengths)}")
    oligo_len = lengths.pop()
    if oligo_len < INDEX_NT + 3:
        raise InvalidOligo(f"oligo length {oligo_len} below minimum")
    cap = payload_capacity(oligo_len)

    try:
        pool = "".join(by_index[i] for i in range(n)).encode("ascii")
    except UnicodeEncodeError:
        raise InvalidOligo("oligo contains a non-ASCII symbol") from None
    seqs = np.frombuffer(pool, dtype=np.uint8).reshape(n, oligo_len)
    idx, payload = _decode_rows(seqs, cap)
    if not np.array_equal(idx, np.arange(n, dtype=np.int64)):
        raise InvalidOligo("embedded index does not match record position")
    digits = payload.reshape(-1)
    if expected_digits is None:
        return digits
    if expected_digits > len(digits):
        raise TruncatedContainer(
            f"stream carries {len(digits)} digits, {expected_digits} expected"
        )
    return digits[:expected_digits]


def oligo_max_run(record: OligoRecord) -> int:
    return max_homopolymer_run(record.nucleotides)


_HEADER_RE = re.compile(r"^oligo_(\d+)$")


def format_fasta(records) -> str:
    """Canonical FASTA form: one header + one sequence line per record."""
    return "".join(f">oligo_{r.index}\n{r.nucleotides}\n" for r in records)


def write_fasta(path, records) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_fasta(records))


def read_fasta(path) -> list[tuple[str, str]]:
    """Read generic (header, sequence) pairs; sequences may span lines."""
    out: list[tuple[str, str]] = []
    header = None
    chunks: list[str] = []
    with open(path, "r") as fh:
        for line in fh:
            line = line.rstrip("\n").rstrip("\r")
            if line.startswith(">"):
                if header is not None:
                    out.append((header, "".join(chunks)))
                header = line[1:].strip()
                chunks = []
            elif line:
                if header is None:
                    raise InvalidOligo("sequence data before first FASTA header")
                chunks.append(line.strip())
    if header is not None:
        out.append((header, "".join(chunks)))
    return out


def read_oligo_fasta(path) -> list[OligoRecord]:
    """Read records written by :func:`write_fasta` (strict headers)."""
    records = []
    for header, seq in read_fasta(path):
        m = _HEADER_RE.match(header)
        if not m:
            raise InvalidOligo(f"unrecognized FASTA header: {header!r}")
        records.append(OligoRecord(index=int(m.group(1)), nucleotides=seq))
    return records

"""Homopolymer-safe 3-nt codeword dictionary and nucleotide stream utilities.

The coding alphabet is the 48 three-nucleotide words ``xyz`` whose third
symbol differs from the second.  Because the last two symbols of every
codeword differ, any concatenation of codewords keeps homopolymer runs at
3 or below: a run can span at most the final symbol of one word plus the
first two of the next.

Nucleotides are single uppercase characters ordered ``A < T < C < G``;
the dictionary lists codewords lexicographically under that order, so
digit 0 is ``AAT`` and digit 47 is ``GGC``.
"""

from __future__ import annotations

from .errors import EmptyInput, InvalidCodeword

NUCLEOTIDES = "ATCG"
"""The four symbols in their defining order (A < T < C < G)."""

NUM_CODEWORDS = 48


def _enumerate() -> tuple[str, ...]:
    return tuple(
        x + y + z
        for x in NUCLEOTIDES
        for y in NUCLEOTIDES
        for z in NUCLEOTIDES
        if z != y
    )


CODEWORDS: tuple[str, ...] = _enumerate()
"""Digit-indexed codeword table: ``CODEWORDS[d]`` is the word for digit d."""

_DIGIT_BY_CODEWORD = {cw: d for d, cw in enumerate(CODEWORDS)}

assert len(CODEWORDS) == NUM_CODEWORDS
assert CODEWORDS[0] == "AAT" and CODEWORDS[47] == "GGC"


def codeword_dictionary() -> tuple[tuple[int, str], ...]:
    """Return the full (digit, codeword) dictionary in digit order."""
    return tuple(enumerate(CODEWORDS))

def digit_to_codeword(digit: int) -> str:
    """Map a base-48 digit to its 3-nt codeword."""
    if not 0 <= digit < NUM_CODEWORDS:
        raise ValueError(f"digit out of range [0, 47]: {digit}")
    return CODEWORDS[digit]


def codeword_to_digit(codeword: str) -> int:
    """Map a 3-nt codeword back to its digit.

    Raises :class:`InvalidCodeword` for words outside the dictionary
    (wrong length, unknown symbols, or third symbol equal to the second).
    """
    try:
        return _DIGIT_BY_CODEWORD[codeword]
    except KeyError:
        raise InvalidCodeword(f"not a valid codeword: {codeword!r}") from None


def is_valid_codeword(word: str) -> bool:
    return word in _DIGIT_BY_CODEWORD


def digits_to_nucleotides(digits) -> str:
    """Expand a digit sequence into its nucleotide stream."""
    return "".join(CODEWORDS[int(d)] for d in digits)


def nucleotides_to_digits(sequence: str) -> list[int]:
    """Parse a stream of concatenated codewords back into digits."""
    if len(sequence) % 3 != 0:
        raise InvalidCodeword(
            f"sequence length {len(sequence)} is not a multiple of 3"
        )
    return [
        codeword_to_digit(sequence[i : i + 3]) for i in range(0, len(sequence), 3)
    ]


def max_homopolymer_run(sequence: str) -> int:
    """Length of the longest run of identical consecutive nucleotides."""
    best = 0
    run = 0
    prev = ""
    for ch in sequence:
        run = run + 1 if ch == prev else 1
        prev = ch
        if run > best:
            best = run
    return best


def gc_content(sequence: str) -> float:
    """Fraction of G and C symbols; raises :class:`EmptyInput` on empty input."""
    if not sequence:
        raise EmptyInput("gc_content needs a non-empty sequence")
    return (sequence.count("G") + sequence.count("C")) / len(sequence)

"""Exception types raised by the helix48 codec layers."""


class CodecError(Exception):
    """Base class for all data/format errors in this package."""


class InvalidCodeword(CodecError):
    """A 3-nt word violates the codeword constraint (third symbol equals second)."""


class EmptyInput(CodecError):
    """An operation that needs at least one symbol received none."""


class MalformedOverhead(CodecError):
    """A fixed-rate transcoded digit stream cannot map back to bytes."""


class InvalidParams(CodecError):
    """Geometry or codec parameters are inconsistent or out of range."""


class BadMagic(CodecError):
    """Container does not start with the expected magic bytes."""


class TruncatedContainer(CodecError):
    """Container stream ends before the declared header/payload is complete."""


class CorruptPayload(CodecError):
    """Payload checksum mismatch."""


class CapacityExceeded(CodecError):
    """More oligos would be needed than the index space can address."""


class InvalidOligo(CodecError):
    """An oligo record violates length, constraint, or codeword rules."""


class MissingOligo(CodecError):
    """One or more oligo indices are absent from the pool."""

    def __init__(self, indices):
        self.indices = list(indices)
        super().__init__(f"missing oligo indices: {self.indices}")


class InconsistentDuplicate(CodecError):
    """Two records share an index but carry different payloads."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"conflicting duplicate records for oligo index {index}")

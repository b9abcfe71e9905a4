"""helix48: homopolymer-constrained base-48 DNA compression toolkit."""

from .arith import (
    BASE,
    DigitDecoder,
    DigitEncoder,
    ModelTable,
    decode_bits,
    encode_bits,
    oracle_encode,
    truncate_base48,
)
from .codewords import (
    CODEWORDS,
    NUCLEOTIDES,
    codeword_dictionary,
    codeword_to_digit,
    digit_to_codeword,
    gc_content,
    max_homopolymer_run,
)
from .container import (
    ContainerHeader,
    MODE_IMAGE,
    MODE_RAW,
    build_container,
    header_for_payload,
    parse_container,
)
from .imagecodec import ImageParams, decode_image, dequantize, encode_image, psnr, quantize
from .oligos import (
    DEFAULT_OLIGO_LEN,
    OligoRecord,
    packetize,
    payload_capacity,
    read_fasta,
    read_oligo_fasta,
    reassemble,
    write_fasta,
)
from .transcode import bytes_to_digits, digits_to_bytes
from .wavelet import SubbandSet, dwt_forward, dwt_inverse

__version__ = "0.1.0"

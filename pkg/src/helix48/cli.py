"""Command-line frontend.

Exit codes: 0 success, 1 usage error, 2 data/format error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import pipeline
from .errors import CodecError
from .oligos import (
    DEFAULT_OLIGO_LEN,
    OligoRecord,
    read_fasta,
    read_oligo_fasta,
    write_fasta,
)
from .pgm import read_pgm, write_pgm

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_step(text: str) -> Fraction:
    try:
        step = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"invalid step {text!r}") from None
    if step <= 0:
        raise _UsageError("step must be positive")
    return step


def _parse_planes(text: str) -> int | None:
    if text == "all":
        return None
    try:
        value = int(text)
    except ValueError:
        raise _UsageError(f"invalid planes-kept {text!r}") from None
    if value < 0:
        raise _UsageError("planes-kept must be >= 0 or 'all'")
    return value


def _csv_list(text: str) -> list[str]:
    return [item for item in (t.strip() for t in text.split(",")) if item]


def _build_parser() -> _Parser:
    parser = _Parser(prog="helix48", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode-file", help="compress any file into oligo FASTA")
    p.add_argument("input")
    p.add_argument("--out", required=True, help="output FASTA path")
    p.add_argument("--oligo-len", type=int, default=DEFAULT_OLIGO_LEN)

    p = sub.add_parser("decode-file", help="restore a file from oligo FASTA")
    p.add_argument("input")
    p.add_argument("--out", required=True, help="output file path")

    p = sub.add_parser("encode-image", help="compress an 8-bit PGM into oligo FASTA")
    p.add_argument("input")
    p.add_argument("--out", required=True, help="output FASTA path")
    p.add_argument("--step", default="1", help="quantizer step, e.g. 8 or 1/2")
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--planes-kept", default="all", help="bit planes to keep, int or 'all'")
    p.add_argument("--oligo-len", type=int, default=DEFAULT_OLIGO_LEN)

    p = sub.add_parser("decode-image", help="restore a PGM from oligo FASTA")
    p.add_argument("input")
    p.add_argument("--out", required=True, help="output PGM path")

    p = sub.add_parser("stats", help="constraint and overhead report for a FASTA pool")
    p.add_argument("input")

    p = sub.add_parser("rd-sweep", help="rate-distortion grid over steps and truncations")
    p.add_argument("input")
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument("--steps", default="1,2,4,8,16,32", help="comma-separated steps")
    p.add_argument("--planes", default="all", help="comma-separated planes-kept values")
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--oligo-len", type=int, default=DEFAULT_OLIGO_LEN)
    return parser


def _fmt_planes(planes: int | None) -> str:
    return "all" if planes is None else str(planes)


def _cmd_encode_file(args) -> int:
    with open(args.input, "rb") as fh:
        data = fh.read()
    records = pipeline.encode_file_bytes(data, oligo_len=args.oligo_len)
    write_fasta(args.out, records)
    stats = pipeline.stream_stats(records)
    rate = stats.total_nt / len(data) if data else float("inf")
    print(f"oligos: {stats.n_oligos}")
    print(f"total_nt: {stats.total_nt}")
    print(f"nt_per_byte: {rate:.4f}")
    print(f"gc_content: {stats.gc:.4f}")
    print(f"max_homopolymer_run: {stats.max_run}")
    return EXIT_OK


def _cmd_decode_file(args) -> int:
    records = read_oligo_fasta(args.input)
    data = pipeline.decode_file_records(records)
    with open(args.out, "wb") as fh:
        fh.write(data)
    print(f"bytes: {len(data)}")
    return EXIT_OK


def _cmd_encode_image(args) -> int:
    step = _parse_step(args.step)
    planes = _parse_planes(args.planes_kept)
    image = read_pgm(args.input)
    records = pipeline.encode_image_array(
        image,
        step=step,
        levels=args.levels,
        planes_kept=planes,
        oligo_len=args.oligo_len,
    )
    write_fasta(args.out, records)
    stats = pipeline.stream_stats(records)
    print(f"oligos: {stats.n_oligos}")
    print(f"total_nt: {stats.total_nt}")
    print(f"nt_per_pixel: {stats.total_nt / image.size:.6f}")
    print(f"gc_content: {stats.gc:.4f}")
    print(f"max_homopolymer_run: {stats.max_run}")
    return EXIT_OK


def _cmd_decode_image(args) -> int:
    records = read_oligo_fasta(args.input)
    image = pipeline.decode_image_records(records)
    write_pgm(args.out, image)
    print(f"pixels: {image.shape[1]}x{image.shape[0]}")
    return EXIT_OK


def _cmd_stats(args) -> int:
    pairs = read_fasta(args.input)
    # tolerate arbitrary FASTA: fall back to positional indexing when
    # headers are not in canonical oligo_<n> form
    try:
        records = read_oligo_fasta(args.input)
    except CodecError:
        records = [OligoRecord(index=i, nucleotides=seq) for i, (_, seq) in enumerate(pairs)]
    stats = pipeline.stream_stats(records)
    print(f"oligos: {stats.n_oligos}")
    print(f"oligo_len: {stats.oligo_len if stats.oligo_len is not None else 'mixed'}")
    print(f"total_nt: {stats.total_nt}")
    print(f"gc_content: {stats.gc:.4f}")
    print(f"max_homopolymer_run: {stats.max_run}")
    if stats.payload_digits is not None:
        print(f"payload_digits: {stats.payload_digits}")
        print(f"overhead_fraction: {stats.overhead_fraction:.4f}")
    else:
        print("container: not parseable")
    for v in stats.violations:
        print(f"violation: {v}")
    print(f"violations: {len(stats.violations)}")
    return EXIT_OK if not stats.violations else EXIT_DATA


def _cmd_rd_sweep(args) -> int:
    steps = [_parse_step(t) for t in _csv_list(args.steps)]
    planes = [_parse_planes(t) for t in _csv_list(args.planes)]
    image = read_pgm(args.input)
    points = pipeline.rd_sweep(
        image, steps, planes, levels=args.levels, oligo_len=args.oligo_len
    )
    lines = ["step,planes_kept,rate_nt_per_pixel,psnr_db"]
    for pt in points:
        psnr_text = "inf" if pt.psnr_db == float("inf") else f"{pt.psnr_db:.4f}"
        lines.append(
            f"{pt.step},{_fmt_planes(pt.planes_kept)},{pt.rate_nt_per_pixel:.6f},{psnr_text}"
        )
    with open(args.csv, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"points: {len(points)}")
    return EXIT_OK


_COMMANDS = {
    "encode-file": _cmd_encode_file,
    "decode-file": _cmd_decode_file,
    "encode-image": _cmd_encode_image,
    "decode-image": _cmd_decode_image,
    "stats": _cmd_stats,
    "rd-sweep": _cmd_rd_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

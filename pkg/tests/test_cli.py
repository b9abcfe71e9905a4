import numpy as np
import pytest

from conftest import natural_image
from helix48.cli import EXIT_DATA, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from helix48.pgm import read_pgm, write_pgm


@pytest.fixture
def sample_file(tmp_path, rng):
    path = tmp_path / "blob.bin"
    path.write_bytes(rng.integers(0, 256, 3000).astype(np.uint8).tobytes())
    return path


@pytest.fixture
def sample_pgm(tmp_path):
    path = tmp_path / "img.pgm"
    write_pgm(path, natural_image(7, size=64))
    return path


def test_file_round_trip(tmp_path, sample_file, capsys):
    fasta = tmp_path / "blob.fasta"
    out = tmp_path / "blob.out"
    assert main(["encode-file", str(sample_file), "--out", str(fasta)]) == EXIT_OK
    stdout = capsys.readouterr().out
    assert "nt_per_byte:" in stdout and "max_homopolymer_run:" in stdout
    assert main(["decode-file", str(fasta), "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == sample_file.read_bytes()


def test_empty_file_round_trip(tmp_path, capsys):
    src = tmp_path / "empty.bin"
    src.write_bytes(b"")
    fasta = tmp_path / "empty.fasta"
    out = tmp_path / "empty.out"
    assert main(["encode-file", str(src), "--out", str(fasta)]) == EXIT_OK
    assert main(["stats", str(fasta)]) == EXIT_OK
    assert main(["decode-file", str(fasta), "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == b""


def test_image_round_trip_lossless(tmp_path, sample_pgm, capsys):
    fasta = tmp_path / "img.fasta"
    out = tmp_path / "img.out.pgm"
    rc = main(["encode-image", str(sample_pgm), "--out", str(fasta), "--step", "1"])
    assert rc == EXIT_OK
    assert "nt_per_pixel:" in capsys.readouterr().out
    assert main(["decode-image", str(fasta), "--out", str(out)]) == EXIT_OK
    assert np.array_equal(read_pgm(out), read_pgm(sample_pgm))


def test_image_lossy_params(tmp_path, sample_pgm):
    fasta = tmp_path / "img.fasta"
    out = tmp_path / "img.out.pgm"
    rc = main([
        "encode-image", str(sample_pgm), "--out", str(fasta),
        "--step", "3/2", "--levels", "2", "--planes-kept", "4",
    ])
    assert rc == EXIT_OK
    assert main(["decode-image", str(fasta), "--out", str(out)]) == EXIT_OK
    assert read_pgm(out).shape == read_pgm(sample_pgm).shape


def test_cli_outputs_pass_stats(tmp_path, sample_file, sample_pgm, capsys):
    for args in (
        ["encode-file", str(sample_file), "--out", str(tmp_path / "a.fasta")],
        ["encode-image", str(sample_pgm), "--out", str(tmp_path / "b.fasta"), "--step", "4"],
    ):
        assert main(args) == EXIT_OK
    for name in ("a.fasta", "b.fasta"):
        assert main(["stats", str(tmp_path / name)]) == EXIT_OK
        assert "violations: 0" in capsys.readouterr().out


def test_stats_flags_violations(tmp_path, capsys):
    bad = tmp_path / "bad.fasta"
    bad.write_text(">oligo_0\nAAAATTTT\n")
    assert main(["stats", str(bad)]) == EXIT_DATA
    assert "homopolymer run 4" in capsys.readouterr().out


def test_stats_empty_fasta_errors(tmp_path, capsys):
    empty = tmp_path / "empty.fasta"
    empty.write_text("")
    assert main(["stats", str(empty)]) == EXIT_DATA


def test_usage_and_io_errors(tmp_path, capsys):
    assert main(["encode-file"]) == EXIT_USAGE
    assert main(["no-such-command"]) == EXIT_USAGE
    assert main(["encode-file", str(tmp_path / "nope.bin"), "--out", str(tmp_path / "x")]) == EXIT_IO
    assert main([
        "encode-image", str(tmp_path / "nope.pgm"), "--out", str(tmp_path / "x"),
        "--step", "0",
    ]) == EXIT_USAGE


def test_decode_with_missing_oligo_fails(tmp_path, sample_file, capsys):
    fasta = tmp_path / "blob.fasta"
    assert main(["encode-file", str(sample_file), "--out", str(fasta)]) == EXIT_OK
    lines = fasta.read_text().splitlines()
    del lines[2:4]  # drop one record
    (tmp_path / "cut.fasta").write_text("\n".join(lines) + "\n")
    rc = main(["decode-file", str(tmp_path / "cut.fasta"), "--out", str(tmp_path / "y")])
    assert rc == EXIT_DATA
    assert "missing oligo" in capsys.readouterr().err


def test_rd_sweep_csv(tmp_path, sample_pgm):
    csv = tmp_path / "rd.csv"
    rc = main([
        "rd-sweep", str(sample_pgm), "--csv", str(csv),
        "--steps", "1,4", "--planes", "all,4", "--levels", "3",
    ])
    assert rc == EXIT_OK
    lines = csv.read_text().splitlines()
    assert lines[0] == "step,planes_kept,rate_nt_per_pixel,psnr_db"
    assert len(lines) == 5
    rates = [float(line.split(",")[2]) for line in lines[1:]]
    assert rates == sorted(rates)
    assert any(line.endswith(",inf") for line in lines[1:])  # lossless corner row


def test_rd_sweep_empty_grid(tmp_path, sample_pgm):
    csv = tmp_path / "rd.csv"
    rc = main(["rd-sweep", str(sample_pgm), "--csv", str(csv), "--steps", ""])
    assert rc == EXIT_OK
    assert csv.read_text() == "step,planes_kept,rate_nt_per_pixel,psnr_db\n"

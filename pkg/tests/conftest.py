import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def natural_image(seed: int, size: int = 512) -> np.ndarray:
    """Deterministic photograph-like test image: smooth shading, oriented
    texture, hard block edges, and mild sensor noise."""
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    img = (
        110
        + 70 * np.sin(2 * np.pi * x / (size / 3) + rng.uniform(0, 6))
        + 55 * np.cos(2 * np.pi * (0.7 * y + 0.4 * x) / (size / 2.3) + rng.uniform(0, 6))
    )
    img += 35 * ((x // (size / 4) + y // (size / 5)) % 2)
    img += rng.normal(0, 3.0, (size, size))
    return np.clip(img, 0, 255).astype(np.uint8)


def assert_pool_constrained(records, oligo_len: int = 200) -> None:
    """Every record has the exact length and homopolymer runs <= 3."""
    assert records, "empty oligo pool"
    lengths = {len(r.nucleotides) for r in records}
    assert lengths == {oligo_len}, f"lengths {lengths} != {{{oligo_len}}}"
    pool = "".join(r.nucleotides for r in records).encode("ascii")
    arr = np.frombuffer(pool, dtype=np.uint8).reshape(len(records), oligo_len)
    runs4 = (
        (arr[:, :-3] == arr[:, 1:-2])
        & (arr[:, 1:-2] == arr[:, 2:-1])
        & (arr[:, 2:-1] == arr[:, 3:])
    )
    assert not runs4.any(), "homopolymer run above 3 detected"


@pytest.fixture
def rng():
    return np.random.default_rng(0xD17A)

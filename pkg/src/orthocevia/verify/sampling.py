"""Seeded sampling of triangles and points.

Every trial gets its own generator derived from ``(seed, trial_index)``, so a
trial can be replayed alone and trials can run in any order or process.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field

from ..constructions import Triangle, from_barycentric
from ..errors import DegenerateTriangle, SamplingExhausted
from ..kernel import DEFAULT_TOL, Point, Tolerance

MAX_REJECTIONS = 1000
# vertex-angle cosines must all exceed this for suites needing acute triangles
ACUTE_MIN_COSINE = 0.05


@dataclass(frozen=True)
class SuiteConfig:
    trials: int = 1000
    seed: int = 42
    tolerance: Tolerance = field(default_factory=lambda: DEFAULT_TOL)
    min_area_ratio: float = 0.05
    interior_margin: float = 0.05

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0 < self.interior_margin < 1 / 3:
            raise ValueError(f"interior_margin must be in (0, 1/3), got {self.interior_margin}")

    @property
    def eps(self) -> float:
        return self.tolerance.rel_eps

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tolerance"] = {"rel_eps": self.tolerance.rel_eps, "abs_floor": self.tolerance.abs_floor}
        return d


def trial_rng(seed: int, trial_index: int) -> random.Random:
    return random.Random(f"orthocevia:{seed}:{trial_index}")


def area_ratio(A: Point, B: Point, C: Point) -> float:
    longest = max(A.dist2(B), B.dist2(C), C.dist2(A))
    if longest == 0:
        return 0.0
    return abs((B - A).cross(C - A)) / longest


def sample_triangle(rng: random.Random, config: SuiteConfig, acute: bool = False) -> Triangle:
    """Vertices uniform in [-1, 1]^2, resampled until well shaped."""
    for _ in range(MAX_REJECTIONS):
        A, B, C = (Point(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3))
        if area_ratio(A, B, C) < config.min_area_ratio:
            continue
        try:
            t = Triangle(A, B, C)
        except DegenerateTriangle:
            continue
        if acute and min(t.vertex_cosines()) <= ACUTE_MIN_COSINE:
            continue
        return t
    raise SamplingExhausted(
        f"no triangle with area ratio >= {config.min_area_ratio} after {MAX_REJECTIONS} draws")


def sample_barycentric(rng: random.Random, margin: float) -> tuple[float, float, float]:
    if not 0 < margin <= 1 / 3:
        raise ValueError(f"margin must be in (0, 1/3], got {margin}")
    e = [rng.expovariate(1.0) for _ in range(3)]
    total = sum(e)
    free = 1.0 - 3.0 * margin
    return tuple(margin + free * w / total for w in e)


def sample_interior_point(rng: random.Random, t: Triangle, margin: float) -> Point:
    """Uniform over the sub-triangle where every barycentric coordinate is >= margin."""
    return from_barycentric(t, *sample_barycentric(rng, margin))

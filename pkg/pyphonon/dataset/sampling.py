from dataclasses import dataclass
from itertools import product

import numpy as np

from pyphonon.const import (
    DEFAULT_EPS_A,
    DEFAULT_GAMMA,
    DEFAULT_N_TH,
    SamplingMode,
)
from pyphonon.exceptions import ConfigException
from pyphonon.params import EffectiveParams
from pyphonon.presets import FIGURE_PRESETS

#: swept coordinates, in the order they are drawn and gridded
COORDINATES = ("delta", "J", "eps_a", "eps_b")


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ConfigException(f"empty interval [{self.lower}, {self.upper}]")

    @classmethod
    def fixed(cls, value: float) -> "Interval":
        return cls(value, value)

    @property
    def is_fixed(self) -> bool:
        return self.lower == self.upper

    @property
    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper

    def linspace(self, n: int) -> np.ndarray:
        return np.linspace(self.lower, self.upper, n)


@dataclass(frozen=True)
class SweepRanges:
    """Ranges of the effective parameters in units of kappa.

    Defaults cover the detector's training region; ``eps_a`` is pinned to its
    optimum unless an interval is given.
    """

    delta: Interval = Interval(-0.1, 0.1)
    J: Interval = Interval(0.1, 0.35)
    eps_b: Interval = Interval(0.001, 0.003)
    eps_a: Interval = Interval.fixed(DEFAULT_EPS_A)
    gamma: float = DEFAULT_GAMMA
    n_th: float = DEFAULT_N_TH

    def __post_init__(self):
        for name in ("eps_a", "eps_b"):
            if getattr(self, name).lower < 0:
                raise ConfigException(f"{name} drive must be >= 0")
        if self.gamma < 0 or self.n_th < 0:
            raise ConfigException("gamma and n_th must be >= 0")

    @classmethod
    def from_preset(cls, name: str) -> "SweepRanges":
        try:
            preset = FIGURE_PRESETS[name]
        except KeyError:
            raise ConfigException(
                f"Preset must be one of {', '.join(FIGURE_PRESETS)}"
            ) from None
        return cls(
            delta=Interval(*preset["delta"]),
            J=Interval(*preset["J"]),
            eps_a=Interval(*preset["eps_a"]),
            eps_b=Interval(*preset["eps_b"]),
        )

    @classmethod
    def strong_blockade(cls) -> "SweepRanges":
        return cls.from_preset("7c")

    @property
    def swept(self) -> tuple[str, ...]:
        return tuple(name for name in COORDINATES if not self.interval(name).is_fixed)

    def interval(self, name: str) -> Interval:
        return getattr(self, name)

    def point(self, delta: float, J: float, eps_a: float, eps_b: float):
        return EffectiveParams.at(
            delta, J, eps_a, eps_b, gamma=self.gamma, n_th=self.n_th
        )


def grid_shape(n: int, k: int) -> tuple[int, ...]:
    """Split ``n`` into ``k`` integer factors that are as close to equal as possible."""
    shape = []
    remaining = n
    for slots in range(k, 0, -1):
        target = round(remaining ** (1 / slots))
        divisors = [d for d in range(1, remaining + 1) if remaining % d == 0]
        factor = min(divisors, key=lambda d: (abs(d - target), d))
        shape.append(factor)
        remaining //= factor
    return tuple(shape)


def sample_points(
    ranges: SweepRanges,
    n: int,
    seed: int,
    mode: str = SamplingMode.uniform.value,
) -> list[EffectiveParams]:
    """Draw ``n`` parameter points from ``ranges``.

    ``uniform`` draws every coordinate independently from its interval with a
    generator seeded by ``seed``; ``grid`` spreads ``n`` over a near-cubic grid
    of the swept coordinates (first coordinate varies slowest) and ignores
    ``seed``.
    """
    if n < 1:
        raise ConfigException(f"n must be >= 1, got {n}")

    match SamplingMode(mode):
        case SamplingMode.uniform:
            rng = np.random.default_rng(seed)
            draws = rng.random((n, len(COORDINATES)))
            lower = np.array([ranges.interval(c).lower for c in COORDINATES])
            width = np.array([ranges.interval(c).width for c in COORDINATES])
            rows = lower + width * draws
            return [ranges.point(*map(float, row)) for row in rows]
        case SamplingMode.grid:
            swept = ranges.swept
            if not swept:
                fixed = [ranges.interval(c).lower for c in COORDINATES]
                return [ranges.point(*fixed) for _ in range(n)]
            axes = [
                ranges.interval(name).linspace(size)
                for name, size in zip(swept, grid_shape(n, len(swept)))
            ]
            points = []
            for values in product(*axes):
                coordinates = dict(zip(swept, map(float, values)))
                points.append(
                    ranges.point(
                        *(
                            coordinates.get(c, ranges.interval(c).lower)
                            for c in COORDINATES
                        )
                    )
                )
            return points

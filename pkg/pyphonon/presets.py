"""Figure presets pyphonon knows about.

Every preset pins the four effective parameters to an interval (a degenerate
interval for fixed values) in units of kappa. ``gamma`` and ``n_th`` always take
the canonical values, which every figure shares.
"""

from typing import Literal, TypedDict

Interval = tuple[float, float]


class Preset(TypedDict):
    axes: tuple[str, ...]
    delta: Interval
    J: Interval
    eps_a: Interval
    eps_b: Interval
    mode: Literal["grid", "uniform"]
    n: int


_GRID_1D = 41
_GRID_2D = 41 * 41
_RANDOM = 500

FIGURE_PRESETS: dict[str, Preset] = {
    # sweep ranges of 2a-2c and 4a-4d are local choices around the canonical point
    "2a": {
        "axes": ("eps_a",),
        "delta": (0.0, 0.0),
        "J": (0.2, 0.2),
        "eps_a": (0.0, 0.005),
        "eps_b": (0.002, 0.002),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "2b": {
        "axes": ("eps_b",),
        "delta": (0.0, 0.0),
        "J": (0.2, 0.2),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.0, 0.005),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "2c": {
        "axes": ("J",),
        "delta": (0.0, 0.0),
        "J": (0.1, 0.35),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.002, 0.002),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "2d": {
        "axes": ("delta",),
        "delta": (-0.1, 0.1),
        "J": (0.2, 0.2),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.002, 0.002),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "4a": {
        "axes": ("delta", "J"),
        "delta": (-0.2, 0.2),
        "J": (0.0, 0.4),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.002, 0.002),
        "mode": "grid",
        "n": _GRID_2D,
    },
    "4b": {
        "axes": ("J", "eps_b"),
        "delta": (0.0, 0.0),
        "J": (0.0, 0.4),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.0, 0.005),
        "mode": "grid",
        "n": _GRID_2D,
    },
    "4c": {
        "axes": ("delta", "eps_b"),
        "delta": (-0.2, 0.2),
        "J": (0.2, 0.2),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.0, 0.005),
        "mode": "grid",
        "n": _GRID_2D,
    },
    "4d": {
        "axes": ("J", "eps_a"),
        "delta": (0.0, 0.0),
        "J": (0.0, 0.4),
        "eps_a": (0.0, 0.005),
        "eps_b": (0.002, 0.002),
        "mode": "grid",
        "n": _GRID_2D,
    },
    "6a": {
        "axes": ("delta",),
        "delta": (-0.1, 0.1),
        "J": (0.2, 0.2),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.0015, 0.0015),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "6b": {
        "axes": ("J",),
        "delta": (0.02, 0.02),
        "J": (0.1, 0.3),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.0015, 0.0015),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "6c": {
        "axes": ("eps_b",),
        "delta": (0.02, 0.02),
        "J": (0.2, 0.2),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.001, 0.003),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "6d": {
        "axes": ("delta", "J", "eps_b"),
        "delta": (-0.1, 0.1),
        "J": (0.1, 0.3),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.001, 0.003),
        "mode": "uniform",
        "n": _RANDOM,
    },
    "7a": {
        "axes": ("eps_b",),
        "delta": (0.005, 0.005),
        "J": (0.3, 0.3),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.001, 0.003),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "7b": {
        "axes": ("J",),
        "delta": (0.005, 0.005),
        "J": (0.25, 0.35),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.002, 0.002),
        "mode": "grid",
        "n": _GRID_1D,
    },
    "7c": {
        "axes": ("delta", "J", "eps_b"),
        "delta": (-0.005, 0.005),
        "J": (0.29, 0.31),
        "eps_a": (0.002, 0.002),
        "eps_b": (0.0018, 0.0022),
        "mode": "uniform",
        "n": 200,
    },
}

CURVE_PRESETS = ("6a", "6b", "6c", "7a", "7b")

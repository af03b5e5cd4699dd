from dataclasses import dataclass, replace

from pyphonon.const import (
    DEFAULT_DELTA,
    DEFAULT_EPS_A,
    DEFAULT_EPS_B,
    DEFAULT_GAMMA,
    DEFAULT_J,
    DEFAULT_N_CAV,
    DEFAULT_N_MECH,
    DEFAULT_N_TH,
)
from pyphonon.exceptions import ConfigException, DimensionException


@dataclass(frozen=True)
class HilbertDims:
    """Fock truncation of the cavity and mechanical modes.

    Levels ``0..n_cav-1`` and ``0..n_mech-1`` are kept, so the joint space has
    dimension ``n_cav * n_mech``.
    """

    n_cav: int = DEFAULT_N_CAV
    n_mech: int = DEFAULT_N_MECH

    def __post_init__(self):
        if self.n_cav < 2:
            raise DimensionException(f"n_cav must be >= 2, got {self.n_cav}")
        # |02> must be representable
        if self.n_mech < 3:
            raise DimensionException(f"n_mech must be >= 3, got {self.n_mech}")

    @property
    def joint(self) -> int:
        return self.n_cav * self.n_mech

    @property
    def liouville(self) -> int:
        return self.joint**2

    def __str__(self):
        return f"{self.n_cav}x{self.n_mech}"


@dataclass(frozen=True)
class EffectiveParams:
    """Effective Hamiltonian and dissipation parameters of one simulation point.

    Frequencies and rates are in units of kappa once :meth:`normalized` has been
    applied; every sweep produces normalized points directly.
    """

    delta_a: float = DEFAULT_DELTA
    delta_b: float = DEFAULT_DELTA
    J: complex = DEFAULT_J
    eps_a: float = DEFAULT_EPS_A
    eps_b: float = DEFAULT_EPS_B
    kappa: float = 1.0
    gamma: float = DEFAULT_GAMMA
    n_th: float = DEFAULT_N_TH

    def __post_init__(self):
        if not self.kappa > 0:
            raise ConfigException(f"kappa must be > 0, got {self.kappa}")
        # gamma = 0 is the decoupled-cavity limit
        if self.gamma < 0:
            raise ConfigException(f"gamma must be >= 0, got {self.gamma}")
        if self.n_th < 0:
            raise ConfigException(f"n_th must be >= 0, got {self.n_th}")

    @classmethod
    def at(cls, delta: float, J: complex, eps_a: float, eps_b: float, **rates):
        """Build a point with equal cavity and mechanical detuning."""
        return cls(
            delta_a=delta, delta_b=delta, J=J, eps_a=eps_a, eps_b=eps_b, **rates
        )

    @property
    def delta(self) -> float:
        """Common detuning; only meaningful when ``delta_a == delta_b``."""
        if self.delta_a != self.delta_b:
            raise ConfigException(
                f"delta_a={self.delta_a} and delta_b={self.delta_b} differ"
            )
        return self.delta_a

    def normalized(self) -> "EffectiveParams":
        k = self.kappa
        return EffectiveParams(
            delta_a=self.delta_a / k,
            delta_b=self.delta_b / k,
            J=self.J / k,
            eps_a=self.eps_a / k,
            eps_b=self.eps_b / k,
            kappa=1.0,
            gamma=self.gamma / k,
            n_th=self.n_th,
        )

    def with_(self, **changes) -> "EffectiveParams":
        return replace(self, **changes)

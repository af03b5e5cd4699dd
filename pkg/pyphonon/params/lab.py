from dataclasses import dataclass, field
from typing import Optional

from pyphonon.exceptions import ConfigException


@dataclass(frozen=True)
class LabParams:
    """Laboratory-frame parameters in SI units (angular frequencies in rad/s).

    Exactly one of ``P`` (drive power in W) and ``Omega_L`` (complex drive
    amplitude in rad/s) must be supplied.
    """

    omega_c: float
    omega_m: float
    omega_L: float
    omega_a: float
    omega_b: float
    g: float
    kappa: float
    gamma: float
    eps_a: float = 0.0
    eps_b: float = 0.0
    T_m: float = 0.0
    P: Optional[float] = None
    Omega_L: Optional[complex] = None

    def __post_init__(self):
        for name in ("omega_c", "omega_m", "omega_L", "kappa"):
            if not getattr(self, name) > 0:
                raise ConfigException(f"{name} must be > 0, got {getattr(self, name)}")
        if self.gamma < 0:
            raise ConfigException(f"gamma must be >= 0, got {self.gamma}")
        if (self.P is None) == (self.Omega_L is None):
            raise ConfigException("exactly one of P and Omega_L must be supplied")
        if self.T_m < 0:
            raise ConfigException(f"T_m must be >= 0, got {self.T_m}")

    def scaled(self, factor: float) -> "LabParams":
        """Multiply every frequency and rate by ``factor``.

        ``P`` scales by ``factor**2`` so that the drive amplitude
        ``sqrt(2 P kappa / omega_L)`` scales with the rates.
        """
        omega_drive = None if self.Omega_L is None else self.Omega_L * factor
        return LabParams(
            omega_c=self.omega_c * factor,
            omega_m=self.omega_m * factor,
            omega_L=self.omega_L * factor,
            omega_a=self.omega_a * factor,
            omega_b=self.omega_b * factor,
            g=self.g * factor,
            kappa=self.kappa * factor,
            gamma=self.gamma * factor,
            eps_a=self.eps_a * factor,
            eps_b=self.eps_b * factor,
            T_m=self.T_m * factor,
            P=None if self.P is None else self.P * factor**2,
            Omega_L=omega_drive,
        )


@dataclass(frozen=True)
class ValidityReport:
    """Margins of the approximations behind the effective Hamiltonian."""

    strong_drive_margin: float
    eps_a_margin: float
    eps_b_margin: float
    delta_a_margin: float
    delta_b_margin: float
    strong_drive_ok: bool
    weak_drive_ok: bool
    detuning_ok: bool
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.strong_drive_ok and self.weak_drive_ok and self.detuning_ok

"""Map laboratory parameters onto the effective two-mode model.

The cavity is linearized around its strongly driven mean amplitude ``alpha``
(the mechanical mean amplitude is taken as zero, the weak drives being
negligible), which turns the quadratic coupling into the effective
``J a b^dag^2 + h.c.`` interaction with ``J = g * alpha``.
"""

import logging
from math import expm1, sqrt
from os import PathLike

import yaml
from scipy.constants import hbar, k as k_B

from pyphonon.exceptions import ConfigException
from pyphonon.params import EffectiveParams, LabParams, ValidityReport

logger = logging.getLogger(__name__)

STRONG_DRIVE_FACTOR = 10.0
WEAK_DRIVE_FRACTION = 0.1
DETUNING_FRACTION = 0.1


def cavity_alpha(Omega_L: complex, delta_c: float, kappa: float) -> complex:
    """Return the steady cavity amplitude ``2 Omega_L / (-2 delta_c + i kappa)``."""
    if not kappa > 0:
        raise ConfigException(f"kappa must be > 0, got {kappa}")
    return 2 * Omega_L / complex(-2 * delta_c, kappa)


def drive_amplitude(P: float, kappa: float, omega_L: float) -> float:
    """Return the strong-drive magnitude ``sqrt(2 P kappa / omega_L)``.

    Args:
        P (float): input power in W.
        kappa (float): cavity decay in rad/s.
        omega_L (float): drive angular frequency in rad/s.
    """
    if P < 0:
        raise ConfigException(f"P must be >= 0, got {P}")
    if not kappa > 0 or not omega_L > 0:
        raise ConfigException("kappa and omega_L must be > 0")
    return sqrt(2 * P * kappa / omega_L)


def effective_params(lab: LabParams) -> tuple[EffectiveParams, ValidityReport]:
    """Compute the kappa-normalized effective parameters and a validity report."""
    if lab.Omega_L is not None:
        omega_drive = complex(lab.Omega_L)
    else:
        omega_drive = complex(drive_amplitude(lab.P or 0.0, lab.kappa, lab.omega_L))

    delta_c = lab.omega_c - lab.omega_L
    delta_drive = lab.omega_a - lab.omega_L
    alpha = cavity_alpha(omega_drive, delta_c, lab.kappa)

    delta_a = delta_c - delta_drive
    delta_b = lab.omega_m + 2 * lab.g * abs(alpha) ** 2 + lab.g - lab.omega_b

    params = EffectiveParams(
        delta_a=delta_a,
        delta_b=delta_b,
        J=lab.g * alpha,
        eps_a=lab.eps_a,
        eps_b=lab.eps_b,
        kappa=lab.kappa,
        gamma=lab.gamma,
        n_th=thermal_occupancy(lab.omega_m, lab.T_m),
    ).normalized()

    report = validity_report(lab, omega_drive, delta_a, delta_b)
    for warning in report.warnings:
        logger.warning(warning)
    return params, report


def load_lab_params(path: str | PathLike) -> LabParams:
    """Read a flat YAML mapping keyed by ``LabParams`` field names."""
    try:
        with open(path, encoding="utf-8") as stream:
            values = yaml.safe_load(stream) or {}
    except (OSError, yaml.YAMLError) as error:
        raise ConfigException(f"{path}: {error}") from error
    if not isinstance(values, dict):
        raise ConfigException(f"{path}: expected a key/value mapping")
    if "Omega_L" in values and values["Omega_L"] is not None:
        values["Omega_L"] = complex(values["Omega_L"])
    try:
        return LabParams(**values)
    except TypeError as error:
        raise ConfigException(f"{path}: {error}") from error


def thermal_occupancy(omega_m: float, T_m: float) -> float:
    """Bose-Einstein occupancy of the mechanical bath; zero at ``T_m = 0``."""
    if T_m < 0:
        raise ConfigException(f"T_m must be >= 0, got {T_m}")
    if T_m == 0:
        return 0.0
    return 1.0 / expm1(hbar * omega_m / (k_B * T_m))


def validity_report(
    lab: LabParams, omega_drive: complex, delta_a: float, delta_b: float
) -> ValidityReport:
    strong_margin = abs(omega_drive) / max(lab.kappa, lab.gamma)
    eps_a_margin = lab.eps_a / lab.kappa
    eps_b_margin = lab.eps_b / lab.kappa
    delta_a_margin = abs(delta_a) / lab.omega_m
    delta_b_margin = abs(delta_b) / lab.omega_m

    warnings = []
    strong_ok = strong_margin >= STRONG_DRIVE_FACTOR
    if not strong_ok:
        warnings.append(
            f"strong drive |Omega_L|/max(kappa, gamma) = {strong_margin:.3g} "
            f"is below {STRONG_DRIVE_FACTOR:g}"
        )
    weak_ok = max(eps_a_margin, eps_b_margin) <= WEAK_DRIVE_FRACTION
    if not weak_ok:
        warnings.append(
            f"weak drives eps_a/kappa = {eps_a_margin:.3g}, "
            f"eps_b/kappa = {eps_b_margin:.3g} exceed {WEAK_DRIVE_FRACTION:g}"
        )
    detuning_ok = max(delta_a_margin, delta_b_margin) <= DETUNING_FRACTION
    if not detuning_ok:
        warnings.append(
            f"detunings |Delta_a|/omega_m = {delta_a_margin:.3g}, "
            f"|Delta_b|/omega_m = {delta_b_margin:.3g} exceed {DETUNING_FRACTION:g}"
        )

    return ValidityReport(
        strong_drive_margin=strong_margin,
        eps_a_margin=eps_a_margin,
        eps_b_margin=eps_b_margin,
        delta_a_margin=delta_a_margin,
        delta_b_margin=delta_b_margin,
        strong_drive_ok=strong_ok,
        weak_drive_ok=weak_ok,
        detuning_ok=detuning_ok,
        warnings=warnings,
    )

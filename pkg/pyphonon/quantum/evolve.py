import logging
from math import ceil

import numpy as np

from pyphonon.const import TRACE_DRIFT_TOL
from pyphonon.exceptions import ConfigException, IntegrationException
from pyphonon.params import EffectiveParams
from pyphonon.quantum.liouvillian import Liouvillian
from pyphonon.quantum.state import DensityMatrix

logger = logging.getLogger(__name__)


def default_dt(params: EffectiveParams) -> float:
    """Step size scaled to the fastest coherent frequency in the model."""
    fastest = max(
        1.0, abs(params.delta_a), abs(params.delta_b), abs(params.J), params.kappa
    )
    return 0.01 / fastest


def evolve(
    rho0: DensityMatrix, L: Liouvillian, t_final: float, dt: float
) -> DensityMatrix:
    """Integrate the master equation with fixed-step classical Runge-Kutta.

    The step is shortened slightly so that an integer number of steps lands
    exactly on ``t_final``.

    Raises:
        IntegrationException: if the trace drifts by more than ``1e-6``.
    """
    if not dt > 0:
        raise ConfigException(f"dt must be > 0, got {dt}")
    if t_final < 0:
        raise ConfigException(f"t_final must be >= 0, got {t_final}")
    if t_final == 0:
        return rho0

    D = rho0.dims.joint
    diagonal = np.arange(D) * (D + 1)
    steps = ceil(t_final / dt)
    h = t_final / steps
    generator = L.matrix

    vector = rho0.vector().astype(np.complex128)
    trace0 = vector[diagonal].sum()
    for step in range(steps):
        k1 = generator @ vector
        k2 = generator @ (vector + 0.5 * h * k1)
        k3 = generator @ (vector + 0.5 * h * k2)
        k4 = generator @ (vector + h * k3)
        vector = vector + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)

        drift = abs(vector[diagonal].sum() - trace0)
        if not drift <= TRACE_DRIFT_TOL:
            raise IntegrationException(
                f"trace drifted by {drift:.3e} at t={(step + 1) * h:.6g}; "
                f"reduce dt below {dt:g}"
            )

    logger.debug("evolved %d steps of %.3g to t=%.6g", steps, h, t_final)
    return DensityMatrix.from_vector(vector, rho0.dims)

import logging
from math import sqrt

from pyphonon.const import TRACE_TOL, VACUUM_TOL
from pyphonon.exceptions import VacuumModeException
from pyphonon.params import Observables
from pyphonon.quantum.operators import OperatorSet
from pyphonon.quantum.state import DensityMatrix

logger = logging.getLogger(__name__)


def observables(rho: DensityMatrix, ops: OperatorSet) -> Observables:
    """Optical features, phonon number and equal-time phonon correlation.

    Raises:
        VacuumModeException: if ``<b^dag b>`` is below ``1e-12``, where
            ``g2b`` is dominated by numerical noise.
    """
    n_c = _real(rho.expect(ops.a_dag @ ops.a), "n_c")
    q = _real(rho.expect(ops.a + ops.a_dag), "q") / sqrt(2)
    p = _real(rho.expect(ops.a - ops.a_dag) / 1j, "p") / sqrt(2)
    n_b = _real(rho.expect(ops.b_dag @ ops.b), "n_b")
    pairs = _real(rho.expect(ops.b_dag @ ops.b_dag @ ops.b @ ops.b), "<b^dag^2 b^2>")

    if n_b < VACUUM_TOL:
        raise VacuumModeException(
            f"<b^dag b> = {n_b:.3e} is below {VACUUM_TOL:g}; g2b is undefined"
        )

    return Observables(
        n_c=_clamp(n_c),
        q=q,
        p=p,
        n_b=n_b,
        g2b=_clamp(pairs) / n_b**2,
    )


def _clamp(value: float) -> float:
    return 0.0 if -TRACE_TOL <= value < 0 else value


def _real(value: complex, name: str) -> float:
    if abs(value.imag) > TRACE_TOL:
        logger.warning("%s has imaginary residue %.3e", name, value.imag)
    return value.real

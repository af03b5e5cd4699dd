import logging
import warnings

import numpy as np
import scipy.linalg
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from pyphonon.const import SteadyStateMethod, SteadyStateMethodValues
from pyphonon.exceptions import (
    ConvergenceException,
    DegenerateSteadyStateException,
)
from pyphonon.quantum.liouvillian import Liouvillian
from pyphonon.quantum.state import DensityMatrix

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-10


def steady_state(
    L: Liouvillian,
    method: SteadyStateMethodValues = SteadyStateMethod.direct.value,
    tol: float = RESIDUAL_TOL,
    maxiter: int = 1000,
) -> DensityMatrix:
    """Solve ``L vec(rho) = 0`` with ``Tr rho = 1``.

    The first row of ``L`` (the equation for ``rho_00``, which is linearly
    dependent on the other population equations) is replaced by the trace
    constraint, leaving a nonsingular system whenever the steady state is
    unique.

    Args:
        L (Liouvillian): generator from ``build_liouvillian``.
        method (str): ``direct`` (sparse LU), ``dense`` (dense LU) or
            ``iterative`` (ILU-preconditioned GMRES).
        tol (float): residual bound relative to ``max |L_ij|``.
        maxiter (int): restart cycles for the iterative method.

    Raises:
        DegenerateSteadyStateException: the null space of ``L`` is not
            one-dimensional.
        ConvergenceException: the iterative method did not converge.
    """
    D = L.dims.joint
    trace_row = sp.csr_matrix(
        (np.ones(D), (np.zeros(D, dtype=int), np.arange(D) * (D + 1))),
        shape=(1, D * D),
        dtype=np.complex128,
    )
    system = sp.vstack([trace_row, L.matrix[1:]], format="csc")
    rhs = np.zeros(D * D, dtype=np.complex128)
    rhs[0] = 1.0

    match SteadyStateMethod(method):
        case SteadyStateMethod.direct:
            solution = _solve_direct(system, rhs)
        case SteadyStateMethod.dense:
            solution = _solve_dense(system, rhs)
        case SteadyStateMethod.iterative:
            solution = _solve_iterative(system, rhs, maxiter)

    if not np.all(np.isfinite(solution)):
        raise DegenerateSteadyStateException(
            "steady-state solve produced non-finite values"
        )

    rho = solution.reshape(D, D)
    rho = (rho + rho.conj().T) / 2
    rho = rho / np.trace(rho).real

    residual = float(np.max(np.abs(L @ np.ravel(rho))))
    bound = tol * L.norm_max
    if residual > bound:
        raise DegenerateSteadyStateException(
            f"residual {residual:.3e} exceeds {bound:.3e}; "
            "steady state is not unique at these parameters"
        )
    logger.debug("steady state via %s, residual %.3e", method, residual)
    return DensityMatrix(rho, L.dims).validate()


def _solve_dense(system: sp.csc_matrix, rhs: np.ndarray) -> np.ndarray:
    with warnings.catch_warnings():
        warnings.simplefilter("error", scipy.linalg.LinAlgWarning)
        try:
            return scipy.linalg.solve(system.toarray(), rhs)
        except (np.linalg.LinAlgError, scipy.linalg.LinAlgWarning) as error:
            raise DegenerateSteadyStateException(str(error)) from error


def _solve_direct(system: sp.csc_matrix, rhs: np.ndarray) -> np.ndarray:
    with warnings.catch_warnings():
        warnings.simplefilter("error", spla.MatrixRankWarning)
        try:
            return np.asarray(spla.spsolve(system, rhs))
        except (RuntimeError, spla.MatrixRankWarning) as error:
            raise DegenerateSteadyStateException(str(error)) from error


def _solve_iterative(
    system: sp.csc_matrix, rhs: np.ndarray, maxiter: int
) -> np.ndarray:
    try:
        ilu = spla.spilu(system, drop_tol=1e-8, fill_factor=20)
    except RuntimeError as error:
        raise DegenerateSteadyStateException(str(error)) from error
    preconditioner = spla.LinearOperator(system.shape, ilu.solve, dtype=np.complex128)
    solution, info = spla.gmres(
        system, rhs, M=preconditioner, rtol=1e-13, atol=0.0, maxiter=maxiter
    )
    if info != 0:
        raise ConvergenceException(f"GMRES stopped with info={info}")
    return solution

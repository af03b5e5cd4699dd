from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from pyphonon.params import HilbertDims

ComplexMatrix = npt.NDArray[np.complex128]


@dataclass(frozen=True, eq=False)
class OperatorSet:
    """Ladder operators of both modes embedded in the joint Fock space.

    The joint basis index of ``|m n>`` (m photons, n phonons) is
    ``m * n_mech + n``.
    """

    a: ComplexMatrix
    a_dag: ComplexMatrix
    b: ComplexMatrix
    b_dag: ComplexMatrix
    id: ComplexMatrix
    dims: HilbertDims

    @property
    def n_cav_op(self) -> ComplexMatrix:
        return self.a_dag @ self.a

    @property
    def n_mech_op(self) -> ComplexMatrix:
        return self.b_dag @ self.b


def build_operators(dims: HilbertDims | tuple[int, int]) -> OperatorSet:
    """Build the truncated joint-space operators ``a``, ``b`` and their adjoints.

    Raises:
        DimensionException: if ``n_cav < 2`` or ``n_mech < 3``.
    """
    if not isinstance(dims, HilbertDims):
        dims = HilbertDims(*dims)

    eye_cav = np.eye(dims.n_cav, dtype=np.complex128)
    eye_mech = np.eye(dims.n_mech, dtype=np.complex128)

    a = np.kron(destroy(dims.n_cav), eye_mech)
    b = np.kron(eye_cav, destroy(dims.n_mech))
    a_dag = a.conj().T.copy()
    b_dag = b.conj().T.copy()
    identity = np.eye(dims.joint, dtype=np.complex128)

    for matrix in (a, a_dag, b, b_dag, identity):
        matrix.setflags(write=False)
    return OperatorSet(a=a, a_dag=a_dag, b=b, b_dag=b_dag, id=identity, dims=dims)


def destroy(n: int) -> ComplexMatrix:
    """Annihilation operator on ``n`` levels: entry ``(m, m+1)`` is ``sqrt(m+1)``."""
    return np.diag(np.sqrt(np.arange(1, n, dtype=np.float64)), k=1).astype(
        np.complex128
    )

"""Superoperators acting on row-major vectorized density matrices.

With ``vec(rho) = rho.ravel()``, ``vec(A rho B) = kron(A, B.T) vec(rho)``.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from pyphonon.const import HERMITIAN_TOL
from pyphonon.exceptions import DimensionException, NonHermitianException
from pyphonon.params import EffectiveParams, HilbertDims
from pyphonon.quantum.operators import ComplexMatrix, OperatorSet


@dataclass(frozen=True, eq=False)
class Liouvillian:
    """Sparse generator ``L`` with ``vec(d rho / dt) = L vec(rho)``."""

    matrix: sp.csr_matrix
    dims: HilbertDims

    @property
    def norm_max(self) -> float:
        return float(abs(self.matrix).max()) if self.matrix.nnz else 0.0

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def apply(self, rho: ComplexMatrix) -> ComplexMatrix:
        """Return ``d rho / dt`` as a matrix."""
        D = self.dims.joint
        return np.asarray(self.matrix @ np.ravel(rho)).reshape(D, D)

    def toarray(self) -> ComplexMatrix:
        return self.matrix.toarray()

    def __matmul__(self, vector):
        return self.matrix @ vector


def build_liouvillian(
    H: ComplexMatrix, params: EffectiveParams, ops: OperatorSet
) -> Liouvillian:
    """Lindblad generator with cavity decay and a thermal mechanical bath.

    Jump operators are ``sqrt(kappa) a``, ``sqrt(gamma (n_th + 1)) b`` and
    ``sqrt(gamma n_th) b^dag``.

    Raises:
        NonHermitianException: if ``H`` deviates from ``H^dag`` by more than
            the Hermiticity tolerance.
    """
    if H.shape != ops.a.shape:
        raise DimensionException(
            f"H has shape {H.shape}, operators have shape {ops.a.shape}"
        )
    deviation = float(np.max(np.abs(H - H.conj().T)))
    if deviation > HERMITIAN_TOL:
        raise NonHermitianException(f"max |H - H^dag| = {deviation:.3e}")

    rates = (
        (params.kappa, ops.a),
        (params.gamma * (params.n_th + 1), ops.b),
        (params.gamma * params.n_th, ops.b_dag),
    )
    c_ops = [np.sqrt(rate) * op for rate, op in rates if rate > 0]
    return lindbladian(H, c_ops, ops.dims)


def lindbladian(
    H: ComplexMatrix, c_ops: Sequence[ComplexMatrix], dims: HilbertDims
) -> Liouvillian:
    """Generic Lindblad generator from a Hamiltonian and scaled jump operators."""
    identity = sp.identity(dims.joint, dtype=np.complex128, format="csr")
    H_sparse = sp.csr_matrix(H)
    L = -1j * (sp.kron(H_sparse, identity) - sp.kron(identity, H_sparse.T))
    for c in c_ops:
        c_sparse = sp.csr_matrix(c)
        c_dag_c = (c_sparse.conj().T @ c_sparse).tocsr()
        L = L + sp.kron(c_sparse, c_sparse.conj())
        L = L - 0.5 * sp.kron(c_dag_c, identity) - 0.5 * sp.kron(identity, c_dag_c.T)
    L = sp.csr_matrix(L, dtype=np.complex128)
    L.eliminate_zeros()
    return Liouvillian(matrix=L, dims=dims)

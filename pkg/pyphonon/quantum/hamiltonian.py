import numpy as np

from pyphonon.params import EffectiveParams
from pyphonon.quantum.operators import ComplexMatrix, OperatorSet


def build_hamiltonian(params: EffectiveParams, ops: OperatorSet) -> ComplexMatrix:
    """Effective Hamiltonian in the frame rotating with both weak drives.

    ``H = Da a^dag a + Db b^dag b + (J a b^dag^2 + h.c.)
    + (eps_a a^dag + eps_b b^dag + h.c.)``
    """
    H = params.delta_a * ops.n_cav_op + params.delta_b * ops.n_mech_op

    # adding each term to its adjoint keeps H exactly Hermitian
    pair_exchange = params.J * (ops.a @ ops.b_dag @ ops.b_dag)
    drive = params.eps_a * ops.a_dag + params.eps_b * ops.b_dag
    H = H + pair_exchange + pair_exchange.conj().T + drive + drive.conj().T
    return np.asarray(H, dtype=np.complex128)

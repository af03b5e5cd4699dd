from pyphonon.const import SteadyStateMethod, SteadyStateMethodValues
from pyphonon.params import EffectiveParams, HilbertDims, Observables
from pyphonon.quantum.hamiltonian import build_hamiltonian
from pyphonon.quantum.liouvillian import build_liouvillian
from pyphonon.quantum.measure import observables
from pyphonon.quantum.operators import build_operators
from pyphonon.quantum.state import DensityMatrix
from pyphonon.quantum.steady_state import steady_state


def solve_point(
    params: EffectiveParams,
    dims: HilbertDims,
    method: SteadyStateMethodValues = SteadyStateMethod.direct.value,
) -> tuple[DensityMatrix, Observables]:
    """Run operators -> Hamiltonian -> Liouvillian -> steady state -> observables."""
    ops = build_operators(dims)
    L = build_liouvillian(build_hamiltonian(params, ops), params, ops)
    rho = steady_state(L, method=method)
    return rho, observables(rho, ops)

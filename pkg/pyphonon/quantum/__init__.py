from pyphonon.quantum.evolve import default_dt, evolve  # noqa: F401
from pyphonon.quantum.hamiltonian import build_hamiltonian  # noqa: F401
from pyphonon.quantum.liouvillian import (  # noqa: F401
    Liouvillian,
    build_liouvillian,
    lindbladian,
)
from pyphonon.quantum.measure import observables  # noqa: F401
from pyphonon.quantum.operators import OperatorSet, build_operators  # noqa: F401
from pyphonon.quantum.solve import solve_point  # noqa: F401
from pyphonon.quantum.state import DensityMatrix  # noqa: F401
from pyphonon.quantum.steady_state import steady_state  # noqa: F401
from pyphonon.quantum.truncation import converge_dims  # noqa: F401

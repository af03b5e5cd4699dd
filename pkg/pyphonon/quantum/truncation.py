import logging

from pyphonon.const import MAX_N_CAV, MAX_N_MECH
from pyphonon.exceptions import ConfigException, ConvergenceException
from pyphonon.params import EffectiveParams, HilbertDims
from pyphonon.quantum.solve import solve_point

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIMS = HilbertDims(MAX_N_CAV, MAX_N_MECH)


def converge_dims(
    params: EffectiveParams,
    start: HilbertDims,
    rel_tol: float,
    max_dims: HilbertDims = DEFAULT_MAX_DIMS,
) -> HilbertDims:
    """Grow the Fock truncation until g2b stops changing.

    Each round adds one level, alternating between the cavity and the
    mechanics. Convergence needs two consecutive quiet rounds (one per mode);
    the dims reached before those two rounds are returned.

    Raises:
        ConvergenceException: if either mode would exceed ``max_dims``.
    """
    if not rel_tol > 0:
        raise ConfigException(f"rel_tol must be > 0, got {rel_tol}")

    dims = start
    g2b = solve_point(params, dims)[1].g2b
    converged_at = dims
    quiet_rounds = 0
    grow_cavity = True

    while True:
        if grow_cavity:
            candidate = HilbertDims(dims.n_cav + 1, dims.n_mech)
        else:
            candidate = HilbertDims(dims.n_cav, dims.n_mech + 1)
        if candidate.n_cav > max_dims.n_cav or candidate.n_mech > max_dims.n_mech:
            raise ConvergenceException(
                f"g2b not converged to {rel_tol:g} before {max_dims}; last dims {dims}"
            )

        candidate_g2b = solve_point(params, candidate)[1].g2b
        change = abs(candidate_g2b - g2b) / g2b
        logger.debug("dims %s -> %s: relative g2b change %.3e", dims, candidate, change)

        if change <= rel_tol:
            quiet_rounds += 1
            if quiet_rounds == 2:
                return converged_at
        else:
            quiet_rounds = 0
            converged_at = candidate

        dims, g2b = candidate, candidate_g2b
        grow_cavity = not grow_cavity

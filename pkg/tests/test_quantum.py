from math import exp, sqrt

import numpy as np
import pytest
from oracles import eig_steady_state, few_level_g2, hamiltonian, lindblad_rhs

from pyphonon import EffectiveParams, HilbertDims
from pyphonon.exceptions import (
    ConfigException,
    ConvergenceException,
    DegenerateSteadyStateException,
    DimensionException,
    IntegrationException,
    NonHermitianException,
    VacuumModeException,
)
from pyphonon.quantum import (
    DensityMatrix,
    build_hamiltonian,
    build_liouvillian,
    build_operators,
    converge_dims,
    default_dt,
    evolve,
    lindbladian,
    observables,
    solve_point,
    steady_state,
)
from pyphonon.quantum.operators import destroy

QUIET = dict(delta_a=0.0, delta_b=0.0, J=0.0, eps_a=0.0, eps_b=0.0)


def liouvillian_for(params: EffectiveParams, dims: HilbertDims):
    ops = build_operators(dims)
    return build_liouvillian(build_hamiltonian(params, ops), params, ops)


def random_density_matrix(D: int, rng: np.random.Generator) -> np.ndarray:
    m = rng.normal(size=(D, D)) + 1j * rng.normal(size=(D, D))
    rho = m @ m.conj().T
    return rho / np.trace(rho).real


def test_dims_too_small():
    with pytest.raises(DimensionException):
        HilbertDims(1, 3)
    with pytest.raises(DimensionException):
        HilbertDims(2, 2)
    with pytest.raises(DimensionException):
        build_operators((2, 2))


def test_local_ladder_elements():
    assert np.array_equal(destroy(2), np.array([[0, 1], [0, 0]]))

    b_local = destroy(3)
    assert b_local[0, 1] == 1
    assert b_local[1, 2] == pytest.approx(sqrt(2), abs=1e-15)
    assert np.count_nonzero(b_local) == 2


def test_operators_are_tensor_embeddings():
    dims = HilbertDims(2, 3)
    ops = build_operators(dims)

    assert np.array_equal(ops.a, np.kron(destroy(2), np.eye(3)))
    assert np.array_equal(ops.b, np.kron(np.eye(2), destroy(3)))
    assert np.array_equal(ops.a_dag, ops.a.conj().T)
    assert ops.a.shape == (dims.joint, dims.joint)
    with pytest.raises(ValueError):
        ops.a[0, 0] = 1


def test_modes_commute_exactly():
    ops = build_operators(HilbertDims(4, 8))

    assert np.max(np.abs(ops.a @ ops.b - ops.b @ ops.a)) == 0
    assert np.max(np.abs(ops.a @ ops.b_dag - ops.b_dag @ ops.a)) == 0


def test_hamiltonian_number_terms():
    dims = HilbertDims(3, 4)
    params = EffectiveParams(**{**QUIET, "delta_a": 1.0, "delta_b": 1.0})
    H = build_hamiltonian(params, build_operators(dims))

    expected = [m + n for m in range(3) for n in range(4)]
    assert np.array_equal(H, np.diag(expected).astype(complex))


def test_hamiltonian_all_zero():
    H = build_hamiltonian(EffectiveParams(**QUIET), build_operators(HilbertDims()))

    assert not np.any(H)


def test_hamiltonian_matrix_elements(canonical_params: EffectiveParams):
    dims = HilbertDims(4, 8)
    H = build_hamiltonian(canonical_params, build_operators(dims))

    def index(m, n):
        return m * dims.n_mech + n

    block = [index(0, 0), index(1, 0), index(0, 1)]
    eps = 0.002
    assert np.allclose(
        H[np.ix_(block, block)],
        [[0, eps, eps], [eps, 0, 0], [eps, 0, 0]],
        atol=1e-15,
    )
    # J a b^dag^2 takes |10> to sqrt(2) |02>
    assert H[index(0, 2), index(1, 0)] == pytest.approx(sqrt(2) * 0.2, abs=1e-15)
    assert H[index(1, 0), index(0, 2)] == pytest.approx(sqrt(2) * 0.2, abs=1e-15)
    assert H[index(1, 1), index(2, 0)] == 0


def test_hamiltonian_is_hermitian_and_matches_dense_assembly():
    dims = HilbertDims(4, 6)
    params = EffectiveParams(
        delta_a=0.03, delta_b=-0.01, J=0.2 * np.exp(0.7j), eps_a=0.002, eps_b=0.003
    )
    H = build_hamiltonian(params, build_operators(dims))

    assert np.max(np.abs(H - H.conj().T)) <= 1e-12
    assert np.max(np.abs(H - hamiltonian(params, dims))) <= 1e-14


def test_liouvillian_cavity_decay_rate():
    dims = HilbertDims(2, 3)
    params = EffectiveParams(**QUIET, gamma=0.0, n_th=0.0)
    H = np.zeros((dims.joint, dims.joint), dtype=complex)
    L = build_liouvillian(H, params, build_operators(dims))

    excited = DensityMatrix.fock(1, 0, dims)
    d_rho = L.apply(excited.rho)
    one = dims.n_mech

    assert d_rho[one, one] == pytest.approx(-1.0)
    assert d_rho[0, 0] == pytest.approx(1.0)


def test_liouvillian_preserves_trace(canonical_params: EffectiveParams):
    dims = HilbertDims(3, 5)
    L = liouvillian_for(canonical_params, dims)
    rng = np.random.default_rng(11)

    for _ in range(100):
        rho = random_density_matrix(dims.joint, rng)
        assert abs(np.trace(L.apply(rho))) <= 1e-10


def test_liouvillian_matches_dense_master_equation():
    dims = HilbertDims(3, 5)
    params = EffectiveParams(
        delta_a=0.05,
        delta_b=0.02,
        J=0.2 - 0.1j,
        eps_a=0.002,
        eps_b=0.001,
        gamma=0.01,
        n_th=0.3,
    )
    L = liouvillian_for(params, dims)
    rho = random_density_matrix(dims.joint, np.random.default_rng(3))

    assert np.max(np.abs(L.apply(rho) - lindblad_rhs(rho, params, dims))) <= 1e-10


def test_liouvillian_rejects_non_hermitian_hamiltonian():
    dims = HilbertDims(2, 3)
    ops = build_operators(dims)
    H = np.zeros((dims.joint, dims.joint), dtype=complex)
    H[0, 1] = 1.0

    with pytest.raises(NonHermitianException):
        build_liouvillian(H, EffectiveParams(), ops)
    with pytest.raises(DimensionException):
        build_liouvillian(np.zeros((4, 4), dtype=complex), EffectiveParams(), ops)


def test_steady_state_decoupled_thermal():
    dims = HilbertDims(2, 6)
    params = EffectiveParams(**QUIET, n_th=1e-3)
    rho = steady_state(liouvillian_for(params, dims))

    x = 1e-3 / (1 + 1e-3)
    expected = x ** np.arange(dims.n_mech)
    expected /= expected.sum()
    mech = rho.mechanical_state()
    cav = rho.cavity_state()

    assert np.max(np.abs(np.diag(mech).real - expected)) <= 1e-9
    assert cav[0, 0].real == pytest.approx(1.0, abs=1e-12)


def test_steady_state_coherent_cavity():
    dims = HilbertDims()
    params = EffectiveParams(**{**QUIET, "eps_a": 0.002}, n_th=1e-3)
    rho, obs = solve_point(params, dims)

    ops = build_operators(dims)
    assert rho.expect(ops.a) == pytest.approx(-2j * 0.002, abs=1e-12)
    assert obs.n_c == pytest.approx(1.6e-5, rel=1e-8)
    assert obs.p == pytest.approx(-2 * sqrt(2) * 0.002, rel=1e-8)
    assert obs.q == pytest.approx(0.0, abs=1e-12)


def test_steady_state_invariants_at_blockade_point(canonical_params: EffectiveParams):
    L = liouvillian_for(canonical_params, HilbertDims())
    rho = steady_state(L)

    assert np.max(np.abs(L @ rho.vector())) <= 1e-10 * L.norm_max
    assert rho.hermiticity_error <= 1e-10
    assert abs(rho.trace - 1) <= 1e-10
    assert rho.min_eigenvalue >= -1e-8


@pytest.mark.parametrize("method, tol", [("dense", 1e-9), ("iterative", 1e-7)])
def test_steady_state_methods_agree(
    method: str, tol: float, canonical_params: EffectiveParams
):
    L = liouvillian_for(canonical_params, HilbertDims(3, 4))
    reference = steady_state(L, method="direct")

    assert np.max(np.abs(steady_state(L, method=method).rho - reference.rho)) <= tol


@pytest.mark.parametrize("method", ["direct", "dense"])
def test_steady_state_without_dissipation_is_degenerate(method: str):
    dims = HilbertDims(2, 3)
    H = np.zeros((dims.joint, dims.joint), dtype=complex)

    with pytest.raises(DegenerateSteadyStateException):
        steady_state(lindbladian(H, [], dims), method=method)


def test_steady_state_matches_eigen_decomposition(
    canonical_params: EffectiveParams, small_dims: HilbertDims
):
    L = liouvillian_for(canonical_params, small_dims)

    oracle = eig_steady_state(L, small_dims)

    assert np.max(np.abs(steady_state(L).rho - oracle.rho)) <= 1e-8


def test_evolve_zero_time_is_identity(small_dims: HilbertDims):
    rho0 = DensityMatrix.vacuum(small_dims)
    L = liouvillian_for(EffectiveParams(), small_dims)

    assert evolve(rho0, L, 0.0, 0.01) is rho0


def test_evolve_cavity_decay():
    dims = HilbertDims(2, 3)
    params = EffectiveParams(**QUIET, gamma=0.0, n_th=0.0)
    L = liouvillian_for(params, dims)

    rho = evolve(DensityMatrix.fock(1, 0, dims), L, 1.0, default_dt(params))

    assert rho.expect(build_operators(dims).n_cav_op).real == pytest.approx(
        exp(-1), abs=1e-6
    )


def test_evolve_reaches_steady_state():
    dims = HilbertDims(3, 4)
    # relaxation takes ~1/gamma, ~660/kappa at the default gamma; keep it short
    params = EffectiveParams.at(0.0, 0.2, 0.05, 0.05, gamma=0.2, n_th=0.01)
    L = liouvillian_for(params, dims)

    rho = evolve(DensityMatrix.vacuum(dims), L, 60 / params.gamma, default_dt(params))

    assert np.max(np.abs(rho.rho - steady_state(L).rho)) <= 1e-8


def test_evolve_detects_unstable_steps():
    dims = HilbertDims(2, 3)
    params = EffectiveParams.at(50.0, 0.2, 0.002, 0.002)
    L = liouvillian_for(params, dims)
    rho0 = DensityMatrix.vacuum(dims)

    with pytest.raises(IntegrationException):
        evolve(rho0, L, 200.0, 1.0)
    with pytest.raises(ConfigException):
        evolve(rho0, L, 1.0, 0.0)


def test_default_dt_scales_with_fastest_rate():
    assert default_dt(EffectiveParams()) == pytest.approx(0.01)
    assert default_dt(EffectiveParams.at(4.0, 0.2, 0.0, 0.0)) == pytest.approx(0.0025)


def test_thermal_phonons_bunch():
    _, obs = solve_point(EffectiveParams(**QUIET, n_th=1e-3), HilbertDims(2, 10))

    assert obs.g2b == pytest.approx(2.0, abs=1e-5)
    assert obs.n_b == pytest.approx(1e-3, rel=1e-8)


def test_coherent_phonons_are_poissonian():
    params = EffectiveParams(**{**QUIET, "eps_b": 0.01}, gamma=0.1, n_th=0.0)

    _, obs = solve_point(params, HilbertDims(2, 12))

    assert obs.g2b == pytest.approx(1.0, abs=1e-5)
    assert obs.n_b == pytest.approx(0.04, rel=1e-8)


def test_displaced_thermal_closed_form():
    gamma, eps_b, n_th = 0.1, 0.01, 0.05
    params = EffectiveParams(**{**QUIET, "eps_b": eps_b}, gamma=gamma, n_th=n_th)

    _, obs = solve_point(params, HilbertDims(2, 14))

    beta2 = (2 * eps_b / gamma) ** 2
    expected = (beta2**2 + 4 * beta2 * n_th + 2 * n_th**2) / (beta2 + n_th) ** 2
    assert obs.g2b == pytest.approx(expected, abs=1e-5)


def test_vacuum_mechanics_has_no_g2b():
    with pytest.raises(VacuumModeException):
        solve_point(EffectiveParams(**QUIET, n_th=0.0), HilbertDims(2, 3))


def test_blockade_point_antibunches(canonical_params: EffectiveParams):
    _, obs = solve_point(canonical_params, HilbertDims())

    assert obs.g2b < 1
    assert obs.blockaded
    assert obs.features == (obs.p, obs.q, obs.n_c)
    assert obs.n_c <= 0.1


def test_pair_driving_bunches_without_mechanical_drive():
    params = EffectiveParams.at(0.0, 0.2, 0.002, 0.0)

    _, obs = solve_point(params, HilbertDims())

    assert obs.g2b > 1


def test_g2b_even_in_J_without_optical_drive(small_dims: HilbertDims):
    params = EffectiveParams.at(0.03, 0.2, 0.0, 0.002)

    _, forward = solve_point(params, small_dims)
    _, flipped = solve_point(params.with_(J=-0.2), small_dims)

    assert flipped.g2b == pytest.approx(forward.g2b, rel=1e-9)


def test_g2b_invariant_under_conjugating_J_and_mirroring_detuning(
    small_dims: HilbertDims,
):
    J = 0.2 * np.exp(0.6j)
    params = EffectiveParams.at(0.03, J, 0.002, 0.002)

    _, forward = solve_point(params, small_dims)
    _, mirrored = solve_point(
        EffectiveParams.at(-0.03, J.conjugate(), 0.002, 0.002), small_dims
    )

    assert mirrored.g2b == pytest.approx(forward.g2b, rel=1e-9)


def test_few_level_amplitudes_track_weak_drive_solution():
    params = EffectiveParams.at(0.0, 0.2, 0.0, 1e-5, gamma=0.0015, n_th=0.0)

    _, obs = solve_point(params, HilbertDims(3, 5))

    assert abs(np.log10(few_level_g2(params)) - obs.log10_g2b) < 0.5


def test_converge_dims_thermal_state_is_truncation_free():
    params = EffectiveParams(**QUIET, n_th=1e-3)

    assert converge_dims(params, HilbertDims(2, 8), 1e-6) == HilbertDims(2, 8)


def test_converge_dims_gives_up_at_max_dims(canonical_params: EffectiveParams):
    with pytest.raises(ConvergenceException):
        converge_dims(
            canonical_params, HilbertDims(2, 3), 1e-12, max_dims=HilbertDims(3, 4)
        )
    with pytest.raises(ConfigException):
        converge_dims(canonical_params, HilbertDims(2, 3), 0.0)


@pytest.mark.slow
def test_converge_dims_blockade_point_within_default_dims(
    canonical_params: EffectiveParams,
):
    dims = converge_dims(canonical_params, HilbertDims(2, 3), 1e-6)

    assert dims.n_cav <= 6 and dims.n_mech <= 10


@pytest.mark.slow
def test_steady_state_matches_time_evolution_on_random_points():
    dims = HilbertDims(3, 5)
    rng = np.random.default_rng(2024)
    for _ in range(20):
        delta, J, eps_b = rng.uniform([-0.2, 0.0, 0.0], [0.2, 0.4, 0.005])
        # gamma above the default keeps the 60/gamma horizon short
        params = EffectiveParams.at(delta, J, 0.002, eps_b, gamma=0.05)
        L = liouvillian_for(params, dims)

        rho = evolve(
            DensityMatrix.vacuum(dims), L, 60 / params.gamma, default_dt(params)
        )

        assert np.max(np.abs(rho.rho - steady_state(L).rho)) <= 1e-8


@pytest.mark.slow
def test_solver_invariants_on_random_default_range_points():
    rng = np.random.default_rng(50)
    dims = HilbertDims()
    for _ in range(50):
        delta, J, eps_b = rng.uniform([-0.1, 0.1, 0.001], [0.1, 0.35, 0.003])
        params = EffectiveParams.at(delta, J, 0.002, eps_b)
        L = liouvillian_for(params, dims)
        rho = steady_state(L)

        assert np.max(np.abs(L @ rho.vector())) <= 1e-10 * L.norm_max
        assert rho.min_eigenvalue >= -1e-8
        assert observables(rho, build_operators(dims)).n_c <= 0.1

from math import pi, sqrt

import pytest

from pyphonon import Blockade, LabParams
from pyphonon.effective_model import (
    cavity_alpha,
    drive_amplitude,
    effective_params,
    load_lab_params,
    thermal_occupancy,
)
from pyphonon.exceptions import ConfigException

KAPPA = 2 * pi * 20e6
OMEGA_L = 2 * pi * 200e12
OMEGA_M = 2 * pi * 6e9
G = 2 * pi * 2.5e3


def resonant_lab(**changes) -> LabParams:
    """Resonant drive with |alpha| = 2000, which puts |J| at kappa / 4."""
    alpha2 = 2000.0**2
    values = dict(
        omega_c=OMEGA_L,
        omega_m=OMEGA_M,
        omega_L=OMEGA_L,
        omega_a=OMEGA_L,
        omega_b=OMEGA_M + 2 * G * alpha2 + G,
        g=G,
        kappa=KAPPA,
        gamma=0.0015 * KAPPA,
        eps_a=0.002 * KAPPA,
        eps_b=0.002 * KAPPA,
        T_m=0.025,
        Omega_L=1000.0 * KAPPA,
    )
    values.update(changes)
    return LabParams(**values)


def test_drive_amplitude():
    assert drive_amplitude(0.0, KAPPA, OMEGA_L) == 0.0
    assert drive_amplitude(1.0, 0.5, 1.0) == pytest.approx(1.0)
    assert drive_amplitude(1e-3, KAPPA, OMEGA_L) == pytest.approx(sqrt(2e-10))

    with pytest.raises(ConfigException):
        drive_amplitude(-1e-3, KAPPA, OMEGA_L)


def test_cavity_alpha():
    assert cavity_alpha(0.0, 0.3 * KAPPA, KAPPA) == 0
    assert cavity_alpha(5.0, 0.0, 1.0) == pytest.approx(-10j)
    assert cavity_alpha(50.0, 0.5, 1.0) == pytest.approx(100 / complex(-1, 1))

    with pytest.raises(ConfigException):
        cavity_alpha(1.0, 0.0, 0.0)


def test_thermal_occupancy():
    n_th = thermal_occupancy(OMEGA_M, 0.025)

    assert 5e-6 < n_th < 2e-5
    assert thermal_occupancy(OMEGA_M, 0.0) == 0.0
    assert thermal_occupancy(OMEGA_M, 0.05) > n_th
    with pytest.raises(ConfigException):
        thermal_occupancy(OMEGA_M, -1.0)


def test_resonant_drive_gives_quarter_kappa_coupling():
    params, report = effective_params(resonant_lab())

    assert abs(params.J) == pytest.approx(0.25, rel=1e-12)
    assert params.J.real == pytest.approx(0.0, abs=1e-12)
    assert params.delta_a == pytest.approx(0.0, abs=1e-12)
    assert params.delta_b == pytest.approx(0.0, abs=1e-9)
    assert params.kappa == 1.0
    assert params.gamma == pytest.approx(0.0015)
    assert params.eps_a == pytest.approx(0.002)
    assert report.ok
    assert report.warnings == []


def test_uncoupled_mechanics():
    params, _ = effective_params(resonant_lab(g=0.0, omega_b=OMEGA_M - 0.01 * KAPPA))

    assert params.J == 0
    assert params.delta_b == pytest.approx(0.01)


# power that reproduces the Omega_L = 1000 kappa drive of resonant_lab
RESONANT_POWER = (1000.0 * KAPPA) ** 2 * OMEGA_L / (2 * KAPPA)


@pytest.mark.parametrize(
    "drive", [{}, {"Omega_L": None, "P": RESONANT_POWER}], ids=["amplitude", "power"]
)
def test_normalized_parameters_are_scale_free(drive: dict):
    lab = resonant_lab(**drive)
    params, _ = effective_params(lab)
    scaled, _ = effective_params(lab.scaled(3.0))

    for name in ("delta_a", "delta_b", "eps_a", "eps_b", "gamma", "n_th"):
        assert getattr(scaled, name) == pytest.approx(
            getattr(params, name), rel=1e-12, abs=1e-9
        )
    assert scaled.J == pytest.approx(params.J, rel=1e-12)
    assert abs(params.J) == pytest.approx(0.25, rel=1e-9)


def test_validity_report_flags_broken_approximations():
    _, report = effective_params(
        resonant_lab(
            Omega_L=2.0 * KAPPA,
            omega_b=OMEGA_M + 2 * G * 16.0 + G,
            eps_b=0.5 * KAPPA,
        )
    )

    assert not report.strong_drive_ok
    assert not report.weak_drive_ok
    assert report.detuning_ok
    assert not report.ok
    assert len(report.warnings) == 2
    assert report.eps_b_margin == pytest.approx(0.5)


def test_lab_params_need_exactly_one_drive():
    with pytest.raises(ConfigException):
        resonant_lab(P=1e-3)
    with pytest.raises(ConfigException):
        resonant_lab(Omega_L=None)
    with pytest.raises(ConfigException):
        resonant_lab(kappa=0.0)


def test_load_lab_params(tmp_path):
    path = tmp_path / "lab.yaml"
    path.write_text(
        "\n".join(
            [
                f"omega_c: {OMEGA_L!r}",
                f"omega_m: {OMEGA_M!r}",
                f"omega_L: {OMEGA_L!r}",
                f"omega_a: {OMEGA_L!r}",
                f"omega_b: {OMEGA_M!r}",
                f"g: {G!r}",
                f"kappa: {KAPPA!r}",
                "gamma: 1.0e+5",
                "T_m: 0.025",
                "P: 1.0e-3",
            ]
        )
    )

    lab = load_lab_params(path)

    assert lab.P == 1e-3
    assert lab.Omega_L is None
    assert lab.kappa == KAPPA


@pytest.mark.parametrize(
    "content", ["omega_c: 1.0\nunknown: 2.0\n", "- 1\n- 2\n", "omega_c: [1, 2"]
)
def test_load_lab_params_rejects_bad_files(tmp_path, content: str):
    path = tmp_path / "lab.yaml"
    path.write_text(content)

    with pytest.raises(ConfigException):
        load_lab_params(path)


def test_load_lab_params_missing_file(tmp_path):
    with pytest.raises(ConfigException):
        load_lab_params(tmp_path / "missing.yaml")


def test_solver_from_lab(test_blockade: Blockade):
    params, report = test_blockade.solver.from_lab(resonant_lab())

    assert abs(params.J) == pytest.approx(0.25, rel=1e-12)
    assert report.ok

from dataclasses import dataclass

import numpy as np

from pyphonon.const import POSITIVITY_TOL, TRACE_TOL
from pyphonon.exceptions import DimensionException, UnphysicalStateException
from pyphonon.params import HilbertDims
from pyphonon.quantum.operators import ComplexMatrix


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Joint state of the cavity and the mechanical oscillator."""

    rho: ComplexMatrix
    dims: HilbertDims

    def __post_init__(self):
        if self.rho.shape != (self.dims.joint, self.dims.joint):
            raise DimensionException(
                f"rho has shape {self.rho.shape}, dims {self.dims} need "
                f"{self.dims.joint}x{self.dims.joint}"
            )

    @classmethod
    def from_vector(cls, vector, dims: HilbertDims) -> "DensityMatrix":
        return cls(np.asarray(vector).reshape(dims.joint, dims.joint).copy(), dims)

    @classmethod
    def fock(cls, m: int, n: int, dims: HilbertDims) -> "DensityMatrix":
        """Projector onto ``|m n>``."""
        rho = np.zeros((dims.joint, dims.joint), dtype=np.complex128)
        index = m * dims.n_mech + n
        rho[index, index] = 1.0
        return cls(rho, dims)

    @classmethod
    def vacuum(cls, dims: HilbertDims) -> "DensityMatrix":
        return cls.fock(0, 0, dims)

    @property
    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.rho - self.rho.conj().T)))

    @property
    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.rho).min())

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.rho))

    def cavity_state(self) -> ComplexMatrix:
        """Reduced state of the cavity (mechanics traced out)."""
        d = self.dims
        blocks = self.rho.reshape(d.n_cav, d.n_mech, d.n_cav, d.n_mech)
        return np.einsum("injn->ij", blocks)

    def expect(self, op: ComplexMatrix) -> complex:
        return complex(np.einsum("ij,ji->", op, self.rho))

    def mechanical_state(self) -> ComplexMatrix:
        """Reduced state of the mechanics (cavity traced out)."""
        d = self.dims
        blocks = self.rho.reshape(d.n_cav, d.n_mech, d.n_cav, d.n_mech)
        return np.einsum("mimj->ij", blocks)

    def validate(self) -> "DensityMatrix":
        """Check Hermiticity, unit trace and positivity.

        Raises:
            UnphysicalStateException: on the first violated invariant.
        """
        if self.hermiticity_error > TRACE_TOL:
            raise UnphysicalStateException(
                "rho is not Hermitian: "
                f"max |rho - rho^dag| = {self.hermiticity_error:.3e}"
            )
        if abs(self.trace - 1) > TRACE_TOL:
            raise UnphysicalStateException(f"Tr rho = {self.trace}")
        if self.min_eigenvalue < -POSITIVITY_TOL:
            raise UnphysicalStateException(
                f"rho has eigenvalue {self.min_eigenvalue:.3e}"
            )
        return self

    def vector(self) -> np.ndarray:
        return np.ravel(self.rho)

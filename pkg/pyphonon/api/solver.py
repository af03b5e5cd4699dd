from os import PathLike
from typing import Optional

from pyphonon.api.base import ApiBase
from pyphonon.effective_model import effective_params, load_lab_params
from pyphonon.params import EffectiveParams, HilbertDims, LabParams, Observables
from pyphonon.params.lab import ValidityReport
from pyphonon.quantum import DensityMatrix, converge_dims, solve_point


class Solver(ApiBase):
    def get(self, params: EffectiveParams) -> Observables:
        """Steady-state observables of one effective-parameter point."""
        return self.solve(params)[1]

    def solve(self, params: EffectiveParams) -> tuple[DensityMatrix, Observables]:
        return solve_point(params, self.dims, method=self.method)

    def from_lab(
        self, lab: LabParams | str | PathLike
    ) -> tuple[EffectiveParams, ValidityReport]:
        """Map lab-frame parameters (or a YAML file of them) to the effective model."""
        if not isinstance(lab, LabParams):
            lab = load_lab_params(lab)
        return effective_params(lab)

    def converge(
        self,
        params: EffectiveParams,
        rel_tol: float = 1e-4,
        start: Optional[HilbertDims] = None,
    ) -> HilbertDims:
        return converge_dims(params, start or self.dims, rel_tol)

from pyphonon.api.detector import Detector
from pyphonon.api.solver import Solver
from pyphonon.api.sweeps import Sweeps
from pyphonon.const import SteadyStateMethod, SteadyStateMethodValues
from pyphonon.params import HilbertDims


class Blockade:
    """Blockade class provides convenient access to the phonon-blockade pipeline.

    Instances of this class are the gateway to solving, sweeping and detecting
    through `pyphonon`. The canonical way to get an instance of this class is
    via:

    .. code-block:: python

        from pyphonon import Blockade, EffectiveParams

        blockade = Blockade() # 6x10 Fock truncation, sparse LU steady state

        observables = blockade.solver.get(EffectiveParams.at(0.0, 0.2, 0.002, 0.002))

        dataset = blockade.sweeps.generate(n=1000, seed=7, jobs=8)

        model, history, split = blockade.detector.train(dataset)
    """

    def __init__(
        self,
        dims: HilbertDims = HilbertDims(),
        method: SteadyStateMethodValues = SteadyStateMethod.direct.value,
    ):
        self._solver = Solver(dims, method)
        self._sweeps = Sweeps(dims, method)
        self._detector = Detector(dims=dims, method=method)

    @property
    def detector(self) -> Detector:
        return self._detector

    @property
    def solver(self) -> Solver:
        return self._solver

    @property
    def sweeps(self) -> Sweeps:
        return self._sweeps

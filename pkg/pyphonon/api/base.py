from pyphonon.const import SteadyStateMethod, SteadyStateMethodValues
from pyphonon.params import HilbertDims


class ApiBase:
    """Solver settings shared by every API object of one `Blockade`."""

    def __init__(
        self,
        dims: HilbertDims = HilbertDims(),
        method: SteadyStateMethodValues = SteadyStateMethod.direct.value,
    ):
        self.dims = dims
        self.method = SteadyStateMethod(method).value

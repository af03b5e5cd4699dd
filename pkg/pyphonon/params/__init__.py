from pyphonon.params.effective import EffectiveParams, HilbertDims  # noqa: F401
from pyphonon.params.lab import LabParams, ValidityReport  # noqa: F401
from pyphonon.params.observables import Observables  # noqa: F401

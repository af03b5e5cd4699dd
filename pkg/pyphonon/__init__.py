from pyphonon.blockade import Blockade as Blockade  # noqa: F401
from pyphonon.const import __version__  # noqa: F401
from pyphonon.dataset import Dataset as Dataset  # noqa: F401
from pyphonon.dataset import SweepRanges as SweepRanges  # noqa: F401
from pyphonon.params import EffectiveParams as EffectiveParams  # noqa: F401
from pyphonon.params import HilbertDims as HilbertDims  # noqa: F401
from pyphonon.params import LabParams as LabParams  # noqa: F401
from pyphonon.params import Observables as Observables  # noqa: F401

from pyphonon.dataset.dataset import Dataset, Provenance, Reject, Sample  # noqa: F401
from pyphonon.dataset.io import (  # noqa: F401
    ProvenanceFile,
    read_csv,
    write_csv,
    write_rejects,
)
from pyphonon.dataset.labeling import generate, label_point, label_points  # noqa: F401
from pyphonon.dataset.sampling import (  # noqa: F401
    Interval,
    SweepRanges,
    grid_shape,
    sample_points,
)
from pyphonon.dataset.split import Split, split  # noqa: F401

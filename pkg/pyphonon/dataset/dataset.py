import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from pyphonon.dataset.sampling import SweepRanges
from pyphonon.params import EffectiveParams, HilbertDims


@dataclass(frozen=True)
class Provenance:
    """Everything needed to regenerate a sample list."""

    seed: int
    n: int
    mode: str
    ranges: SweepRanges
    dims: HilbertDims
    method: str
    residual_tol: float
    preset: Optional[str] = None


@dataclass(frozen=True)
class Reject:
    index: int
    params: EffectiveParams
    reason: str


@dataclass(frozen=True)
class Sample:
    """One labeled point: features ``x = (p, q, n_c)``, label ``y = log10 g2b``."""

    params: EffectiveParams
    x: tuple[float, float, float]
    y: float
    dims_used: HilbertDims

    @property
    def n_c(self) -> float:
        return self.x[2]


class Dataset:
    """Dataset class encapsulates labeled `Sample`s in generation order."""

    def __init__(
        self,
        samples: Optional[list[Sample]] = None,
        provenance: Optional[Provenance] = None,
        rejects: Optional[list[Reject]] = None,
        repr_limit=1000,
    ):
        self._data = samples if samples is not None else []
        self._provenance = provenance
        self._rejects = rejects if rejects is not None else []
        self._repr_limit = repr_limit

    @property
    def provenance(self) -> Optional[Provenance]:
        return self._provenance

    @property
    def rejects(self) -> list[Reject]:
        return self._rejects

    @property
    def samples(self) -> list[Sample]:
        return self._data

    def features(self) -> np.ndarray:
        """Inputs as an ``(M, 3)`` array of ``(p, q, n_c)`` rows."""
        return np.array([sample.x for sample in self._data], dtype=np.float64).reshape(
            -1, 3
        )

    def labels(self) -> np.ndarray:
        return np.array([sample.y for sample in self._data], dtype=np.float64)

    def provenance_hash(self) -> str:
        """SHA-256 over the CSV encoding of every sample."""
        from pyphonon.dataset.io import encode_row

        digest = hashlib.sha256()
        for sample in self._data:
            digest.update(",".join(encode_row(sample)).encode("utf-8"))
            digest.update(b"\n")
        return digest.hexdigest()

    def subset(self, indices: Iterable[int]) -> "Dataset":
        return Dataset(
            samples=[self._data[i] for i in indices],
            provenance=self._provenance,
            repr_limit=self._repr_limit,
        )

    def __getitem__(self, key: int) -> Sample:
        return self._data[key]

    def __iadd__(self, sample: Sample):
        self._data.append(sample)
        return self

    def __iter__(self) -> Iterator[Sample]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __repr__(self) -> str:
        if len(self._data) < self._repr_limit:
            return "{}({})".format(
                self.__class__.__name__,
                ", ".join("{}={!r}".format(k, v) for k, v in self.__dict__.items()),
            )
        # first and last three samples around an ellipsis
        items_to_display = self._data[:3] + self._data[-3:]
        padding = max(len(repr(item)) for item in items_to_display)
        values = [repr(item).rjust(padding) for item in items_to_display]
        values.insert(3, "...")
        return f"Dataset([{', '.join(values)}])"

from dataclasses import dataclass
from math import isclose

import numpy as np

from pyphonon.const import DEFAULT_SPLIT
from pyphonon.dataset.dataset import Dataset
from pyphonon.exceptions import ConfigException


@dataclass(frozen=True)
class Split:
    train: Dataset
    test: Dataset
    val: Dataset
    fractions: tuple[float, float, float] = DEFAULT_SPLIT


def split(
    ds: Dataset,
    fractions: tuple[float, float, float] = DEFAULT_SPLIT,
    seed: int = 0,
) -> Split:
    """Shuffle ``ds`` by ``seed`` and cut it into train, test and val parts.

    Train and test sizes are ``round(fraction * N)``; val takes the rest.
    """
    if len(fractions) != 3 or any(f < 0 for f in fractions):
        raise ConfigException(f"need three non-negative fractions, got {fractions}")
    if not isclose(sum(fractions), 1.0, abs_tol=1e-9):
        raise ConfigException(f"fractions must sum to 1, got {sum(fractions)}")

    n = len(ds)
    order = np.random.default_rng(seed).permutation(n)
    n_train = round(fractions[0] * n)
    n_test = min(round(fractions[1] * n), n - n_train)

    return Split(
        train=ds.subset(order[:n_train]),
        test=ds.subset(order[n_train : n_train + n_test]),
        val=ds.subset(order[n_train + n_test :]),
        fractions=tuple(fractions),
    )

import numpy as np
import pytest

from pyphonon import Blockade, EffectiveParams, HilbertDims
from pyphonon.dataset import Dataset, Sample


@pytest.fixture(scope="module")
def small_dims() -> HilbertDims:
    return HilbertDims(4, 6)


@pytest.fixture(scope="module")
def test_blockade(small_dims: HilbertDims) -> Blockade:
    return Blockade(dims=small_dims)


@pytest.fixture(scope="module")
def canonical_params() -> EffectiveParams:
    # blockade point: delta = 0, J = 0.2, eps_a = eps_b = 0.002
    return EffectiveParams.at(0.0, 0.2, 0.002, 0.002)


@pytest.fixture(scope="module")
def make_dataset():
    """Factory for solver-free datasets with ``y = f(x)``."""

    def factory(n: int, seed: int = 0, target=None) -> Dataset:
        rng = np.random.default_rng(seed)
        features = rng.uniform(-1.0, 1.0, size=(n, 3))
        features[:, 2] = np.abs(features[:, 2])
        if target is None:
            labels = rng.normal(size=n)
        else:
            labels = np.apply_along_axis(target, 1, features)
        params = EffectiveParams()
        dims = HilbertDims()
        return Dataset(
            samples=[
                Sample(
                    params=params, x=tuple(map(float, x)), y=float(y), dims_used=dims
                )
                for x, y in zip(features, labels)
            ]
        )

    return factory

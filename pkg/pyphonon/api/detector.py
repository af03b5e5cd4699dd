import logging
from dataclasses import replace
from os import PathLike
from typing import Optional

import numpy as np

from pyphonon.api.base import ApiBase
from pyphonon.api.sweeps import Sweeps
from pyphonon.const import DEFAULT_HIDDEN, DEFAULT_SPLIT
from pyphonon.dataset import Dataset, Split, split
from pyphonon.exceptions import ConfigException, NetworkException
from pyphonon.network import (
    MLPModel,
    ModelFile,
    TrainHistory,
    TrainOptions,
    init_model,
    mse,
    predict,
    train_lm,
)
from pyphonon.presets import CURVE_PRESETS, FIGURE_PRESETS

logger = logging.getLogger(__name__)


class Detector(ApiBase):
    """Neural blockade detector: optical features in, ``log10 g2b`` out."""

    def __init__(self, model: Optional[MLPModel] = None, **settings):
        super().__init__(**settings)
        self._model = model

    @property
    def model(self) -> MLPModel:
        if self._model is None:
            raise NetworkException("no model trained or loaded")
        return self._model

    def load(self, path: str | PathLike) -> MLPModel:
        self._model = ModelFile().load(path)
        return self._model

    def save(self, path: str | PathLike) -> None:
        ModelFile().save(self.model, path)

    def train(
        self,
        ds: Dataset,
        opts: TrainOptions = TrainOptions(),
        hidden_size: int = DEFAULT_HIDDEN,
        fractions: tuple[float, float, float] = DEFAULT_SPLIT,
        split_seed: int = 0,
    ) -> tuple[MLPModel, TrainHistory, Split]:
        """Split ``ds``, then train a fresh network seeded by ``opts.seed``.

        The model's ``dataset_hash`` is the provenance hash of the whole of
        ``ds`` before splitting. Rows survive a CSV round trip exactly, so a
        dataset read back with ``read_csv`` hashes to the same value.
        """
        parts = split(ds, fractions, split_seed)
        model, history = train_lm(
            init_model(hidden_size, opts.seed),
            parts.train,
            parts.val,
            parts.test,
            opts,
        )
        self._model = replace(model, dataset_hash=ds.provenance_hash())
        return self._model, history, parts

    def predict(self, p: float, q: float, n_c: float) -> float:
        x = np.array([p, q, n_c], dtype=np.float64)
        if not self.model.scaler.contains(x):
            logger.warning(
                "features (%g, %g, %g) lie outside the training range; "
                "the prediction is an extrapolation",
                p,
                q,
                n_c,
            )
        return float(predict(self.model, x)[0])

    def classify(self, p: float, q: float, n_c: float) -> tuple[float, bool]:
        """Predicted ``log10 g2b`` and whether it signals antibunching."""
        y = self.predict(p, q, n_c)
        return y, y < 0

    def evaluate(self, ds: Dataset) -> tuple[float, np.ndarray]:
        """Raw-unit MSE on ``ds`` and the predictions behind it."""
        return mse(self.model, ds), predict(self.model, ds.features())

    def curve(
        self, name: str, jobs: int = 1, progress: bool = False
    ) -> list[tuple[float, float, float]]:
        """Swept value, real and predicted ``log10 g2b`` along a 1-D preset."""
        if name not in CURVE_PRESETS:
            raise ConfigException(f"Curve must be one of {', '.join(CURVE_PRESETS)}")
        axis = FIGURE_PRESETS[name]["axes"][0]
        ds = Sweeps(self.dims, self.method).preset(name, jobs=jobs, progress=progress)
        predicted = predict(self.model, ds.features())
        return [
            (_coordinate(sample.params, axis), sample.y, float(y_hat))
            for sample, y_hat in zip(ds, predicted)
        ]


def _coordinate(params, axis: str) -> float:
    if axis == "delta":
        return params.delta
    if axis == "J":
        return complex(params.J).real
    return getattr(params, axis)

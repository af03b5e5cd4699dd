import logging
from os import PathLike
from typing import Any

import numpy as np

from pyphonon.const import MODEL_SCHEMA_VERSION
from pyphonon.dataset.io import fmt, write_table
from pyphonon.exceptions import (
    ConfigException,
    ModelFileException,
    SchemaVersionException,
)
from pyphonon.mixins.xml import XmlMixin
from pyphonon.network.mlp import MLPModel, Scaler
from pyphonon.network.training import TrainHistory

logger = logging.getLogger(__name__)

HISTORY_HEADER = ("iter", "train_mse", "test_mse", "val_mse", "lambda")


class ModelFile(XmlMixin):
    """Model file: weights, biases, scaler and the training dataset hash.

    Arrays are stored row-major as whitespace-separated 17-digit decimals.
    """

    parse_error = ModelFileException

    def save(self, model: MLPModel, path: str | PathLike) -> None:
        scaler = model.scaler
        values: dict[str, Any] = {
            "@schema_version": MODEL_SCHEMA_VERSION,
            "@hidden_size": model.hidden_size,
            "w1": _array_node(model.w1),
            "b1": _array_node(model.b1),
            "w2": _array_node(model.w2),
            "b2": fmt(model.b2),
            "scaler": {
                "x_mean": _array_node(scaler.x_mean),
                "x_std": _array_node(scaler.x_std),
                "x_min": _array_node(scaler.x_min),
                "x_max": _array_node(scaler.x_max),
                "y_mean": fmt(scaler.y_mean),
                "y_std": fmt(scaler.y_std),
            },
        }
        if model.dataset_hash is not None:
            values["dataset_provenance_hash"] = model.dataset_hash
        self.write_xml(self.dict_to_etree("model", values), path)
        logger.info("saved model (L=%d) to %s", model.hidden_size, path)

    def load(self, path: str | PathLike) -> MLPModel:
        """Read a model file.

        Raises:
            ModelFileException: if the file is unreadable or incomplete.
            SchemaVersionException: if it was written by another schema.
        """
        parsed = self.read_xml(path)
        try:
            values = parsed["model"]
            version = values["@schema_version"]
            if version != MODEL_SCHEMA_VERSION:
                raise SchemaVersionException(
                    f"{path}: schema version {version}, "
                    f"expected {MODEL_SCHEMA_VERSION}"
                )
            L = int(values["@hidden_size"])
            scaler = values["scaler"]
            return MLPModel(
                w1=_parse_array(values["w1"], (L, 3)),
                b1=_parse_array(values["b1"], (L,)),
                w2=_parse_array(values["w2"], (1, L)),
                b2=float(values["b2"]),
                scaler=Scaler(
                    x_mean=_parse_array(scaler["x_mean"], (3,)),
                    x_std=_parse_array(scaler["x_std"], (3,)),
                    x_min=_parse_array(scaler["x_min"], (3,)),
                    x_max=_parse_array(scaler["x_max"], (3,)),
                    y_mean=float(scaler["y_mean"]),
                    y_std=float(scaler["y_std"]),
                ),
                dataset_hash=values.get("dataset_provenance_hash"),
            )
        except (
            AttributeError,
            KeyError,
            TypeError,
            ValueError,
            ConfigException,
        ) as error:
            raise ModelFileException(f"{path}: malformed model ({error})") from error


def write_history(history: TrainHistory, path: str | PathLike) -> None:
    write_table(
        path,
        HISTORY_HEADER,
        (
            (r.iter, r.train_mse, r.test_mse, r.val_mse, r.lambda_)
            for r in history.records
        ),
    )


def _array_node(array: np.ndarray) -> dict[str, str]:
    return {
        "@shape": "x".join(map(str, array.shape)),
        "text": " ".join(fmt(value) for value in np.ravel(array)),
    }


def _parse_array(node: dict[str, str], shape: tuple[int, ...]) -> np.ndarray:
    text = node.get("text", "")
    array = np.array([float(value) for value in text.split()], dtype=np.float64)
    if array.size != int(np.prod(shape)):
        raise ValueError(f"expected {np.prod(shape)} values, got {array.size}")
    return array.reshape(shape)

"""3 -> L -> 1 tanh regressor mapping optical features to ``log10 g2b``."""

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from pyphonon.const import FIDELITY_TOL
from pyphonon.dataset import Dataset
from pyphonon.exceptions import ConfigException, NetworkException

N_FEATURES = 3


@dataclass(frozen=True)
class Scaler:
    """Z-score statistics of the training inputs and target.

    ``x_min`` and ``x_max`` bound the training inputs and flag extrapolation.
    """

    x_mean: np.ndarray = field(default_factory=lambda: np.zeros(N_FEATURES))
    x_std: np.ndarray = field(default_factory=lambda: np.ones(N_FEATURES))
    y_mean: float = 0.0
    y_std: float = 1.0
    x_min: np.ndarray = field(default_factory=lambda: np.full(N_FEATURES, -np.inf))
    x_max: np.ndarray = field(default_factory=lambda: np.full(N_FEATURES, np.inf))

    def __post_init__(self):
        if not (np.all(self.x_std > 0) and self.y_std > 0):
            raise ConfigException("scaler standard deviations must be > 0")

    @classmethod
    def fit(cls, X: np.ndarray, y: np.ndarray) -> "Scaler":
        X = np.asarray(X, dtype=np.float64).reshape(-1, N_FEATURES)
        y = np.asarray(y, dtype=np.float64)
        if len(X) == 0:
            raise NetworkException("cannot fit a scaler on an empty set")
        # constant columns pass through unscaled
        x_std = np.where(np.ptp(X, axis=0) > 0, X.std(axis=0), 1.0)
        y_std = float(y.std()) if np.ptp(y) > 0 else 1.0
        return cls(
            x_mean=X.mean(axis=0),
            x_std=x_std,
            y_mean=float(y.mean()),
            y_std=y_std,
            x_min=X.min(axis=0),
            x_max=X.max(axis=0),
        )

    def transform(self, X: np.ndarray) -> np.ndarray:
        return (np.asarray(X, dtype=np.float64) - self.x_mean) / self.x_std

    def transform_y(self, y: np.ndarray) -> np.ndarray:
        return (np.asarray(y, dtype=np.float64) - self.y_mean) / self.y_std

    def inverse_y(self, y_std: np.ndarray) -> np.ndarray:
        return y_std * self.y_std + self.y_mean

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=np.float64)
        return bool(np.all(x >= self.x_min) and np.all(x <= self.x_max))


@dataclass(frozen=True)
class MLPModel:
    """Weights of ``y = w2 . tanh(w1 x + b1) + b2`` in standardized space.

    ``w1`` is ``L x 3``, ``b1`` has length ``L``, ``w2`` is ``1 x L`` and
    ``b2`` is a scalar.
    """

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: float
    scaler: Scaler = field(default_factory=Scaler)
    dataset_hash: Optional[str] = None

    def __post_init__(self):
        L = self.b1.shape[0]
        if (
            self.w1.shape != (L, N_FEATURES)
            or self.w2.shape != (1, L)
            or self.b1.shape != (L,)
        ):
            raise ConfigException(
                f"inconsistent layer shapes w1 {self.w1.shape}, b1 {self.b1.shape}, "
                f"w2 {self.w2.shape}"
            )

    @property
    def hidden_size(self) -> int:
        return self.b1.shape[0]

    @property
    def n_params(self) -> int:
        return parameter_count(self.hidden_size)

    @property
    def theta(self) -> np.ndarray:
        """Flat parameters: ``w1`` row-major, then ``b1``, ``w2``, ``b2``."""
        return np.concatenate(
            [self.w1.ravel(), self.b1, self.w2.ravel(), [self.b2]]
        )

    def with_theta(self, theta: np.ndarray) -> "MLPModel":
        L = self.hidden_size
        theta = np.asarray(theta, dtype=np.float64)
        if theta.shape != (self.n_params,):
            raise ConfigException(f"expected {self.n_params} parameters")
        return replace(
            self,
            w1=theta[: N_FEATURES * L].reshape(L, N_FEATURES).copy(),
            b1=theta[N_FEATURES * L : (N_FEATURES + 1) * L].copy(),
            w2=theta[(N_FEATURES + 1) * L : (N_FEATURES + 2) * L].reshape(1, L).copy(),
            b2=float(theta[-1]),
        )

    def with_scaler(self, scaler: Scaler) -> "MLPModel":
        return replace(self, scaler=scaler)


def parameter_count(hidden_size: int) -> int:
    return N_FEATURES * hidden_size + hidden_size + hidden_size + 1


def init_model(hidden_size: int, seed: int) -> MLPModel:
    """Glorot-uniform weights, zero biases, identity scaler."""
    if hidden_size < 1:
        raise ConfigException(f"hidden_size must be >= 1, got {hidden_size}")
    rng = np.random.default_rng(seed)
    limit1 = np.sqrt(6 / (N_FEATURES + hidden_size))
    limit2 = np.sqrt(6 / (hidden_size + 1))
    return MLPModel(
        w1=rng.uniform(-limit1, limit1, size=(hidden_size, N_FEATURES)),
        b1=np.zeros(hidden_size),
        w2=rng.uniform(-limit2, limit2, size=(1, hidden_size)),
        b2=0.0,
    )


def _hidden(model: MLPModel, Xs: np.ndarray) -> np.ndarray:
    return np.tanh(Xs @ model.w1.T + model.b1)


def forward_standardized(model: MLPModel, Xs: np.ndarray) -> np.ndarray:
    """Network output for already standardized inputs, in standardized units."""
    return _hidden(model, Xs) @ model.w2[0] + model.b2


def predict(model: MLPModel, X: np.ndarray) -> np.ndarray:
    """Predicted ``log10 g2b`` for every row of ``X``."""
    X = np.asarray(X, dtype=np.float64).reshape(-1, N_FEATURES)
    return model.scaler.inverse_y(
        forward_standardized(model, model.scaler.transform(X))
    )


def forward(model: MLPModel, x) -> float:
    return float(predict(model, x)[0])


def jacobian(model: MLPModel, X: np.ndarray) -> np.ndarray:
    """Derivatives of the standardized output for each row of ``X``.

    Columns follow :attr:`MLPModel.theta`.
    """
    X = np.asarray(X, dtype=np.float64).reshape(-1, N_FEATURES)
    if len(X) == 0:
        raise NetworkException("jacobian of an empty batch")
    Xs = model.scaler.transform(X)
    h = _hidden(model, Xs)
    delta = (1 - h**2) * model.w2[0]
    d_w1 = (delta[:, :, None] * Xs[:, None, :]).reshape(len(X), -1)
    return np.hstack([d_w1, delta, h, np.ones((len(X), 1))])


def mse(model: MLPModel, ds: Dataset) -> float:
    """Mean squared error in raw ``log10 g2b`` units."""
    if len(ds) == 0:
        raise NetworkException("mse of an empty dataset")
    return float(np.mean((predict(model, ds.features()) - ds.labels()) ** 2))


def fidelity(model: MLPModel, ds: Dataset, tol: float = FIDELITY_TOL) -> float:
    """Fraction of samples predicted within ``tol`` log10 units."""
    if len(ds) == 0:
        raise NetworkException("fidelity of an empty dataset")
    errors = np.abs(predict(model, ds.features()) - ds.labels())
    return float(np.mean(errors <= tol))

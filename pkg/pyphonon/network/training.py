import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.linalg

from pyphonon.const import (
    DEFAULT_GRAD_TOL,
    DEFAULT_LAMBDA0,
    DEFAULT_LAMBDA_DOWN,
    DEFAULT_LAMBDA_MAX,
    DEFAULT_LAMBDA_UP,
    DEFAULT_MAX_ITERS,
    DEFAULT_MSE_TOL,
    DEFAULT_VAL_PATIENCE,
    StopReason,
)
from pyphonon.dataset import Dataset
from pyphonon.exceptions import ConfigException, TrainingException
from pyphonon.network.mlp import MLPModel, Scaler, jacobian, mse, predict

logger = logging.getLogger(__name__)

# lower bound on the damping after accepted steps
LAMBDA_FLOOR = 1e-15


@dataclass(frozen=True)
class TrainOptions:
    lambda0: float = DEFAULT_LAMBDA0
    lambda_up: float = DEFAULT_LAMBDA_UP
    lambda_down: float = DEFAULT_LAMBDA_DOWN
    lambda_max: float = DEFAULT_LAMBDA_MAX
    max_iters: int = DEFAULT_MAX_ITERS
    val_patience: int = DEFAULT_VAL_PATIENCE
    grad_tol: float = DEFAULT_GRAD_TOL
    mse_tol: float = DEFAULT_MSE_TOL
    seed: int = 0

    def __post_init__(self):
        if not self.lambda0 > 0:
            raise ConfigException(f"lambda0 must be > 0, got {self.lambda0}")
        if not self.lambda_up > 1:
            raise ConfigException(f"lambda_up must be > 1, got {self.lambda_up}")
        if not 0 < self.lambda_down < 1:
            raise ConfigException(
                f"lambda_down must be in (0, 1), got {self.lambda_down}"
            )
        if not self.lambda_max >= self.lambda0:
            raise ConfigException("lambda_max must be >= lambda0")
        if self.max_iters < 1:
            raise ConfigException(f"max_iters must be >= 1, got {self.max_iters}")
        if self.val_patience < 1:
            raise ConfigException(
                f"val_patience must be >= 1, got {self.val_patience}"
            )
        if self.grad_tol < 0 or self.mse_tol < 0:
            raise ConfigException("grad_tol and mse_tol must be >= 0")


@dataclass(frozen=True)
class TrainRecord:
    iter: int
    train_mse: float
    test_mse: float
    val_mse: float
    lambda_: float


@dataclass
class TrainHistory:
    """Per-iteration MSEs in raw ``log10 g2b`` units.

    Row 0 is the initial model. ``selected`` is the row whose weights were
    returned.
    """

    records: list[TrainRecord] = field(default_factory=list)
    stop_reason: Optional[StopReason] = None
    selected: int = 0

    @property
    def train_mse(self) -> list[float]:
        return [record.train_mse for record in self.records]

    @property
    def test_mse(self) -> list[float]:
        return [record.test_mse for record in self.records]

    @property
    def val_mse(self) -> list[float]:
        return [record.val_mse for record in self.records]

    @property
    def final(self) -> TrainRecord:
        return self.records[self.selected]

    def __len__(self) -> int:
        return len(self.records)


def train_lm(
    model: MLPModel,
    train: Dataset,
    val: Dataset,
    test: Dataset,
    opts: TrainOptions = TrainOptions(),
) -> tuple[MLPModel, TrainHistory]:
    """Fit ``model`` to ``train`` with Levenberg-Marquardt.

    The scaler is refit on ``train``. A step is accepted when it lowers the
    train MSE, after which the damping shrinks by ``lambda_down``; a rejected
    step grows it by ``lambda_up``. Only accepted steps count towards
    ``val_patience``; a patience stop returns the weights with the lowest
    validation MSE.

    Raises:
        TrainingException: on an empty set, or when the damped normal
            equations stay singular up to ``lambda_max``.
    """
    for name, ds in (("train", train), ("val", val), ("test", test)):
        if len(ds) == 0:
            raise TrainingException(f"{name} set is empty")

    X, y = train.features(), train.labels()
    model = model.with_scaler(Scaler.fit(X, y))
    y_std = model.scaler.transform_y(y)

    def raw_train_mse(candidate: MLPModel) -> float:
        return float(np.mean((predict(candidate, X) - y) ** 2))

    def record(iteration: int, candidate: MLPModel, train_mse: float, lam: float):
        history.records.append(
            TrainRecord(
                iter=iteration,
                train_mse=train_mse,
                test_mse=mse(candidate, test),
                val_mse=mse(candidate, val),
                lambda_=lam,
            )
        )

    history = TrainHistory()
    lam = opts.lambda0
    train_mse = raw_train_mse(model)
    record(0, model, train_mse, lam)

    best_model, best_row = model, 0
    stale = 0
    theta = model.theta
    J = jacobian(model, X)
    residual = (model.scaler.transform_y(predict(model, X))) - y_std

    for iteration in range(1, opts.max_iters + 1):
        gradient = J.T @ residual
        if np.max(np.abs(gradient)) <= opts.grad_tol:
            history.stop_reason = StopReason.GRADIENT
            break

        step, lam = _damped_step(J, gradient, lam, opts)
        candidate = model.with_theta(theta - step)
        candidate_mse = raw_train_mse(candidate)

        accepted = candidate_mse < train_mse
        if accepted:
            model, theta, train_mse = candidate, candidate.theta, candidate_mse
            J = jacobian(model, X)
            residual = model.scaler.transform_y(predict(model, X)) - y_std
            lam = max(lam * opts.lambda_down, LAMBDA_FLOOR)
        else:
            lam *= opts.lambda_up

        record(iteration, model, train_mse, lam)
        logger.debug(
            "iter %d %s: train %.3e val %.3e lambda %.1e",
            iteration,
            "accepted" if accepted else "rejected",
            train_mse,
            history.records[-1].val_mse,
            lam,
        )

        if accepted:
            if history.records[-1].val_mse < history.records[best_row].val_mse:
                best_model, best_row, stale = model, len(history) - 1, 0
            else:
                stale += 1

        if train_mse <= opts.mse_tol:
            history.stop_reason = StopReason.MSE
            break
        if stale >= opts.val_patience:
            history.stop_reason = StopReason.VAL_PATIENCE
            break
        if lam > opts.lambda_max:
            history.stop_reason = StopReason.DAMPING_LIMIT
            break
    else:
        history.stop_reason = StopReason.MAX_ITERS

    if history.stop_reason is StopReason.VAL_PATIENCE:
        model, history.selected = best_model, best_row
    else:
        history.selected = len(history) - 1

    logger.info(
        "training stopped (%s) after %d iterations; train %.3e test %.3e val %.3e",
        history.stop_reason.value,
        history.records[-1].iter,
        history.final.train_mse,
        history.final.test_mse,
        history.final.val_mse,
    )
    return model, history


def _damped_step(
    J: np.ndarray, gradient: np.ndarray, lam: float, opts: TrainOptions
) -> tuple[np.ndarray, float]:
    """Solve ``(J^T J + lam I) step = J^T r``, raising ``lam`` while singular."""
    normal = J.T @ J
    identity = np.eye(normal.shape[0])
    while True:
        try:
            step = scipy.linalg.solve(
                normal + lam * identity, gradient, assume_a="pos"
            )
        except (np.linalg.LinAlgError, ValueError):
            step = None
        if step is not None and np.all(np.isfinite(step)):
            return step, lam
        lam *= opts.lambda_up
        if lam > opts.lambda_max:
            raise TrainingException(
                f"damped normal equations singular up to lambda {opts.lambda_max:g}"
            )

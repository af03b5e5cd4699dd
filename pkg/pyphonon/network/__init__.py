from pyphonon.network.mlp import (  # noqa: F401
    MLPModel,
    Scaler,
    fidelity,
    forward,
    init_model,
    jacobian,
    mse,
    parameter_count,
    predict,
)
from pyphonon.network.storage import ModelFile, write_history  # noqa: F401
from pyphonon.network.training import (  # noqa: F401
    TrainHistory,
    TrainOptions,
    TrainRecord,
    train_lm,
)

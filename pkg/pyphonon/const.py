"""pyphonon constants."""

from enum import Enum
from typing import Literal


class ExitCode(Enum):
    OK = 0
    DOMAIN_ERROR = 2
    USAGE_ERROR = 64


class SamplingMode(Enum):
    grid = "grid"
    uniform = "uniform"


class SteadyStateMethod(Enum):
    dense = "dense"
    direct = "direct"
    iterative = "iterative"


class StopReason(Enum):
    DAMPING_LIMIT = "damping_limit"
    GRADIENT = "gradient"
    MAX_ITERS = "max_iters"
    MSE = "mse"
    VAL_PATIENCE = "val_patience"


SteadyStateMethodValues = Literal["dense", "direct", "iterative"]

# canonical point, rates in units of kappa
DEFAULT_DELTA = 0.0
DEFAULT_EPS_A = 0.002
DEFAULT_EPS_B = 0.002
DEFAULT_GAMMA = 0.001515
DEFAULT_J = 0.2
DEFAULT_N_TH = 1e-3

DEFAULT_N_CAV = 6
DEFAULT_N_MECH = 10
MAX_N_CAV = 12
MAX_N_MECH = 16

# numerical tolerances
HERMITIAN_TOL = 1e-9
POSITIVITY_TOL = 1e-8
TRACE_DRIFT_TOL = 1e-6
TRACE_TOL = 1e-10
VACUUM_TOL = 1e-12
WEAK_DRIVE_N_C = 0.1

# dataset
CSV_HEADER = (
    "delta",
    "J_re",
    "J_im",
    "eps_a",
    "eps_b",
    "gamma",
    "n_th",
    "n_cav",
    "n_mech",
    "p",
    "q",
    "n_c",
    "log10_g2",
)
DEFAULT_SAMPLES = 20_000
DEFAULT_SPLIT = (0.70, 0.15, 0.15)
MAX_REJECT_FRACTION = 0.01
JOBS_ENV_VAR = "PYPHONON_JOBS"

# network
DEFAULT_HIDDEN = 50
DEFAULT_LAMBDA0 = 1e-3
DEFAULT_LAMBDA_UP = 10.0
DEFAULT_LAMBDA_DOWN = 0.1
DEFAULT_LAMBDA_MAX = 1e10
DEFAULT_MAX_ITERS = 1000
DEFAULT_VAL_PATIENCE = 6
DEFAULT_GRAD_TOL = 1e-7
DEFAULT_MSE_TOL = 0.0
FIDELITY_TOL = 0.15
MODEL_SCHEMA_VERSION = "1"

__version__ = "0.1.0"

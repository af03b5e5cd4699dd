"""pyphonon exception classes."""


class BaseException(Exception):
    """Base Exception that all other exception classes extend."""

    ...


class ConfigException(BaseException): ...


class DimensionException(ConfigException):
    """Fock truncation too small or inconsistent between operands."""

    ...


class SolverException(BaseException): ...


class NonHermitianException(SolverException): ...


class DegenerateSteadyStateException(SolverException):
    """Steady state is not unique, e.g. all dissipation rates are zero."""

    ...


class ConvergenceException(SolverException): ...


class IntegrationException(SolverException):
    """Trace drift during time integration; retry with a smaller step."""

    ...


class UnphysicalStateException(SolverException): ...


class VacuumModeException(SolverException):
    """Mechanical occupancy too small for g2b to be defined."""

    ...


class DatasetException(BaseException): ...


class MalformedRowException(DatasetException):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class RejectRateException(DatasetException): ...


class NetworkException(BaseException): ...


class TrainingException(NetworkException): ...


class ModelFileException(NetworkException): ...


class SchemaVersionException(ModelFileException): ...

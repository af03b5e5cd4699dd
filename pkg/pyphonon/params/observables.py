from dataclasses import dataclass
from math import log10

from pyphonon.labels import OBSERVABLES, ObservableKey


@dataclass(frozen=True)
class Observables:
    """Steady-state expectation values of one simulation point."""

    n_c: float
    q: float
    p: float
    n_b: float
    g2b: float

    @property
    def features(self) -> tuple[float, float, float]:
        """Detector input ordered as (p, q, n_c)."""
        return (self.p, self.q, self.n_c)

    @property
    def log10_g2b(self) -> float:
        return log10(self.g2b)

    @property
    def blockaded(self) -> bool:
        return self.g2b < 1.0

    def as_dict(self) -> dict[ObservableKey, float]:
        return {
            ObservableKey.p: self.p,
            ObservableKey.q: self.q,
            ObservableKey.n_c: self.n_c,
            ObservableKey.n_b: self.n_b,
            ObservableKey.g2b: self.g2b,
            ObservableKey.log10_g2b: self.log10_g2b,
        }

    def __str__(self):
        return "\n".join(
            f"{OBSERVABLES[key]['label']}: {value:.10g}"
            for key, value in self.as_dict().items()
        )

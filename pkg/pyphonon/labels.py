"""Mapping key to label for steady-state observables."""

from enum import Enum
from typing import TypedDict


class ObservableKey(Enum):
    p = "p"
    q = "q"
    n_c = "n_c"
    n_b = "n_b"
    g2b = "g2b"
    log10_g2b = "log10_g2b"


class LabelAndDefinition(TypedDict):
    label: str
    definition: str


OBSERVABLES: dict[ObservableKey, LabelAndDefinition] = {
    ObservableKey.p: {"label": "p", "definition": "<(a - a^dag) / (sqrt(2) i)>"},
    ObservableKey.q: {"label": "q", "definition": "<(a + a^dag) / sqrt(2)>"},
    ObservableKey.n_c: {"label": "n_c", "definition": "<a^dag a>"},
    ObservableKey.n_b: {"label": "n_b", "definition": "<b^dag b>"},
    ObservableKey.g2b: {
        "label": "g2b",
        "definition": "<b^dag b^dag b b> / <b^dag b>^2",
    },
    ObservableKey.log10_g2b: {"label": "log10_g2b", "definition": "log10(g2b)"},
}

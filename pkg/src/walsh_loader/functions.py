"""Benchmark target functions and their discretization onto N = 2^n points.

The continuous entries are evaluated at x = k/N for k = 0..N-1; the GHZ
entry is defined directly on the discrete grid (amplitude 1/sqrt(2) at the
first and last point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import DomainError
from .walsh import SampledFunction


def _gaussian(x: np.ndarray, mu: float, sigma: float) -> np.ndarray:
    return np.exp(-0.5 * ((x - mu) / sigma) ** 2) / sigma


def _bimodal(x, mu1, mu2, sigma1, sigma2, s):
    return s * _gaussian(x, mu1, sigma1) + (1.0 - s) * _gaussian(x, mu2, sigma2)


def _lorentzian(x, gamma, mu):
    return gamma / (gamma**2 + 4.0 * (x - mu) ** 2)


def _sinc(x, frequency):
    # np.sinc(z) = sin(pi z)/(pi z) with the removable singularity filled in.
    return np.sinc(frequency * x / np.pi)


def _sqrt_abs(x, center):
    return np.sqrt(np.abs(x - center))


_EVALUATORS = {
    "gaussian": _gaussian,
    "bimodal_gaussian": _bimodal,
    "lorentzian": _lorentzian,
    "sinc": _sinc,
    "sqrt_abs": _sqrt_abs,
}

DEFAULT_PARAMETERS: dict[str, dict[str, float]] = {
    "gaussian": {"mu": 0.5, "sigma": 1.0},
    "bimodal_gaussian": {"mu1": 0.25, "mu2": 0.75, "sigma1": 0.3, "sigma2": 0.04, "s": 0.1},
    "lorentzian": {"gamma": 1.0, "mu": 0.5},
    "sinc": {"frequency": 6.0 * math.pi},
    "sqrt_abs": {"center": 0.5},
    "ghz": {},
}

FUNCTION_IDS = tuple(sorted(DEFAULT_PARAMETERS))


@dataclass(frozen=True)
class FunctionSpec:
    """A catalog entry: function id plus named parameters (defaults applied)."""

    id: str
    parameters: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.id not in DEFAULT_PARAMETERS:
            raise DomainError(f"unknown function id {self.id!r}; known: {', '.join(FUNCTION_IDS)}")
        defaults = DEFAULT_PARAMETERS[self.id]
        unknown = set(self.parameters) - set(defaults)
        if unknown:
            raise DomainError(f"unknown parameter(s) for {self.id!r}: {sorted(unknown)}")
        merged = {**defaults, **{k: float(v) for k, v in self.parameters.items()}}
        object.__setattr__(self, "parameters", merged)


def discretize(spec: FunctionSpec, n: int) -> SampledFunction:
    """Sample the catalog function on the 2^n-point grid."""
    if n < 1:
        raise DomainError(f"qubit count must be >= 1, got {n}")
    N = 1 << n
    if spec.id == "ghz":
        values = np.zeros(N)
        values[0] = values[-1] = 1.0 / math.sqrt(2.0)
    else:
        x = np.arange(N) / N
        values = _EVALUATORS[spec.id](x, **spec.parameters)
    return SampledFunction(n=n, values=values, label=spec.id)

"""Walsh spectra of real functions sampled on N = 2^n points.

Bit conventions, fixed once for the whole package:

* An index k on n qubits has bits k_0 (least significant) through k_{n-1};
  register qubit j carries bit j, so qubit n-1 is the most significant.
* The Walsh function of order h is

      w_h(k) = (-1)^(sum_j h_j * k_{n-1-j}),

  i.e. bit j of h pairs with bit n-1-j of k. This is exactly the k-th
  diagonal entry of Z^{h_0} (x) Z^{h_1} (x) ... (x) Z^{h_{n-1}} with the
  leftmost factor on the most significant qubit.
* A truncated spectrum of M = 2^m <= N terms is computed on the M-point
  subgrid {0, N/M, 2N/M, ...} spanning the whole domain. The reconstructed
  series is then piecewise constant on blocks of N/M consecutive points,
  interpolating f at the left edge of each block. (Summing over the first
  M indices instead would probe only the leading 1/(N/M) fraction of the
  domain and cannot approximate f; see tests for the block-structure laws.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def bit_reverse(k: int, n: int) -> int:
    """Reverse the n-bit representation of k."""
    r = 0
    for _ in range(n):
        r = (r << 1) | (k & 1)
        k >>= 1
    return r


def _bit_reverse_many(ks: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(ks)
    for i in range(n):
        out |= ((ks >> i) & 1) << (n - 1 - i)
    return out


def _parity(x: np.ndarray) -> np.ndarray:
    """Parity of the popcount of each element (vectorized xor-fold)."""
    x = x.copy()
    for shift in (32, 16, 8, 4, 2, 1):
        x ^= x >> shift
    return x & 1


def walsh_function(h: int, k: int, n: int) -> int:
    """w_h(k) on n qubits; returns +1 or -1."""
    if n < 1:
        raise DomainError(f"qubit count must be >= 1, got {n}")
    size = 1 << n
    if not 0 <= h < size:
        raise DomainError(f"order h={h} out of range for n={n}")
    if not 0 <= k < size:
        raise DomainError(f"point k={k} out of range for n={n}")
    return -1 if (h & bit_reverse(k, n)).bit_count() & 1 else 1


@dataclass(frozen=True)
class SampledFunction:
    """Real samples f(0..N-1) of the target function, N = 2^n."""

    n: int
    values: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"qubit count must be >= 1, got {self.n}")
        vals = np.array(self.values, dtype=np.float64)
        if vals.shape != (1 << self.n,):
            raise DomainError(
                f"expected {1 << self.n} samples for n={self.n}, got shape {vals.shape}"
            )
        if not np.isfinite(vals).all():
            raise DomainError("samples must be finite")
        if not vals.any():
            raise DomainError("all samples are zero; the target state is not normalizable")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def num_points(self) -> int:
        return 1 << self.n


@dataclass(frozen=True)
class WalshSpectrum:
    """Coefficients a_0..a_{M-1} of a (possibly truncated) Walsh series."""

    coefficients: np.ndarray
    n: int
    eps1: float | None = None

    def __post_init__(self) -> None:
        coeffs = np.array(self.coefficients, dtype=np.float64)
        m = coeffs.size
        if coeffs.ndim != 1 or m < 1 or m & (m - 1):
            raise DomainError(f"term count must be a power of two, got {m}")
        if self.n < 1 or m > (1 << self.n):
            raise DomainError(f"term count {m} exceeds 2^n for n={self.n}")
        if self.eps1 is not None and m != truncation_order(self.eps1, self.n):
            raise DomainError(
                f"term count {m} inconsistent with eps1={self.eps1} at n={self.n}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def num_terms(self) -> int:
        return self.coefficients.size

    @property
    def clamped(self) -> bool:
        """True when eps1 alone would have demanded more than 2^n terms."""
        if self.eps1 is None:
            return False
        return math.ceil(math.log2(1.0 / self.eps1)) > self.n


def truncation_order(eps1: float, n: int) -> int:
    """Term count M = 2^ceil(log2(1/eps1)) for error target eps1, clamped to 2^n."""
    if not 0.0 < eps1 < 1.0:
        raise DomainError(f"eps1 must lie in (0, 1), got {eps1}")
    if n < 1:
        raise DomainError(f"qubit count must be >= 1, got {n}")
    m = math.ceil(math.log2(1.0 / eps1))
    return 1 << min(m, n)


def _check_term_count(M: int, n: int) -> None:
    if M < 1 or M & (M - 1):
        raise DomainError(f"term count must be a power of two, got {M}")
    if M > (1 << n):
        raise DomainError(f"term count {M} exceeds the {1 << n} available Walsh modes")


def _subgrid(f: SampledFunction, M: int) -> np.ndarray:
    return np.arange(M) * (f.num_points // M)


def walsh_transform(f: SampledFunction, M: int, eps1: float | None = None) -> WalshSpectrum:
    """M-term Walsh transform by direct summation.

    a_h = (1/M) * sum_k w_h(x_k) f(x_k) over the M-point subgrid x_k = k*N/M.
    O(M^2); kept as the independent reference for the fast transform.
    """
    _check_term_count(M, f.n)
    grid = _subgrid(f, M)
    sub = f.values[grid]
    rev = _bit_reverse_many(grid, f.n)
    coeffs = np.empty(M)
    for h in range(M):
        signs = 1.0 - 2.0 * _parity(np.bitwise_and(h, rev))
        coeffs[h] = float(signs @ sub) / M
    return WalshSpectrum(coeffs, f.n, eps1)


def walsh_transform_fast(f: SampledFunction, M: int, eps1: float | None = None) -> WalshSpectrum:
    """M-term Walsh transform via the fast Walsh-Hadamard butterfly, O(M log M)."""
    _check_term_count(M, f.n)
    m = M.bit_length() - 1
    sub = f.values[_subgrid(f, M)]
    # Reversing the m-bit sample index turns the paired-bit kernel into the
    # natural (h AND k) kernel that the butterfly computes.
    permuted = sub[_bit_reverse_many(np.arange(M), m)]
    return WalshSpectrum(_fwht(permuted) / M, f.n, eps1)


def _fwht(vec: np.ndarray) -> np.ndarray:
    """Unnormalized fast Walsh-Hadamard transform, natural (h AND k) ordering."""
    out = np.array(vec, dtype=np.float64)
    h = 1
    while h < out.size:
        for lo in range(0, out.size, 2 * h):
            u = out[lo : lo + h]
            v = out[lo + h : lo + 2 * h]
            u[:], v[:] = u + v, u - v
        h *= 2
    return out


def series_eval(spectrum: WalshSpectrum, k: int) -> float:
    """Evaluate the (truncated) series f_M(k) = sum_h a_h w_h(k)."""
    if not 0 <= k < (1 << spectrum.n):
        raise DomainError(f"point k={k} out of range for n={spectrum.n}")
    hs = np.arange(spectrum.num_terms)
    signs = 1.0 - 2.0 * _parity(np.bitwise_and(hs, bit_reverse(k, spectrum.n)))
    return float(signs @ spectrum.coefficients)


def reconstruct(spectrum: WalshSpectrum) -> np.ndarray:
    """Series values at every point 0..N-1 (vectorized series_eval).

    A spectrum of M terms only resolves the top log2(M) bits of k, so the
    result is constant on blocks of N/M consecutive points.
    """
    M = spectrum.num_terms
    m = M.bit_length() - 1
    block_values = _fwht(spectrum.coefficients)[_bit_reverse_many(np.arange(M), m)]
    return np.repeat(block_values, (1 << spectrum.n) // M)

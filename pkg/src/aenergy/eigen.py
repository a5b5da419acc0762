"""Dense real-symmetric eigenvalues via cyclic Jacobi rotations.

This is the single numerical kernel behind every spectrum and energy in the
package. Cyclic-by-rows Jacobi is used instead of tridiagonalization: it is
simple, provably convergent, and accurate to high relative precision at the
matrix sizes this library sweeps (a few hundred at most). Eigenvectors are
never needed and are not accumulated.

The kernel is JIT-compiled with numba when available (cached to disk, GIL
released so sweeps can thread); a pure-Python fallback with identical
floating-point behavior is used otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

#: Target for the off-diagonal Frobenius norm, relative to 1 + ||A||_F.
OFF_DIAGONAL_TOL = 1e-12
#: Hard sweep cap; cyclic Jacobi converges quadratically and never gets close.
MAX_SWEEPS = 100


class NumericalInput(ValueError):
    """Matrix entries are unusable (non-finite, or the matrix is not symmetric)."""


class NoConvergence(ArithmeticError):
    """Off-diagonal norm still above threshold after the sweep cap."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with provenance of the source matrix."""

    values: np.ndarray
    source: Any = None

    def __len__(self) -> int:
        return len(self.values)

    @property
    def largest(self) -> float:
        return float(self.values[0])

    @property
    def smallest(self) -> float:
        return float(self.values[-1])


def _jacobi_cycles(a, threshold, max_sweeps):
    """Cyclic Jacobi sweeps in place; returns sweeps used, or -1 on failure.

    Stops once the off-diagonal Frobenius norm is <= threshold.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        if math.sqrt(2.0 * off) <= threshold:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[p, i] = a[i, p]
                        a[i, q] = s * aip + c * aiq
                        a[q, i] = a[i, q]
    return -1


_kernel = None


def _load_kernel():
    # Deferred so that importing the package stays cheap; numba is optional
    # and the fallback computes bit-identical results.
    global _kernel
    if _kernel is None:
        try:
            from numba import njit

            _kernel = njit(cache=True, nogil=True)(_jacobi_cycles)
        except ImportError:
            _kernel = _jacobi_cycles
    return _kernel


def eigenvalues(matrix, source: Any = None, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Eigenvalues of a real symmetric matrix, sorted descending.

    Raises NumericalInput for non-finite entries or an asymmetric matrix, and
    NoConvergence if the sweep cap is hit (unreachable in practice).
    """
    a = np.array(matrix, dtype=np.float64, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix of order >= 1, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericalInput("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise NumericalInput("matrix is not symmetric")
    threshold = OFF_DIAGONAL_TOL * (1.0 + float(np.linalg.norm(a)))
    sweeps = _load_kernel()(a, threshold, max_sweeps)
    if sweeps < 0:
        raise NoConvergence(f"off-diagonal norm above {threshold:g} after {max_sweeps} sweeps")
    values = np.sort(np.diagonal(a))[::-1].copy()
    return Spectrum(values=values, source=source)


def spectral_extremes(matrix, source: Any = None) -> tuple[float, float]:
    """(largest, smallest) eigenvalue of a real symmetric matrix."""
    spectrum = eigenvalues(matrix, source=source)
    return spectrum.largest, spectrum.smallest

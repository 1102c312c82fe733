"""Implicit r-clique tensor operations.

The tensor entry 1/(r-1)! times the (r-1)! orderings of a clique's other
members gives each clique weight exactly 1 in ``(A x^{r-1})_i``. So

    apply(x)_i = sum over cliques C containing i of prod_{j in C, j != i} x_j

and the tensor itself never has to be built.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cliques import CliqueSet


@dataclass
class EigenPair:
    lam: float
    vector: np.ndarray
    residual_inf: float


def _as_vector(cs: CliqueSet, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (cs.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({cs.n},)")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector entries must be finite")
    return x


def apply(cs: CliqueSet, x) -> np.ndarray:
    """``A x^{r-1}`` for the clique tensor of ``cs``.

    The product over the other members is built from prefix and suffix
    products, not by dividing the full product, so zero entries are safe.
    """
    x = _as_vector(cs, x)
    y = np.zeros(cs.n)
    if not cs.count:
        return y
    idx = cs.array
    vals = x[idx]
    r = cs.r
    prefix = np.ones_like(vals)
    suffix = np.ones_like(vals)
    for k in range(1, r):
        prefix[:, k] = prefix[:, k - 1] * vals[:, k - 1]
        suffix[:, r - 1 - k] = suffix[:, r - k] * vals[:, r - k]
    others = prefix * suffix
    for k in range(r):
        y += np.bincount(idx[:, k], weights=others[:, k], minlength=cs.n)
    return y


# The proof-side quantity WS(v, x) is exactly apply(cs, x)[v].
weighted_sum = apply


def rayleigh(cs: CliqueSet, x) -> float:
    """``x^T A x^{r-1} = r * sum over cliques of prod x_j`` for nonnegative ``x``."""
    x = _as_vector(cs, x)
    if np.any(x < 0):
        raise ValueError("rayleigh quotient is only defined here for nonnegative vectors")
    if not cs.count:
        return 0.0
    return float(cs.r * np.prod(x[cs.array], axis=1).sum())


def residual(cs: CliqueSet, lam: float, x) -> float:
    """Sup-norm of ``A x^{r-1} - lam * x^[r-1]``."""
    x = _as_vector(cs, x)
    if not cs.n:
        return 0.0
    return float(np.max(np.abs(apply(cs, x) - lam * x ** (cs.r - 1))))


def normalize(x, r: int) -> np.ndarray:
    """Scale ``x`` to unit l_r norm (the zero vector is returned unchanged)."""
    x = np.asarray(x, dtype=float)
    norm = np.sum(np.abs(x) ** r) ** (1.0 / r)
    return x / norm if norm > 0 else x.copy()

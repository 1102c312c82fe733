"""Slow, literal reference implementations used only to check the library.

Everything here is written straight from the definitions and shares nothing
with the package beyond the Graph type.
"""

import itertools
import math
from collections import deque

import numpy as np

from cliquetensor.cliques import CliqueSet

DENSE_LIMIT = 10**7


def dense_clique_tensor(g, r):
    """Full order-r tensor: 1/(r-1)! on every index tuple of an r-clique."""
    if g.n**r > DENSE_LIMIT:
        raise ValueError(f"n^r = {g.n ** r} entries exceeds the dense limit")
    t = np.zeros((g.n,) * r)
    value = 1.0 / math.factorial(r - 1)
    for subset in itertools.combinations(range(g.n), r):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
            for perm in itertools.permutations(subset):
                t[perm] = value
    return t


def dense_apply(t, x):
    """(A x^{m-1})_i = sum over i_2..i_m of a_{i i_2 .. i_m} x_{i_2} ... x_{i_m}."""
    x = np.asarray(x, dtype=float)
    out = t
    while out.ndim > 1:
        out = out @ x
    return out


def brute_cliques(g, r):
    """Check every r-subset for completeness."""
    if g.n > 16 and r <= 5:
        raise ValueError("brute-force clique search is limited to n <= 16")
    found = [
        subset
        for subset in itertools.combinations(range(g.n), r)
        if all(g.has_edge(u, v) for u, v in itertools.combinations(subset, 2))
    ]
    return CliqueSet(r, g.n, tuple(found))


def _components(g):
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for v in range(g.n):
                if g.has_edge(u, v) and not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def matrix_power_radius(g, tol=1e-10, shift=1.0, max_iter=100000):
    """Adjacency spectral radius by shifted matrix power iteration.

    Runs per connected component with a Collatz-Wielandt bracket, stopping
    when the bracket width falls below ``tol`` relative and ``tol`` absolute
    in residual.
    """
    best = 0.0
    for comp in _components(g):
        if len(comp) < 2:
            continue
        a = np.array([[1.0 if g.has_edge(u, v) else 0.0 for v in comp] for u in comp])
        m = a + shift * np.eye(len(comp))
        x = np.ones(len(comp)) / len(comp)
        lam = 0.0
        for _ in range(max_iter):
            y = m @ x
            q = y / x
            lo, hi = q.min(), q.max()
            lam = 0.5 * (lo + hi)
            if hi - lo <= tol * hi and np.max(np.abs(y - lam * x)) <= tol * np.max(x):
                break
            x = y / y.sum()
        best = max(best, lam - shift)
    return best

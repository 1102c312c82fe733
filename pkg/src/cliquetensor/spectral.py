"""r-clique spectral radius.

The clique tensor splits into diagonal blocks along clique components (two
components never share a clique), the radius is the largest block radius,
and each block is weakly irreducible, so a shifted power iteration started
from the uniform vector converges on it with a Collatz bracket as the
stopping certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cliques import CliqueSet, clique_components, enumerate_cliques
from .graph import Graph, PartiteSpec
from .tensor import EigenPair, apply, normalize, rayleigh, residual


# Iterations without residual improvement before accepting a converged bracket.
_STALL_LIMIT = 20


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-10
    max_iter: int = 100_000
    shift: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.shift < 0:
            raise ValueError("shift must be >= 0")


@dataclass
class PowerResult:
    pair: EigenPair
    iterations: int
    converged: bool
    # Rigorous bracket on the (unshifted) radius.
    lower: float
    upper: float


@dataclass
class ComponentResult:
    vertices: tuple[int, ...]
    rho: float
    pair: EigenPair
    iterations: int
    converged: bool
    lower: float
    upper: float
    degree_min: int
    degree_max: int

    @property
    def positive(self) -> bool:
        return bool(np.all(self.pair.vector > 0))


@dataclass
class SpectralResult:
    n: int
    r: int
    rho: float
    global_vector: np.ndarray
    components: list[ComponentResult] = field(default_factory=list)
    isolated: tuple[int, ...] = ()
    tolerance_used: float = 1e-10
    is_clique_connected: bool = False
    clique_count: int = 0

    @property
    def converged(self) -> bool:
        return all(c.converged for c in self.components)

    @property
    def residual(self) -> float:
        return max((c.pair.residual_inf for c in self.components), default=0.0)

    @property
    def iterations(self) -> int:
        return sum(c.iterations for c in self.components)

    @property
    def lower(self) -> float:
        return max((c.lower for c in self.components), default=0.0)

    @property
    def upper(self) -> float:
        return max((c.upper for c in self.components), default=0.0)


def power_iterate(cs: CliqueSet, opts: SolverOptions | None = None) -> PowerResult:
    """Shifted higher-order power iteration on one clique component.

    Each step forms ``y = A x^{r-1} + shift * x^[r-1]`` and moves to
    ``y^[1/(r-1)]`` rescaled to unit l_r norm. The quotients
    ``y_i / x_i^{r-1}`` bracket ``rho + shift``. Iteration stops once the
    bracket's relative width is at most ``opts.tol`` and the eigen-equation
    residual is at most ``opts.tol`` too, or the residual has stopped
    improving (rounding floor on large radii).
    """
    opts = opts or SolverOptions()
    n, r = cs.n, cs.r
    if n == 0 or cs.count == 0:
        raise ValueError("power_iterate needs a component with at least one clique")
    shift = opts.shift
    x = np.full(n, n ** (-1.0 / r))
    best_lo, best_hi = 0.0, math.inf
    lo = hi = 0.0
    converged = False
    best_res, stalled = math.inf, 0
    it = 0
    while it < opts.max_iter:
        it += 1
        xp = x ** (r - 1)
        y = apply(cs, x) + shift * xp
        ratios = y[xp > 0] / xp[xp > 0]
        lo, hi = float(ratios.min()), float(ratios.max())
        best_lo, best_hi = max(best_lo, lo), min(best_hi, hi)
        if hi > 0 and hi - lo <= opts.tol * hi:
            res = float(np.max(np.abs(y - 0.5 * (lo + hi) * xp)))
            if res < best_res:
                best_res, stalled = res, 0
            else:
                stalled += 1
            if res <= opts.tol or stalled >= _STALL_LIMIT:
                converged = True
                break
        if not np.any(y > 0):
            break
        x = normalize(y ** (1.0 / (r - 1)), r)
    lam = 0.5 * (lo + hi) - shift
    pair = EigenPair(lam, x, residual(cs, lam, x))
    return PowerResult(pair, it, converged, max(best_lo - shift, 0.0), best_hi - shift)


def spectral_radius_of(cs: CliqueSet, opts: SolverOptions | None = None) -> SpectralResult:
    """Spectral radius of the clique tensor described by ``cs``."""
    opts = opts or SolverOptions()
    parts = clique_components(cs)
    result = SpectralResult(
        n=cs.n,
        r=cs.r,
        rho=0.0,
        global_vector=np.zeros(cs.n),
        isolated=parts.isolated,
        tolerance_used=opts.tol,
        is_clique_connected=parts.is_clique_connected,
        clique_count=cs.count,
    )
    if len(parts.components) == 1 and not parts.isolated:
        blocks = [(parts.components[0], cs)]
    else:
        blocks = [(comp, cs.restrict(comp)) for comp in parts.components]
    for verts, sub in blocks:
        pr = power_iterate(sub, opts)
        degs = sub.degrees
        result.components.append(
            ComponentResult(
                vertices=verts,
                rho=pr.pair.lam,
                pair=pr.pair,
                iterations=pr.iterations,
                converged=pr.converged,
                lower=pr.lower,
                upper=pr.upper,
                degree_min=int(degs.min()),
                degree_max=int(degs.max()),
            )
        )
    if result.components:
        best = max(result.components, key=lambda c: c.rho)
        result.rho = best.rho
        result.global_vector[list(best.vertices)] = best.pair.vector
    return result


def spectral_radius(g: Graph, r: int, opts: SolverOptions | None = None) -> SpectralResult:
    """The r-clique spectral radius of ``g`` with per-component detail."""
    return spectral_radius_of(enumerate_cliques(g, r), opts)


def multipartite_rho_closed_form(spec: PartiteSpec | tuple[int, ...]) -> float:
    """``(n_1 n_2 ... n_r)^((r-1)/r)`` for the complete r-partite graph.

    This is the radius of the r-clique tensor where r is the number of parts.
    """
    if not isinstance(spec, PartiteSpec):
        spec = PartiteSpec(tuple(spec))
    return float(math.prod(spec.sizes)) ** ((spec.r - 1) / spec.r)


def turan_rho(n: int, r: int) -> float:
    return multipartite_rho_closed_form(PartiteSpec.turan(n, r))


def rayleigh_maximize_oracle(
    cs: CliqueSet,
    restarts: int = 8,
    seed: int = 0,
    steps: int = 5000,
) -> float:
    """Lower bound on the radius from projected ascent of the Rayleigh quotient.

    Maximises ``x^T A x^{r-1}`` over nonnegative unit-l_r vectors from random
    starts. Every evaluated point is feasible, so the result never exceeds
    the true radius. Vertices in no clique start (and stay) at zero.
    """
    if cs.count == 0 or cs.n == 0:
        return 0.0
    rng = np.random.default_rng(seed)
    r = cs.r
    support = cs.degrees > 0
    best = 0.0
    for _ in range(restarts):
        x = normalize(np.where(support, rng.random(cs.n) + 1e-3, 0.0), r)
        f = rayleigh(cs, x)
        step = 1.0
        for _ in range(steps):
            grad = r * apply(cs, x)
            # drop the component along the sphere normal x^[r-1]
            normal = x ** (r - 1)
            grad -= (grad @ normal) / (normal @ normal) * normal
            slope = float(grad @ grad)
            if slope <= 1e-30:
                break
            moved = False
            while step > 1e-14:
                cand = normalize(np.maximum(x + step * grad, 0.0), r)
                fc = rayleigh(cs, cand)
                # Armijo sufficient increase
                if fc >= f + 1e-4 * step * slope:
                    moved = fc - f > 1e-15 * max(1.0, f)
                    x, f = cand, fc
                    step *= 1.5
                    break
                step *= 0.5
            if not moved:
                break
        best = max(best, f)
    return best

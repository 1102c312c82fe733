"""Clique-count and Turan-type bounds on the r-clique spectral radius.

For a graph G on n vertices:

* ``c_r(G) <= (n / r) * rho_r(G)``, with equality when every vertex lies in
  the same number of r-cliques;
* if G is K_{r+1}-free then ``rho_r(G) <= rho_r(T_r(n))``;
* chaining the two gives ``c_r(G) <= floor((n / r) * rho_r(T_r(n)))``, which
  equals ``c_r(T_r(n))`` when r divides n but can exceed it otherwise
  (n=28, r=3 gives 811 against 810).
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, NamedTuple

from .cliques import CliqueSet, enumerate_cliques
from .graph import Graph, PartiteSpec, find_clique, is_clique_free, random_graph, turan_graph
from .spectral import SolverOptions, SpectralResult, spectral_radius_of, turan_rho

EQ_TOL = 1e-6
MANTEL_TOL = 1e-8
CERT_TOL = 1e-9


@dataclass
class CountBound:
    n: int
    r: int
    c_r: int
    rho_r: float
    count_bound_real: float
    count_bound_floor: int
    count_equality: bool
    clique_regular: bool
    is_clique_connected: bool
    yang_lo: int
    yang_hi: int

    @property
    def satisfied(self) -> bool:
        return self.c_r <= self.count_bound_real + 1e-9 * max(1.0, self.rho_r)


@dataclass
class MantelCheck:
    n: int
    r: int
    applicable: bool
    rho: float
    turan_rho: float
    gap: float | None
    satisfied: bool | None


@dataclass
class BoundReport:
    n: int
    r: int
    c_r: int
    rho_r: float
    count_bound_real: float
    count_bound_floor: int
    count_equality: bool
    is_kr1_free: bool
    turan_rho: float | None
    mantel_satisfied: bool | None
    mantel_gap: float | None
    erdos_bound: int
    yang_lo: int
    yang_hi: int
    clique_regular: bool
    is_clique_connected: bool
    converged: bool
    residual: float

    @property
    def violations(self) -> list[str]:
        out = []
        if self.c_r > self.count_bound_floor:
            out.append("clique count exceeds the spectral count bound")
        if self.mantel_satisfied is False:
            out.append("K_{r+1}-free graph exceeds the Turan radius")
        return out


def _solve(g: Graph, r: int, opts: SolverOptions | None, spectral: SpectralResult | None) -> SpectralResult:
    if spectral is not None:
        if spectral.n != g.n or spectral.r != r:
            raise ValueError("precomputed spectral result does not match (graph, r)")
        return spectral
    return spectral_radius_of(enumerate_cliques(g, r), opts)


def count_bound(
    g: Graph,
    r: int,
    opts: SolverOptions | None = None,
    eq_tol: float = EQ_TOL,
    spectral: SpectralResult | None = None,
    cliques: CliqueSet | None = None,
) -> CountBound:
    """Evaluate ``c_r(G) <= (n/r) rho_r(G)`` and flag equality.

    The floored bound absorbs ``eq_tol`` before flooring: a numerical radius
    a hair below an integral bound must not floor to the integer beneath.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    cs = cliques if cliques is not None else enumerate_cliques(g, r)
    if spectral is None:
        spectral = spectral_radius_of(cs, opts)
    rho = spectral.rho
    real = g.n / r * rho
    degs = cs.degrees
    return CountBound(
        n=g.n,
        r=r,
        c_r=cs.count,
        rho_r=rho,
        count_bound_real=real,
        count_bound_floor=math.floor(real + eq_tol),
        count_equality=abs(cs.count - real) <= eq_tol,
        clique_regular=bool(g.n == 0 or degs.min() == degs.max()),
        is_clique_connected=spectral.is_clique_connected,
        yang_lo=int(degs.min()) if g.n else 0,
        yang_hi=int(degs.max()) if g.n else 0,
    )


def mantel_check(
    g: Graph,
    r: int,
    opts: SolverOptions | None = None,
    tol: float = MANTEL_TOL,
    spectral: SpectralResult | None = None,
) -> MantelCheck:
    """Compare ``rho_r(G)`` with ``rho_r(T_r(n))`` when G is K_{r+1}-free.

    If G contains K_{r+1} the comparison has no hypothesis to stand on and
    nothing is asserted.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    spectral = _solve(g, r, opts, spectral)
    limit = turan_rho(g.n, r) if r <= g.n else 0.0
    if not is_clique_free(g, r + 1):
        return MantelCheck(g.n, r, False, spectral.rho, limit, None, None)
    gap = limit - spectral.rho
    return MantelCheck(g.n, r, True, spectral.rho, limit, gap, gap >= -tol)


def erdos_count(n: int, r: int) -> int:
    """``c_r(T_r(n))``: one vertex from each part, so the product of part sizes."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if r > n:
        return 0
    return math.prod(PartiteSpec.turan(n, r).sizes)


def turan_floor_bound(n: int, r: int) -> int:
    """``floor((n/r) * rho_r(T_r(n)))`` computed exactly.

    ``k`` is admissible iff ``(r k)^r <= n^r P^(r-1)`` with ``P`` the product
    of the Turan part sizes, which is checked in integers around the float
    estimate.
    """
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    P = math.prod(PartiteSpec.turan(n, r).sizes)
    rhs = n**r * P ** (r - 1)
    k = max(0, math.floor(n / r * turan_rho(n, r)))
    while (r * (k + 1)) ** r <= rhs:
        k += 1
    while k > 0 and (r * k) ** r > rhs:
        k -= 1
    return k


class Gap(NamedTuple):
    floor_bound: int
    erdos: int
    exact: bool


def implication_gap(n: int, r: int) -> Gap:
    fb = turan_floor_bound(n, r)
    e = erdos_count(n, r)
    return Gap(fb, e, fb == e)


def gap_table(n_max: int, rs=(2, 3, 4, 5)) -> list[dict]:
    rows = []
    for r in rs:
        for n in range(r, n_max + 1):
            g = implication_gap(n, r)
            rows.append(
                {"n": n, "r": r, "floor_bound": g.floor_bound, "erdos": g.erdos,
                 "exact": g.exact, "gap": g.floor_bound - g.erdos, "r_divides_n": n % r == 0}
            )
    return rows


def bound_report(
    g: Graph,
    r: int,
    opts: SolverOptions | None = None,
    eq_tol: float = EQ_TOL,
    tol: float = MANTEL_TOL,
) -> BoundReport:
    cs = enumerate_cliques(g, r)
    spectral = spectral_radius_of(cs, opts)
    cb = count_bound(g, r, eq_tol=eq_tol, spectral=spectral, cliques=cs)
    mc = mantel_check(g, r, tol=tol, spectral=spectral)
    return BoundReport(
        n=g.n,
        r=r,
        c_r=cb.c_r,
        rho_r=cb.rho_r,
        count_bound_real=cb.count_bound_real,
        count_bound_floor=cb.count_bound_floor,
        count_equality=cb.count_equality,
        is_kr1_free=mc.applicable,
        turan_rho=mc.turan_rho if r <= g.n else None,
        mantel_satisfied=mc.satisfied,
        mantel_gap=mc.gap,
        erdos_bound=erdos_count(g.n, r),
        yang_lo=cb.yang_lo,
        yang_hi=cb.yang_hi,
        clique_regular=cb.clique_regular,
        is_clique_connected=cb.is_clique_connected,
        converged=spectral.converged,
        residual=spectral.residual,
    )


# --- extremal scan ---------------------------------------------------------


def _has_clique_within(adj: list[int], mask: int, k: int) -> bool:
    """Does the vertex set ``mask`` contain a k-clique?"""
    if k <= 0:
        return True
    while mask.bit_count() >= k:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        if _has_clique_within(adj, mask & adj[v], k - 1):
            return True
    return False


def iter_clique_free_graphs(n: int, k: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices without a ``k``-clique (k >= 2).

    Walks the edge-subset lattice edge by edge and prunes any branch whose
    new edge would close a k-clique; the result is exactly the K_k-free
    members of all ``2^(n choose 2)`` edge bitmasks.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    adj = [0] * n

    def walk(i: int) -> Iterator[Graph]:
        if i == len(pairs):
            yield Graph(n, tuple(adj))
            return
        yield from walk(i + 1)
        u, v = pairs[i]
        if not _has_clique_within(adj, adj[u] & adj[v], k - 2):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            yield from walk(i + 1)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u

    yield from walk(0)


SCAN_PROBABILITIES = (0.3, 0.5, 0.7)


def random_clique_free_graph(n: int, r: int, seed: int, index: int) -> Graph:
    """Sample ``index`` of a seeded random scan, repaired to be K_{r+1}-free.

    The edge probability cycles through 0.3, 0.5, 0.7. Repair strips every
    edge from one vertex of each remaining K_{r+1}, so the vertex count stays
    n and the Turan comparison is still against T_r(n).
    """
    p = SCAN_PROBABILITIES[index % len(SCAN_PROBABILITIES)]
    sample_seed = (seed << 32) | index
    g = random_graph(n, p, sample_seed)
    rng = random.Random(sample_seed)
    while (c := find_clique(g, r + 1)) is not None:
        g = g.isolate(rng.choice(c))
    return g


@dataclass
class ScanReport:
    n: int
    r: int
    mode: str
    turan_rho: float
    turan_degree_sequence: list[int]
    tol: float = MANTEL_TOL
    eq_tol: float = EQ_TOL
    tested: int = 0
    max_rho: float = 0.0
    violations: list[list[tuple[int, int]]] = field(default_factory=list)
    equality_witnesses: list[dict] = field(default_factory=list)
    nonconverged: int = 0
    max_residual: float = 0.0
    certificate_failures: int = 0
    yang_failures: int = 0
    count_bound_failures: int = 0
    comparison: str = "degree-sequence match"

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def witnesses_match(self) -> bool:
        return all(w["degree_sequence_match"] for w in self.equality_witnesses)

    def merge(self, other: "ScanReport") -> None:
        self.tested += other.tested
        self.max_rho = max(self.max_rho, other.max_rho)
        self.violations.extend(other.violations)
        self.equality_witnesses.extend(other.equality_witnesses)
        self.nonconverged += other.nonconverged
        self.max_residual = max(self.max_residual, other.max_residual)
        self.certificate_failures += other.certificate_failures
        self.yang_failures += other.yang_failures
        self.count_bound_failures += other.count_bound_failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violations"] = [[list(e) for e in edges] for edges in self.violations]
        d["violation_count"] = len(self.violations)
        d["witness_count"] = len(self.equality_witnesses)
        d["witnesses_match"] = self.witnesses_match
        d["ok"] = self.ok
        return d

    def record(self, g: Graph, opts: SolverOptions | None) -> SpectralResult:
        """Check one K_{r+1}-free graph and fold it into the report."""
        cs = enumerate_cliques(g, self.r)
        res = spectral_radius_of(cs, opts)
        self.tested += 1
        rho = res.rho
        self.max_rho = max(self.max_rho, rho)
        if rho > self.turan_rho + self.tol:
            self.violations.append(list(g.edges()))
        if abs(rho - self.turan_rho) <= self.eq_tol:
            degs = g.degree_sequence()
            self.equality_witnesses.append(
                {"edges": [list(e) for e in g.edges()], "degree_sequence": degs,
                 "degree_sequence_match": degs == self.turan_degree_sequence}
            )
        if not res.converged:
            self.nonconverged += 1
        self.max_residual = max(self.max_residual, res.residual)
        for comp in res.components:
            if not (comp.converged and comp.pair.residual_inf <= CERT_TOL and comp.positive):
                self.certificate_failures += 1
            if not comp.degree_min - CERT_TOL <= comp.rho <= comp.degree_max + CERT_TOL:
                self.yang_failures += 1
        if cs.count > g.n / self.r * rho + 1e-9 * max(1.0, rho):
            self.count_bound_failures += 1
        return res


def _empty_report(n: int, r: int, mode: str, tol: float, eq_tol: float) -> ScanReport:
    return ScanReport(
        n=n, r=r, mode=mode, turan_rho=turan_rho(n, r),
        turan_degree_sequence=turan_graph(n, r).degree_sequence(), tol=tol, eq_tol=eq_tol,
    )


def _scan_chunk(args) -> ScanReport:
    n, r, mode, tol, eq_tol, opts, payload, seed = args
    report = _empty_report(n, r, mode, tol, eq_tol)
    if mode == "exhaustive":
        graphs = (Graph(n, adj) for adj in payload)
    else:
        graphs = (random_clique_free_graph(n, r, seed, k) for k in payload)
    for g in graphs:
        report.record(g, opts)
    return report


def scan_extremal(
    n: int,
    r: int,
    mode: str = "exhaustive",
    budget: int = 100,
    seed: int = 0,
    opts: SolverOptions | None = None,
    tol: float = MANTEL_TOL,
    eq_tol: float = EQ_TOL,
    threads: int = 1,
) -> ScanReport:
    """Test ``rho_r(G) <= rho_r(T_r(n))`` over K_{r+1}-free graphs on n vertices.

    ``exhaustive`` visits every labelled K_{r+1}-free graph (n <= 8);
    ``random`` draws ``budget`` seeded samples. Graphs within ``eq_tol`` of
    the Turan radius are kept as witnesses together with their degree
    sequences; they are compared to T_r(n) by degree sequence only.
    """
    if r < 2 or r > n:
        raise ValueError(f"need 2 <= r <= n, got n={n}, r={r}")
    if mode == "exhaustive":
        if n > 8:
            raise ValueError("exhaustive scan is limited to n <= 8")
        items: list = [g.adj for g in iter_clique_free_graphs(n, r + 1)]
    elif mode == "random":
        if budget < 0:
            raise ValueError("budget must be nonnegative")
        items = list(range(budget))
    else:
        raise ValueError(f"unknown scan mode {mode!r}")
    opts = opts or SolverOptions()
    threads = max(1, threads)
    chunks = [items[i::threads] for i in range(threads)] if threads > 1 else [items]
    tasks = [(n, r, mode, tol, eq_tol, opts, chunk, seed) for chunk in chunks]
    report = _empty_report(n, r, mode, tol, eq_tol)
    if threads == 1:
        parts = [_scan_chunk(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_scan_chunk, tasks))
    for part in parts:
        report.merge(part)
    return report

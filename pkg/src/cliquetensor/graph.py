"""Undirected simple graphs stored as one bit-set (Python int) per vertex.

Vertices are always ``0 .. n-1``.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised when edge-list text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
        for u, v in self.edges():
            if not self.adj[v] >> u & 1:
                raise ValueError(f"adjacency is not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> list[int]:
        """Degrees sorted nonincreasing."""
        return sorted((row.bit_count() for row in self.adj), reverse=True)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, [*self.edges(), *edges])

    def isolate(self, v: int) -> "Graph":
        """Copy with every edge at ``v`` removed (the vertex itself stays)."""
        mask = ~(1 << v)
        rows = [row & mask for row in self.adj]
        rows[v] = 0
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.adj, other.adj))


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class PartiteSpec:
    """Part sizes of a complete multipartite graph, kept nondecreasing."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes:
            raise ValueError("at least one part is required")
        if any(s < 1 for s in sizes):
            raise ValueError(f"part sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", tuple(sorted(sizes)))

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def is_balanced(self) -> bool:
        return self.sizes[-1] - self.sizes[0] <= 1

    @classmethod
    def turan(cls, n: int, r: int) -> "PartiteSpec":
        if not 1 <= r <= n:
            raise ValueError(f"Turan graph needs 1 <= r <= n, got n={n}, r={r}")
        return cls(tuple((n + s) // r for s in range(r)))


def complete_multipartite(spec: PartiteSpec | Sequence[int]) -> Graph:
    if not isinstance(spec, PartiteSpec):
        spec = PartiteSpec(tuple(spec))
    n = spec.n
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in spec.sizes:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, tuple(rows))


def turan_graph(n: int, r: int) -> Graph:
    return complete_multipartite(PartiteSpec.turan(n, r))


def _pair_uniform(seed: int, i: int, j: int) -> float:
    digest = hashlib.blake2b(f"{seed}:{i}:{j}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big") / 2.0**64


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Each pair draws its own uniform from a hash of ``(seed, i, j)``, so the
    result does not depend on the order pairs are visited in.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if _pair_uniform(seed, i, j) < p]
    return Graph.from_edges(n, edges)


def is_clique_free(g: Graph, k: int) -> bool:
    """True iff ``g`` has no clique on ``k`` vertices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return find_clique(g, k) is None


def find_clique(g: Graph, k: int) -> tuple[int, ...] | None:
    """Return some ``k``-clique of ``g`` (the lexicographically first), or None."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def extend(chosen: list[int], cand: int) -> tuple[int, ...] | None:
        if len(chosen) == k:
            return tuple(chosen)
        need = k - len(chosen)
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            found = extend(chosen, cand & g.adj[v])
            if found is not None:
                return found
            chosen.pop()
        return None

    return extend([], (1 << g.n) - 1)


_HEADER = re.compile(r"^n\s+(\S+)$")


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the edge-list format.

    ``#`` lines are comments, an optional first data line ``n <N>`` fixes the
    vertex count and every other non-empty line is ``<u> <v>``. Repeated edges
    (in either orientation) collapse.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    declared = 0
    edges: set[tuple[int, int]] = set()
    seen_data = False
    top = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER.match(line)
        if header:
            if seen_data:
                raise GraphFormatError("header 'n <N>' must come before any edge", lineno)
            declared = _parse_int(header.group(1), lineno)
            seen_data = True
            continue
        seen_data = True
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {line!r}", lineno)
        u, v = (_parse_int(tok, lineno) for tok in tokens)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
        top = max(top, u, v)
    return Graph.from_edges(max(declared, top + 1), edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise GraphFormatError(f"negative vertex id {value}", lineno)
    return value


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_edge_list(g))

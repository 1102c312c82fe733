"""All r-cliques of a graph in canonical order.

A :class:`CliqueSet` is the whole sparse description of the r-clique tensor:
the tensor is 1/(r-1)! on every index permutation of a listed clique and zero
elsewhere, so nothing else needs to be stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class CliqueSet:
    r: int
    n: int
    cliques: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"clique size r must be >= 2, got {self.r}")

    @classmethod
    def from_cliques(cls, r: int, n: int, cliques: Iterable[Sequence[int]]) -> "CliqueSet":
        """Canonicalise an arbitrary collection of r-subsets."""
        canon = set()
        for c in cliques:
            t = tuple(sorted(c))
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"{c!r} is not a set of {r} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"{c!r} has a vertex outside 0..{n - 1}")
            canon.add(t)
        return cls(r, n, tuple(sorted(canon)))

    def __len__(self) -> int:
        return len(self.cliques)

    @property
    def count(self) -> int:
        return len(self.cliques)

    @cached_property
    def array(self) -> np.ndarray:
        """Cliques as an ``(count, r)`` integer array."""
        return np.array(self.cliques, dtype=np.intp).reshape(len(self.cliques), self.r)

    @cached_property
    def per_vertex_index(self) -> tuple[tuple[int, ...], ...]:
        index: list[list[int]] = [[] for _ in range(self.n)]
        for k, c in enumerate(self.cliques):
            for v in c:
                index[v].append(k)
        return tuple(tuple(ks) for ks in index)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Clique degree of every vertex (row sums of the clique tensor)."""
        return np.bincount(self.array.ravel(), minlength=self.n).astype(np.int64)

    def restrict(self, vertices: Sequence[int]) -> "CliqueSet":
        """Sub-clique-set on ``vertices``, relabelled to ``0..len(vertices)-1``.

        Keeps only cliques lying entirely inside ``vertices``. Relabelling is
        order preserving so canonical order survives.
        """
        vertices = sorted(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        kept = tuple(
            tuple(pos[v] for v in c) for c in self.cliques if all(v in pos for v in c)
        )
        return CliqueSet(self.r, len(vertices), kept)


def enumerate_cliques(g: Graph, r: int) -> CliqueSet:
    """Every r-subset of ``g`` inducing a complete graph, lexicographically sorted.

    Ordered extension: a partial clique only grows by vertices larger than its
    last member that are adjacent to all members, which visits each clique
    exactly once and already in lexicographic order.
    """
    if r < 2:
        raise ValueError(f"clique size r must be >= 2, got {r}")
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def extend(chosen: list[int], cand: int) -> None:
        need = r - len(chosen)
        if need == 1:
            head = tuple(chosen)
            out.extend(head + (v,) for v in iter_bits(cand))
            return
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            extend(chosen, cand & adj[v])
            chosen.pop()

    if r == 2:
        out = list(g.edges())
    else:
        for v in range(g.n):
            extend([v], adj[v] >> (v + 1) << (v + 1))
    return CliqueSet(r, g.n, tuple(out))


def clique_degree(cs: CliqueSet, v: int) -> int:
    """Number of r-cliques containing ``v``."""
    if not 0 <= v < cs.n:
        raise IndexError(f"vertex {v} out of range 0..{cs.n - 1}")
    return len(cs.per_vertex_index[v])


@dataclass(frozen=True)
class CliqueComponents:
    components: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]

    @property
    def is_clique_connected(self) -> bool:
        return len(self.components) == 1 and not self.isolated


def clique_components(cs: CliqueSet) -> CliqueComponents:
    """Split the vertices by r-clique walks.

    Each clique merges all of its members (as a star from its first vertex,
    which joins the same classes as a full union); vertices lying in no
    clique are returned separately. Components are sorted by their smallest
    vertex.
    """
    if not cs.count:
        return CliqueComponents((), tuple(range(cs.n)))
    arr = cs.array
    rows = np.repeat(arr[:, 0], cs.r - 1)
    cols = arr[:, 1:].ravel()
    links = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(cs.n, cs.n))
    _, labels = connected_components(links, directed=False)
    covered = cs.degrees > 0
    classes: dict[int, list[int]] = {}
    for v in np.flatnonzero(covered):
        classes.setdefault(int(labels[v]), []).append(int(v))
    isolated = tuple(int(v) for v in np.flatnonzero(~covered))
    return CliqueComponents(tuple(sorted(tuple(c) for c in classes.values())), isolated)


def format_clique_dump(cs: CliqueSet) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in cs.cliques)

"""Loop-aware graphs and the structural machinery built on them.

A Graph is a simple undirected graph on vertices 0..n-1, plus a set of
looped vertices.  Loops count once toward a vertex's degree and put a 1
on the adjacency-matrix diagonal.  Instances are immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    pass


class EmptySet(GraphError):
    pass


class NotAnAutomorphism(GraphError):
    pass


class NotAnInvolution(GraphError):
    pass


class AsymmetricQuotient(GraphError):
    """Orbit edge counts differ between the two directions."""


class MultiEdge(GraphError):
    """A quotient cell pair carries two or more parallel edges."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]  # sorted, each (i, j) with i < j
    loops: tuple[int, ...]  # sorted

    @staticmethod
    def build(n: int, edges: Iterable[Sequence[int]], loops: Iterable[int] = ()) -> "Graph":
        """Normalize and validate an edge/loop description."""
        norm = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphError(f"self-pair ({i},{j}) must be given as a loop")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i},{j}) out of range for n={n}")
            norm.add((min(i, j), max(i, j)))
        loopset = set(int(v) for v in loops)
        for v in loopset:
            if not (0 <= v < n):
                raise GraphError(f"loop vertex {v} out of range for n={n}")
        return Graph(n=n, edges=tuple(sorted(norm)), loops=tuple(sorted(loopset)))

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def loop_set(self) -> frozenset[int]:
        return frozenset(self.loops)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        """Distinct neighbors of each vertex; a loop does not list v itself."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Vertex degrees with loops counted once each."""
        return tuple(
            len(self.neighbors[v]) + (1 if v in self.loop_set else 0) for v in range(self.n)
        )

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return i in self.loop_set
        return (min(i, j), max(i, j)) in self.edge_set

    def adjacency_matrix(self) -> np.ndarray:
        """Symmetric 0/1 matrix; loops contribute 1 on the diagonal."""
        a = np.zeros((self.n, self.n))
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1.0
        for v in self.loops:
            a[v, v] = 1.0
        return a

    def strip_loops(self) -> "Graph":
        return Graph(n=self.n, edges=self.edges, loops=())

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Induced subgraph, relabeled 0..len(keep)-1 in the given order."""
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[i], index[j]) for i, j in self.edges if i in index and j in index
        ]
        loops = [index[v] for v in self.loops if v in index]
        return Graph.build(len(keep), edges, loops)


def laplacian(g: Graph) -> np.ndarray:
    """L = D - A on the loop-stripped graph; loops never affect L."""
    h = g.strip_loops()
    a = h.adjacency_matrix()
    return np.diag(np.asarray(h.degrees, dtype=float)) - a


@dataclass(frozen=True)
class SetParams:
    s: int
    s1: int
    mean_degree: Fraction  # average degree over S
    k_s: Fraction  # 2*mean_degree - global average degree


def set_params(g: Graph, subset: Iterable[int]) -> SetParams:
    """Degree statistics of a vertex set: s, loop count, d-bar and its
    regular-degree analogue, all as exact rationals."""
    s_list = sorted(set(subset))
    if not s_list:
        raise EmptySet("set_params requires a nonempty set")
    deg = g.degrees
    s = len(s_list)
    s1 = sum(1 for v in s_list if v in g.loop_set)
    mean = Fraction(sum(deg[v] for v in s_list), s)
    global_mean = Fraction(sum(deg), g.n)
    return SetParams(s=s, s1=s1, mean_degree=mean, k_s=2 * mean - global_mean)


def is_independent(g: Graph, subset: Iterable[int]) -> bool:
    """True iff no edge joins two distinct members; loops are allowed."""
    s = set(subset)
    for i, j in g.edges:
        if i in s and j in s:
            return False
    return True


def is_equitable(g: Graph, partition: Sequence[Iterable[int]]) -> bool:
    """Every vertex of a cell has the same number of neighbors in each cell.

    A loop at v counts as one neighbor of v inside v's own cell.
    """
    cells = [sorted(set(c)) for c in partition]
    cell_of = {}
    for idx, cell in enumerate(cells):
        for v in cell:
            if v in cell_of:
                raise GraphError(f"vertex {v} appears in two cells")
            cell_of[v] = idx
    if len(cell_of) != g.n or set(cell_of) != set(range(g.n)):
        raise GraphError("partition does not cover the vertex set")
    for cell in cells:
        counts = None
        for v in cell:
            row = [0] * len(cells)
            for u in g.neighbors[v]:
                row[cell_of[u]] += 1
            if v in g.loop_set:
                row[cell_of[v]] += 1
            if counts is None:
                counts = row
            elif counts != row:
                return False
    return True


def semiregular_bipartite(g: Graph, subset: Iterable[int]) -> tuple[bool, int, int]:
    """Check cut-regularity between S and its complement.

    Returns (ok, e_out, e_in): every vertex of S has e_out neighbors
    outside S and every outside vertex has e_in neighbors in S.
    """
    s = set(subset)
    outside = [v for v in range(g.n) if v not in s]
    out_counts = {len(g.neighbors[v] - s) for v in s}
    in_counts = {len(g.neighbors[v] & s) for v in outside}
    if len(out_counts) > 1 or len(in_counts) > 1:
        e_out = out_counts.pop() if len(out_counts) == 1 else -1
        e_in = in_counts.pop() if len(in_counts) == 1 else -1
        return False, e_out, e_in
    e_out = out_counts.pop() if out_counts else 0
    e_in = in_counts.pop() if in_counts else 0
    return True, e_out, e_in


def quotient(y: Graph, sigma: Sequence[int]) -> Graph:
    """Quotient of y by an order-two automorphism.

    Vertices are the orbits of sigma, ordered by smallest member.  The
    result must be an undirected simple loop-aware graph: cell edge
    counts w_ij have to be symmetric and at most 1 (a diagonal count of
    1 becomes a loop).  Otherwise a specific GraphError is raised.
    """
    sigma = tuple(int(v) for v in sigma)
    if sorted(sigma) != list(range(y.n)):
        raise GraphError("sigma is not a permutation of the vertices")
    for v in range(y.n):
        if sigma[sigma[v]] != v:
            raise NotAnInvolution(f"sigma^2 moves vertex {v}")
    for i, j in y.edges:
        if not y.has_edge(sigma[i], sigma[j]):
            raise NotAnAutomorphism(f"edge ({i},{j}) is not preserved")
    for v in y.loops:
        if sigma[v] not in y.loop_set:
            raise NotAnAutomorphism(f"loop at {v} is not preserved")

    orbits: list[tuple[int, ...]] = []
    seen = set()
    for v in range(y.n):
        if v in seen:
            continue
        orbit = (v,) if sigma[v] == v else (v, sigma[v])
        seen.update(orbit)
        orbits.append(orbit)
    cell_of = {v: idx for idx, orbit in enumerate(orbits) for v in orbit}
    m = len(orbits)

    # w[i][j] = edges from one vertex of orbit i into orbit j; the orbit
    # partition of an automorphism is equitable, so any representative works.
    w = [[0] * m for _ in range(m)]
    for i, orbit in enumerate(orbits):
        rep = orbit[0]
        for u in y.neighbors[rep]:
            w[i][cell_of[u]] += 1
        if rep in y.loop_set:
            w[i][i] += 1

    edges = []
    loops = []
    for i in range(m):
        if w[i][i] > 1:
            raise MultiEdge(f"orbit {orbits[i]} maps to {w[i][i]} loops")
        if w[i][i] == 1:
            loops.append(i)
        for j in range(i + 1, m):
            if w[i][j] != w[j][i]:
                raise AsymmetricQuotient(
                    f"w[{i}][{j}]={w[i][j]} but w[{j}][{i}]={w[j][i]}"
                )
            if w[i][j] > 1:
                raise MultiEdge(f"orbits {orbits[i]} and {orbits[j]} carry {w[i][j]} edges")
            if w[i][j] == 1:
                edges.append((i, j))
    return Graph.build(m, edges, loops)


def to_json(g: Graph) -> str:
    """Canonical single-line JSON; byte-stable across runs and platforms."""
    payload = {
        "n": g.n,
        "edges": [[i, j] for i, j in g.edges],
        "loops": list(g.loops),
    }
    return json.dumps(payload)


def from_json(text: str) -> Graph:
    data = json.loads(text)
    try:
        n = data["n"]
        edges = data["edges"]
        loops = data["loops"]
    except (TypeError, KeyError) as exc:
        raise GraphError(f"malformed graph JSON: missing {exc}") from exc
    if not isinstance(n, int):
        raise GraphError("graph JSON field 'n' must be an integer")
    return Graph.build(n, edges, loops)


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(to_json(g) + "\n")


def read_graph(path: str) -> Graph:
    with open(path) as fh:
        return from_json(fh.read())

"""Projective planes PG(2,q) and the graphs built from their polarity.

Points are 1-dimensional subspaces of GF(q)^3, stored with the first
nonzero coordinate normalized to 1 so each subspace has exactly one
representative.  Two points are orthogonal when the standard bilinear
form x^T y vanishes; the polarity graph on the q^2+q+1 points has
degree q+1 and carries a loop on each of the q+1 self-orthogonal
(absolute) points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .galois import Field, FieldElement, make_field
from .graphcore import Graph

LOOP_MODES = ("keep", "drop_loops", "drop_absolute_vertices")


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[FieldElement, FieldElement, FieldElement]

    def dot(self, other: "ProjectivePoint") -> FieldElement:
        x, y = self.coords, other.coords
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.coeffs for c in self.coords)

    def __repr__(self) -> str:
        return f"ProjectivePoint{tuple(c.coeffs for c in self.coords)}"


def normalize_point(coords: Sequence[FieldElement]) -> ProjectivePoint:
    """Scale so the first nonzero coordinate becomes 1."""
    if all(c.is_zero for c in coords):
        raise ValueError("the zero vector spans no projective point")
    lead = next(c for c in coords if not c.is_zero)
    inv = lead.inverse()
    return ProjectivePoint(tuple(c * inv for c in coords))


def enumerate_points(field: Field) -> list[ProjectivePoint]:
    """All q^2+q+1 points in lexicographic coordinate order."""
    zero, one = field.zero, field.one
    pts = [ProjectivePoint((zero, zero, one))]
    pts += [ProjectivePoint((zero, one, c)) for c in field.elements()]
    pts += [
        ProjectivePoint((one, b, c)) for b in field.elements() for c in field.elements()
    ]
    return sorted(pts, key=ProjectivePoint.sort_key)


@dataclass(frozen=True)
class Polarity:
    """Order-two colour-swapping permutation of an incidence graph."""

    mapping: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def __len__(self) -> int:
        return len(self.mapping)


def _orthogonality(q: int) -> tuple[list[ProjectivePoint], list[list[int]], list[int]]:
    field = make_field(q)
    pts = enumerate_points(field)
    n = len(pts)
    adj = [[] for _ in range(n)]
    absolute = []
    for i in range(n):
        if pts[i].dot(pts[i]).is_zero:
            absolute.append(i)
        for j in range(i + 1, n):
            if pts[i].dot(pts[j]).is_zero:
                adj[i].append(j)
                adj[j].append(i)
    return pts, adj, absolute


def er_graph(q: int, loop_mode: str = "keep") -> Graph:
    """Orthogonality graph on the points of PG(2,q).

    keep: loops retained on the q+1 absolute points (degree q+1
    everywhere, loops counted once).  drop_loops: same vertex set with
    the loops removed.  drop_absolute_vertices: delete the absolute
    points entirely, leaving q^2 vertices.
    """
    if loop_mode not in LOOP_MODES:
        raise ValueError(f"loop_mode must be one of {LOOP_MODES}")
    _, adj, absolute = _orthogonality(q)
    n = len(adj)
    edges = [(i, j) for i in range(n) for j in adj[i] if i < j]
    if loop_mode == "keep":
        return Graph.build(n, edges, absolute)
    if loop_mode == "drop_loops":
        return Graph.build(n, edges, ())
    keep = [v for v in range(n) if v not in set(absolute)]
    return Graph.build(n, edges, ()).induced(keep)


def incidence_graph_with_polarity(q: int) -> tuple[Graph, Polarity]:
    """Bipartite point/line incidence graph of PG(2,q) with the
    orthogonal polarity.

    Vertex i is the i-th point and vertex n+i the line consisting of
    the points orthogonal to point i; the polarity swaps the two.  The
    result is (q+1)-regular on 2(q^2+q+1) vertices, and every polarity
    orbit has size two.
    """
    _, adj, absolute = _orthogonality(q)
    n = len(adj)
    edges = []
    for i in range(n):
        for j in adj[i]:
            edges.append((i, n + j))
    # An absolute point lies on its own polar line.
    edges += [(i, n + i) for i in absolute]
    mapping = tuple(list(range(n, 2 * n)) + list(range(n)))
    return Graph.build(2 * n, edges), Polarity(mapping)

"""Small comparison families used to exercise the bounds."""

from __future__ import annotations

from .graphcore import Graph


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices 0..a-1 on the small side, a..a+b-1 on the large."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.build(a + b, edges)


def xm_graph(m: int) -> Graph:
    """The join of an edgeless graph on m vertices with a (2m+1)-cycle.

    Vertices 0..m-1 form the edgeless part, m..3m form the cycle.
    Every bound comparison on this family uses one of its two kinds of
    maximum independent set (the edgeless part, or m alternate cycle
    vertices), both of size m.
    """
    if m <= 1:
        raise ValueError("xm_graph needs m > 1")
    cyc = 2 * m + 1
    edges = [(m + i, m + (i + 1) % cyc) for i in range(cyc)]
    edges += [(i, m + j) for i in range(m) for j in range(cyc)]
    return Graph.build(3 * m + 1, edges)

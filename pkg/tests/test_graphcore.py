from fractions import Fraction

import numpy as np
import pytest

from alphabound.exact import max_independent_set
from alphabound.families import complete_bipartite, xm_graph
from alphabound.geometry import er_graph, incidence_graph_with_polarity
from alphabound.graphcore import (
    AsymmetricQuotient,
    EmptySet,
    Graph,
    MultiEdge,
    NotAnAutomorphism,
    NotAnInvolution,
    from_json,
    is_equitable,
    is_independent,
    laplacian,
    quotient,
    semiregular_bipartite,
    set_params,
    to_json,
)
from alphabound.spectra import eigenvalues
from conftest import cycle, path, petersen


def test_degrees_count_loops_once():
    g = Graph.build(3, [(0, 1)], loops=[1])
    assert g.degrees == (1, 2, 0)
    a = g.adjacency_matrix()
    assert a[1, 1] == 1.0 and a[0, 0] == 0.0
    assert list(a.sum(axis=0)) == [1.0, 2.0, 0.0]


def test_set_params_kab():
    g = complete_bipartite(4, 23)
    big_side = list(range(4, 27))
    p = set_params(g, big_side)
    assert p.mean_degree == 4
    assert p.k_s == Fraction(32, 27)
    assert p.s1 == 0


def test_set_params_regular_graph():
    g = petersen()
    for s in ([0], [0, 2, 6], list(range(10))):
        p = set_params(g, s)
        assert p.mean_degree == p.k_s == 3


def test_set_params_xm_g_side():
    g = xm_graph(2)
    p = set_params(g, [0, 1])
    assert p.mean_degree == 5  # 2m+1 with m=2
    assert p.s1 == 0


def test_set_params_empty_raises():
    with pytest.raises(EmptySet):
        set_params(petersen(), [])


def test_is_independent():
    g = er_graph(3, "keep")
    assert is_independent(g, [])
    assert is_independent(g, [g.loops[0]])  # a looped vertex alone is fine
    k2 = Graph.build(2, [(0, 1)])
    assert not is_independent(k2, [0, 1])


def test_laplacian_ignores_loops_and_has_zero_row_sums():
    g = er_graph(3, "keep")
    h = er_graph(3, "drop_loops")
    assert np.array_equal(laplacian(g), laplacian(h))
    lap = laplacian(g)
    assert np.allclose(lap.sum(axis=1), 0.0)
    assert eigenvalues(lap).least >= -1e-9


def test_laplacian_largest_eigenvalue_examples():
    assert abs(eigenvalues(laplacian(complete_bipartite(4, 23))).largest - 27) < 1e-9
    assert abs(eigenvalues(laplacian(xm_graph(2))).largest - 7) < 1e-9
    edgeless = Graph.build(5, [])
    assert np.array_equal(laplacian(edgeless), np.zeros((5, 5)))


def test_quotient_of_incidence_graph_is_polarity_graph():
    for q in (2, 3, 4):
        inc, pol = incidence_graph_with_polarity(q)
        assert quotient(inc, pol.mapping) == er_graph(q, "keep")


def test_quotient_c4_antipodal_is_multiedge():
    c4 = cycle(4)
    with pytest.raises(MultiEdge):
        quotient(c4, [2, 3, 0, 1])


def test_quotient_2k2_edge_swap_gives_two_loops():
    g = Graph.build(4, [(0, 1), (2, 3)])
    quo = quotient(g, [1, 0, 3, 2])
    assert quo == Graph.build(2, [], loops=[0, 1])


def test_quotient_asymmetric_between_fixed_point_and_pair():
    # 0 fixed, {1,2} swapped, both adjacent to 0: w_{01}=2 vs w_{10}=1.
    g = Graph.build(3, [(0, 1), (0, 2)])
    with pytest.raises(AsymmetricQuotient):
        quotient(g, [0, 2, 1])


def test_quotient_rejects_non_automorphism_and_non_involution():
    from alphabound.graphcore import GraphError

    g = path(3)
    with pytest.raises(NotAnInvolution):
        quotient(g, [1, 2, 0])  # a 3-cycle permutation
    with pytest.raises(NotAnAutomorphism):
        quotient(g, [1, 0, 2])  # swaps an end with the middle
    with pytest.raises(GraphError):
        quotient(g, [0, 0, 1])  # not a permutation


def test_quotient_identity_returns_same_graph():
    g = petersen()
    assert quotient(g, list(range(10))) == g


def test_quotient_eigenvalues_contained_in_cover_spectrum():
    for q in (2, 3, 4, 5):
        inc, pol = incidence_graph_with_polarity(q)
        quo = quotient(inc, pol.mapping)
        big = eigenvalues(inc.adjacency_matrix()).values
        for lam in eigenvalues(quo.adjacency_matrix()).values:
            assert min(abs(lam - b) for b in big) < 1e-8


def test_is_equitable_examples():
    p3 = path(3)
    assert is_equitable(p3, [[0, 2], [1]])
    p4 = path(4)
    assert is_equitable(p4, [[0, 3], [1, 2]])
    assert not is_equitable(p4, [[0], [1, 2, 3]])
    pet = petersen()
    s = list(max_independent_set(pet, 5.0).witness)
    assert len(s) == 4 and is_independent(pet, s)
    assert is_equitable(pet, [s, [v for v in range(10) if v not in s]])


def test_is_equitable_orbit_partition_of_automorphism():
    inc, pol = incidence_graph_with_polarity(3)
    orbits = [[i, pol(i)] for i in range(26) if i < pol(i)]
    assert is_equitable(inc, orbits)


def test_is_equitable_loop_counts_toward_own_cell():
    g = Graph.build(2, [], loops=[0, 1])
    assert is_equitable(g, [[0, 1]])
    h = Graph.build(2, [], loops=[0])
    assert not is_equitable(h, [[0, 1]])
    assert is_equitable(h, [[0], [1]])


def test_semiregular_bipartite():
    assert semiregular_bipartite(complete_bipartite(4, 23), list(range(4, 27))) == (True, 4, 23)
    pet = petersen()
    s = max_independent_set(pet, 5.0).witness
    assert semiregular_bipartite(pet, s) == (True, 3, 2)
    ok, _, _ = semiregular_bipartite(cycle(5), [0, 2])
    assert not ok


def test_json_round_trip_is_byte_identical():
    g = er_graph(3, "keep")
    text = to_json(g)
    assert to_json(from_json(text)) == text
    assert text.startswith('{"n": 13, "edges": [[0, ')
    assert '"loops": [' in text


def test_json_rejects_malformed():
    from alphabound.graphcore import GraphError

    with pytest.raises(GraphError):
        from_json('{"edges": []}')
    with pytest.raises(GraphError):
        from_json('{"n": 2, "edges": [[0, 5]], "loops": []}')


def test_build_normalizes_edges():
    from alphabound.graphcore import GraphError

    g = Graph.build(4, [(2, 0), (0, 2), (1, 3)], loops=(3, 1))
    assert g.edges == ((0, 2), (1, 3))
    assert g.loops == (1, 3)
    with pytest.raises(GraphError):
        Graph.build(2, [(0, 0)])

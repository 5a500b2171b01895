import math

import numpy as np
import pytest

from alphabound.families import complete_bipartite, xm_graph
from alphabound.geometry import er_graph
from alphabound.spectra import (
    NotSymmetric,
    cubic_least_root,
    eigenvalues,
    er_cubic,
    extreme_eigs,
    newton_least_root,
    verify_er_charpoly,
)
from conftest import petersen


def test_zero_matrix():
    spec = eigenvalues(np.zeros((4, 4)))
    assert spec.values == (0.0, 0.0, 0.0, 0.0)
    assert spec.clusters == ((0.0, 4),)


def test_rejects_asymmetric():
    m = np.array([[0.0, 1.0], [0.5, 0.0]])
    with pytest.raises(NotSymmetric):
        eigenvalues(m)
    with pytest.raises(NotSymmetric):
        eigenvalues(np.zeros((2, 3)))
    with pytest.raises(NotSymmetric):
        eigenvalues(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_reconstruction_trace_and_frobenius():
    rng = np.random.default_rng(42)
    for n in (3, 10, 25, 50):
        m = rng.normal(size=(n, n))
        m = (m + m.T) / 2
        vals = np.array(eigenvalues(m).values)
        assert abs(vals.sum() - np.trace(m)) <= 1e-8 * max(1.0, abs(np.trace(m)))
        assert np.isclose(np.square(vals).sum(), np.square(m).sum(), rtol=1e-8)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_er_spectrum_closed_form(q):
    spec = eigenvalues(er_graph(q, "keep").adjacency_matrix())
    rq = math.sqrt(q)
    clusters = spec.clusters
    assert len(clusters) == 3
    (v1, m1), (v2, m2), (v3, m3) = clusters
    assert abs(v1 + rq) < 1e-8 and abs(v2 - rq) < 1e-8 and abs(v3 - (q + 1)) < 1e-8
    assert m3 == 1 and m1 + m2 == q * q + q
    assert m1 == m2  # trace equals the loop count q+1


def test_kab_least_eigenvalue():
    for a, b in ((2, 3), (4, 23), (1, 4)):
        spec = eigenvalues(complete_bipartite(a, b).adjacency_matrix())
        assert abs(spec.least + math.sqrt(a * b)) < 1e-9


def test_extreme_eigs_petersen():
    ext = extreme_eigs(petersen().adjacency_matrix())
    assert abs(ext.least + 2) < 1e-9
    assert abs(ext.second_largest - 1) < 1e-9
    assert abs(ext.largest - 3) < 1e-9
    assert abs(ext.lam - 2) < 1e-9


def test_extreme_eigs_xm():
    for m in (2, 3, 4, 5, 6):
        ext = extreme_eigs(xm_graph(m).adjacency_matrix())
        assert abs(ext.least - (1 - math.sqrt(2 * m * m + m + 1))) < 1e-8


def test_extreme_eigs_complete_graph():
    n = 6
    a = np.ones((n, n)) - np.eye(n)
    ext = extreme_eigs(a)
    assert abs(ext.least + 1) < 1e-9
    assert abs(ext.second_largest + 1) < 1e-9
    assert abs(ext.largest - (n - 1)) < 1e-9
    assert abs(ext.lam - 1) < 1e-9


def test_newton_iterates_q3():
    # frozen against exact algebra: one step from -sqrt(3) lands at
    # -2.34405542..., the second at -2.20966256...
    assert newton_least_root(3, 1) == pytest.approx(-2.3440554264387752, abs=1e-12)
    assert newton_least_root(3, 2) == pytest.approx(-2.2096625622767187, abs=1e-12)


def test_newton_is_a_lower_bound_converging_from_below():
    for q in (3, 4, 5, 7, 8, 9, 11, 13):
        exact = cubic_least_root(q)
        assert abs(er_cubic(q)(exact)) < 1e-6
        prev = -float("inf")
        for i in range(1, 7):
            w = newton_least_root(q, i)
            assert w <= exact + 1e-12
            assert w >= prev - 1e-12
            prev = w


def test_newton_q5_examples():
    assert newton_least_root(5, 2) == pytest.approx(-2.7257, abs=1e-4)
    assert cubic_least_root(5) == pytest.approx(-2.7221, abs=1e-4)


def test_cubic_roots_q3():
    # the spectrum of the loopless variant has cubic factor roots near
    # -2.2015, 1.4545, 3.7470
    from alphabound.spectra import _er_cubic_roots

    roots = _er_cubic_roots(3)
    assert roots == pytest.approx([-2.2015, 1.4545, 3.7470], abs=5e-4)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
@pytest.mark.parametrize("variant", ["deleted_absolute", "loopless"])
def test_verify_er_charpoly(q, variant):
    assert verify_er_charpoly(q, variant)


def test_charpoly_q3_deleted_absolute_values():
    spec = eigenvalues(er_graph(3, "drop_absolute_vertices").adjacency_matrix())
    rq = math.sqrt(3)
    expected = sorted([3.0, 0.0, -1.0, -1.0, -1.0, rq, rq, -rq, -rq])
    assert np.allclose(spec.values, expected, atol=1e-8)


def test_charpoly_detects_wrong_graph():
    # the looped variant does not match the loopless factorization
    import alphabound.spectra as spectra

    expected = spectra.expected_er_spectrum(3, "loopless")
    looped = eigenvalues(er_graph(3, "keep").adjacency_matrix()).values
    assert not all(abs(a - b) <= 1e-6 for a, b in zip(looped, expected))


def test_cluster_tolerance_groups_er13():
    g = er_graph(13, "keep")
    spec = eigenvalues(g.adjacency_matrix())
    assert len(spec.clusters) == 3
    assert [m for _, m in spec.clusters] == [91, 91, 1]

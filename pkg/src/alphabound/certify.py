"""Structural certification of sets that meet a bound with equality.

When the quadratic inequality is tight, the shifted characteristic
vector z - (s/n)*1 is in the kernel of T + A, which forces degree and
neighbor-count conditions on S.  These routines check each consequence
separately and report flags; the biconditional theorems (for the
regular adjacency bound and the Laplacian bound) are enforced by the
test suite, not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .bounds import NotIndependent, hoffman, lbound
from .graphcore import Graph, is_equitable, is_independent, laplacian, semiregular_bipartite, set_params
from .spectra import eigenvalues

EQUALITY_TOL = 1e-9
RESIDUAL_TOL = 1e-7


class NotRegular(ValueError):
    pass


class HasLoops(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


def _shifted_indicator(n: int, subset: Sequence[int]) -> np.ndarray:
    z = np.zeros(n)
    z[list(subset)] = 1.0
    return z - len(subset) / n


def gentight_check(
    g: Graph, t_diag: Sequence, subset: Iterable[int]
) -> tuple[bool, bool]:
    """Necessary conditions when the general inequality is tight.

    cond_a: every i in S satisfies t_i + [loop at i] = (t_i + d_i)s/n,
    i.e. d_i = t_i(n/s - 1) for loopless members, with an extra n/s for
    looped ones (the kernel row equation of T + A at the shifted
    indicator; the loop term is forced by rows where A_ii = 1).
    cond_b: every i outside S has exactly (d_i + t_i)s/n neighbors in S.
    Exact rational comparison is used whenever t_i is rational.
    """
    s_set = sorted(set(subset))
    if not is_independent(g, s_set):
        raise NotIndependent("S contains an edge")
    if not s_set:
        return True, True
    n, s = g.n, len(s_set)
    deg = g.degrees
    in_s = set(s_set)

    cond_a = True
    for v in s_set:
        t_v = t_diag[v]
        loop = 1 if v in g.loop_set else 0
        if isinstance(t_v, Rational):
            ok = Fraction(t_v) + loop == (Fraction(t_v) + deg[v]) * Fraction(s, n)
        else:
            ok = abs(float(t_v) + loop - (float(t_v) + deg[v]) * s / n) <= EQUALITY_TOL
        if not ok:
            cond_a = False
            break

    cond_b = True
    for v in range(n):
        if v in in_s:
            continue
        count = len(g.neighbors[v] & in_s)
        t_v = t_diag[v]
        if isinstance(t_v, Rational):
            ok = Fraction(count) == (deg[v] + Fraction(t_v)) * Fraction(s, n)
        else:
            ok = abs(count - (deg[v] + float(t_v)) * s / n) <= EQUALITY_TOL
        if not ok:
            cond_b = False
            break
    return cond_a, cond_b


@dataclass(frozen=True)
class AdjacencyTightness:
    equality: bool
    semiregular: bool
    equitable: bool
    eigvec_membership: bool

    @property
    def all_flags(self) -> bool:
        return self.equality and self.semiregular and self.equitable and self.eigvec_membership


def hoffman_equality_certify(g: Graph, subset: Iterable[int]) -> AdjacencyTightness:
    """Equality analysis of the ratio bound on a regular loopless graph.

    Flags: |S| attains n(-tau)/(k-tau); the S/complement cut is
    semi-regular; the two-cell partition is equitable; and the shifted
    indicator is a least-eigenvalue eigenvector.
    """
    if g.loops:
        raise HasLoops("the ratio bound requires a loopless graph")
    degs = set(g.degrees)
    if len(degs) != 1:
        raise NotRegular(f"degrees {sorted(degs)} are not constant")
    s_set = sorted(set(subset))
    if not is_independent(g, s_set):
        raise NotIndependent("S contains an edge")
    k = degs.pop()
    a = g.adjacency_matrix()
    spec = eigenvalues(a)
    tau = spec.least
    bound = hoffman(g.n, k, tau)
    equality = bound.informative and abs(len(s_set) - bound.value) <= EQUALITY_TOL

    semi, _, _ = semiregular_bipartite(g, s_set)
    complement = [v for v in range(g.n) if v not in set(s_set)]
    equit = is_equitable(g, [s_set, complement])

    z = _shifted_indicator(g.n, s_set)
    residual = float(np.linalg.norm(a @ z - tau * z))
    return AdjacencyTightness(
        equality=equality,
        semiregular=semi,
        equitable=equit,
        eigvec_membership=residual <= RESIDUAL_TOL,
    )


@dataclass(frozen=True)
class LaplacianTightness:
    equality: bool
    semiregular: bool
    eigvec_membership: bool

    @property
    def all_flags(self) -> bool:
        return self.equality and self.semiregular and self.eigvec_membership


def laplacian_equality_certify(g: Graph, subset: Iterable[int]) -> LaplacianTightness:
    """Equality analysis of the Laplacian bound on a loopless graph.

    Semi-regularity here is quantitative: mu(1 - s/n) neighbors leaving
    each vertex of S and mu*s/n entering from each outside vertex.
    """
    if g.loops:
        raise HasLoops("strip loops first; the Laplacian ignores them")
    s_set = sorted(set(subset))
    if not is_independent(g, s_set):
        raise NotIndependent("S contains an edge")
    lap = laplacian(g)
    mu = eigenvalues(lap).largest
    params = set_params(g, s_set)
    bound = lbound(g.n, mu, float(params.mean_degree))
    equality = bound.informative and abs(len(s_set) - bound.value) <= EQUALITY_TOL

    semi, e_out, e_in = semiregular_bipartite(g, s_set)
    s, n = len(s_set), g.n
    semi = (
        semi
        and abs(e_out - mu * (1 - s / n)) <= EQUALITY_TOL
        and abs(e_in - mu * s / n) <= EQUALITY_TOL
    )

    z = _shifted_indicator(g.n, s_set)
    residual = float(np.linalg.norm(lap @ z - mu * z))
    return LaplacianTightness(
        equality=equality,
        semiregular=semi,
        eigvec_membership=residual <= RESIDUAL_TOL,
    )


def coprime_complete_bipartite_check(g: Graph, subset: Iterable[int]) -> bool:
    """Consequence of Laplacian tightness when gcd(s, n) = 1: mu must
    equal n and the cut between S and its complement must be complete
    bipartite."""
    s_set = sorted(set(subset))
    cert = laplacian_equality_certify(g, s_set)
    if not cert.equality:
        raise PreconditionFailed("the Laplacian bound is not tight on S")
    if math.gcd(len(s_set), g.n) != 1:
        raise PreconditionFailed(f"gcd(|S|, n) = {math.gcd(len(s_set), g.n)} != 1")
    mu = eigenvalues(laplacian(g)).largest
    if abs(mu - g.n) > 1e-6:
        return False
    in_s = set(s_set)
    outside = [v for v in range(g.n) if v not in in_s]
    return all(g.has_edge(u, v) for u in s_set for v in outside)

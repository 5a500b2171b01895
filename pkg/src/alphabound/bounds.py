"""Eigenvalue upper bounds on the size of an independent set.

All bound functions take plain numbers and return a BoundReport rather
than raising when a bound is inapplicable: a report that is not
informative carries value +inf, so callers can safely take minima over
collections of reports.

The core inequality: for any diagonal T with T + A positive
semidefinite and any independent set S of size s with s1 loops,

    (s^2/n^2) * sum_V (t_i + d_i)
      - (2s/n) * sum_S (t_i + d_i)
      + sum_S t_i + s1  >=  0.

Choosing T = -tau*I (least adjacency eigenvalue) or T = mu*I - D
(largest Laplacian eigenvalue) and solving for s yields the named
closed-form bounds below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import numpy as np

from .galois import _factor_prime_power
from .graphcore import Graph, is_independent
from .spectra import newton_least_root

PSD_TOL = 1e-9
INF = math.inf


class NotPSD(ValueError):
    pass


class NotIndependent(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: float  # +inf when not informative
    params: Mapping[str, float]
    preconditions_ok: bool
    informative: bool

    def __post_init__(self):
        if not self.informative:
            assert self.value == INF


def _report(name: str, params: dict, pre_ok: bool, informative: bool, value: float) -> BoundReport:
    if informative and not value >= 0:
        # negative (or NaN) values only arise from inconsistent inputs;
        # +inf keeps the report sound for callers taking minima
        informative = False
    if not informative:
        value = INF
    return BoundReport(
        name=name,
        value=float(value),
        params=dict(params),
        preconditions_ok=pre_ok,
        informative=informative,
    )


def hoffman(n: int, k: float, tau: float) -> BoundReport:
    """n(-tau)/(k - tau) for k-regular loopless graphs."""
    pre_ok = k > tau and tau < 0
    value = n * (-tau) / (k - tau) if pre_ok else INF
    return _report("hoffman", {"n": n, "k": k, "tau": tau}, pre_ok, pre_ok, value)


def abound(n: int, k_s: float, tau: float) -> BoundReport:
    """Loopless irregular form: n(-tau)/(k_S - tau).

    k_S may be zero or negative, in which case the bound is useless and
    the report is flagged uninformative.
    """
    pre_ok = tau < 0
    informative = pre_ok and k_s > 0
    value = n * (-tau) / (k_s - tau) if informative else INF
    return _report("abound", {"n": n, "k_s": float(k_s), "tau": tau}, pre_ok, informative, value)


def abound1(n: int, k: float, tau: float, s1: int) -> BoundReport:
    """Regular graph with loops; s1 loops inside the independent set."""
    pre_ok = k > tau and s1 >= 0
    if pre_ok:
        value = n * (-tau + math.sqrt(tau * tau + 4 * s1 * (k - tau) / n)) / (2 * (k - tau))
    else:
        value = INF
    return _report(
        "abound1", {"n": n, "k": k, "tau": tau, "s1": s1}, pre_ok, pre_ok, value
    )


def abound2(n: int, k_s: float, tau: float, s1: int) -> BoundReport:
    """Irregular graph with loops; the k_S analogue of abound1."""
    pre_ok = tau < 0 and s1 >= 0
    informative = pre_ok and k_s > tau
    if informative:
        value = n * (-tau + math.sqrt(tau * tau + 4 * s1 * (k_s - tau) / n)) / (2 * (k_s - tau))
    else:
        value = INF
    return _report(
        "abound2",
        {"n": n, "k_s": float(k_s), "tau": tau, "s1": s1},
        pre_ok,
        informative,
        value,
    )


def lbound(n: int, mu: float, mean_degree: float) -> BoundReport:
    """Laplacian form n(mu - d_S)/mu, with d_S the average degree over S."""
    params = {"n": n, "mu": mu, "mean_degree": float(mean_degree)}
    if mu == 0:
        return _report("lbound", params, True, True, float(n))
    pre_ok = mu > 0
    value = n * (mu - mean_degree) / mu if pre_ok else INF
    return _report("lbound", params, pre_ok, pre_ok, value)


def lbound2(n: int, mu: float, min_degree: float) -> BoundReport:
    """lbound weakened to the minimum degree, a set-free quantity."""
    params = {"n": n, "mu": mu, "min_degree": float(min_degree)}
    if mu == 0:
        return _report("lbound2", params, True, True, float(n))
    pre_ok = mu > 0
    value = n * (mu - min_degree) / mu if pre_ok else INF
    return _report("lbound2", params, pre_ok, pre_ok, value)


def sarnak(n: int, k: float, lam: float) -> BoundReport:
    """n*lambda/k, with lambda = max(second largest, |least|)."""
    pre_ok = k > 0 and lam > 0
    value = n * lam / k if pre_ok else INF
    return _report("sarnak", {"n": n, "k": k, "lambda": lam}, pre_ok, pre_ok, value)


def sarnak_improved(n: int, k: float, lam: float) -> BoundReport:
    """n/(1 + k/lambda), strictly below sarnak for k, lambda > 0."""
    pre_ok = k > 0 and lam > 0
    value = n / (1 + k / lam) if pre_ok else INF
    return _report(
        "sarnak_improved", {"n": n, "k": k, "lambda": lam}, pre_ok, pre_ok, value
    )


def general_bound(
    g: Graph, t_diag: Sequence, subset: Iterable[int]
) -> tuple[Fraction | float, bool]:
    """Evaluate the raw quadratic inequality for a diagonal T and an
    independent set S; returns (lhs, lhs >= 0 within tolerance).

    The lhs is exact (a Fraction) whenever every t_i is rational.
    """
    s_set = sorted(set(subset))
    if len(t_diag) != g.n:
        raise ValueError(f"T has length {len(t_diag)}, expected {g.n}")
    if not is_independent(g, s_set):
        raise NotIndependent("S contains an edge")
    a = g.adjacency_matrix()
    m = a + np.diag(np.asarray([float(t) for t in t_diag]))
    least = float(np.linalg.eigvalsh(m)[0])
    if least < -PSD_TOL:
        raise NotPSD(f"T + A has least eigenvalue {least:.3g}")

    exact = all(isinstance(t, Rational) for t in t_diag)
    deg = g.degrees
    s = len(s_set)
    s1 = sum(1 for v in s_set if v in g.loop_set)
    n = g.n
    if exact:
        total = sum(Fraction(t) + d for t, d in zip(t_diag, deg))
        in_s = sum(Fraction(t_diag[v]) + deg[v] for v in s_set)
        t_s = sum(Fraction(t_diag[v]) for v in s_set)
        lhs = Fraction(s * s, n * n) * total - Fraction(2 * s, n) * in_s + t_s + s1
    else:
        total = sum(float(t) + d for t, d in zip(t_diag, deg))
        in_s = sum(float(t_diag[v]) + deg[v] for v in s_set)
        t_s = sum(float(t_diag[v]) for v in s_set)
        lhs = (s * s) / (n * n) * total - (2 * s) / n * in_s + t_s + s1
    return lhs, lhs >= -PSD_TOL


@dataclass(frozen=True, eq=False)
class RatioCertificate:
    """Theorem-style certificate: a PSD matrix with nonpositive entries
    on non-adjacent pairs, constant row sum r and constant diagonal t
    certifies alpha <= n*t/r."""

    matrix: np.ndarray
    psd: bool
    sign_pattern: bool
    row_sum_const: bool
    diag_const: bool
    t: float
    r: float
    value: float | None = field(default=None)

    @property
    def valid(self) -> bool:
        return self.psd and self.sign_pattern and self.row_sum_const and self.diag_const


def ratio_certificate(b: np.ndarray, g: Graph) -> RatioCertificate:
    b = np.asarray(b, dtype=float)
    if b.shape != (g.n, g.n):
        raise ValueError(f"B has shape {b.shape}, expected ({g.n}, {g.n})")
    symmetric = bool(np.max(np.abs(b - b.T)) <= 1e-12) if b.size else True
    psd = symmetric and float(np.linalg.eigvalsh(0.5 * (b + b.T))[0]) >= -PSD_TOL

    sign_pattern = True
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j) and b[i, j] > 1e-12:
                sign_pattern = False
                break
        if not sign_pattern:
            break

    row_sums = b.sum(axis=1)
    diag = np.diag(b)
    row_sum_const = bool(np.ptp(row_sums) <= PSD_TOL) if g.n else True
    diag_const = bool(np.ptp(diag) <= PSD_TOL) if g.n else True
    r = float(row_sums.mean()) if g.n else 0.0
    t = float(diag.mean()) if g.n else 0.0

    value = None
    if psd and sign_pattern and row_sum_const and diag_const and r > 0:
        value = g.n * t / r
    return RatioCertificate(
        matrix=b,
        psd=psd,
        sign_pattern=sign_pattern,
        row_sum_const=row_sum_const,
        diag_const=diag_const,
        t=t,
        r=r,
        value=value,
    )


ER_BOUND_NAMES = ("abound1", "noloop", "ratio", "noabs1", "noabs2")


def er_bounds(q: int) -> dict[str, BoundReport]:
    """The five closed-form bounds for the polarity graph on q^2+q+1
    points, computed symbolically from q (no eigensolve).

    Spectral inputs: degree q+1, least eigenvalue -sqrt(q), q+1 loops;
    the loopless variant uses the two-step Newton underestimate of its
    least eigenvalue.
    """
    _factor_prime_power(q)  # raises NotAPrimePower for invalid q
    n = q * q + q + 1
    rq = math.sqrt(q)
    k = q + 1
    a = q + 1  # number of absolute points

    ratio_val = n * rq / (q + rq + 1) + (q + 1)
    ratio = _report(
        "ratio", {"n": n, "k": k, "tau": -rq, "added": q + 1}, True, True, ratio_val
    )

    ab1 = abound1(n, k, -rq, a)

    noabs1_val = q * q * rq / (q - 2 + 1 / q + rq) + (q + 1)
    noabs1 = _report(
        "noabs1", {"n": q * q, "tau": -rq, "added": q + 1}, True, True, noabs1_val
    )

    # Linear in s1, so the max over s1 in [0, q+1] is at an endpoint.
    def deleted_absolute_bound(s1: int) -> float:
        return (q * q * rq + 2 * q * (q + 1 - s1)) / (q + 2 + 1 / q + rq) + s1

    lo, hi = deleted_absolute_bound(0), deleted_absolute_bound(q + 1)
    noabs2 = _report(
        "noabs2",
        {"n": q * q, "tau": -rq, "s1_worst": 0 if lo >= hi else q + 1},
        True,
        True,
        max(lo, hi),
    )

    w = newton_least_root(q, 2)
    noloop_val = (n * (-w) + 2 * (q + 1)) / (q + 1 - w + (q + 1) / n)
    noloop = _report(
        "noloop", {"n": n, "w": w, "s1_worst": q + 1}, True, True, noloop_val
    )

    return {
        "abound1": ab1,
        "noloop": noloop,
        "ratio": ratio,
        "noabs1": noabs1,
        "noabs2": noabs2,
    }


def polarity_bound(q: int, absolute_count: int) -> BoundReport:
    """Independent-set bound for any polarity graph of the plane of
    order q with the given number of absolute points."""
    n = q * q + q + 1
    rep = abound1(n, q + 1, -math.sqrt(q), absolute_count)
    return _report("polarity", rep.params, rep.preconditions_ok, rep.informative, rep.value)


def wq_bound(q: int) -> BoundReport:
    """Polarity graphs of the order-(q,q) generalized quadrangle:
    q^3+q^2+q+1 vertices, degree q+1, least eigenvalue -sqrt(2q),
    q^2+1 absolute points."""
    n = q * q * q + q * q + q + 1
    rep = abound1(n, q + 1, -math.sqrt(2 * q), q * q + 1)
    return _report("wq", rep.params, rep.preconditions_ok, rep.informative, rep.value)

"""Dense symmetric eigenvalues, multiplicity clustering, and the
closed-form spectral facts for the polarity-graph family.

The eigensolver is LAPACK's symmetric solver (tridiagonalization with
implicit shifts) behind a thin contract: symmetry is checked on entry,
eigenvalues come back sorted, and near-equal values are grouped into
multiplicity clusters at a configurable tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import er_graph

SYMMETRY_TOL = 1e-12
CLUSTER_TOL = 1e-8


class NotSymmetric(ValueError):
    pass


class NoConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]  # ascending
    cluster_tol: float
    clusters: tuple[tuple[float, int], ...]  # (representative, multiplicity)

    @property
    def least(self) -> float:
        return self.values[0]

    @property
    def largest(self) -> float:
        return self.values[-1]


def _cluster(values: Sequence[float], tol: float) -> tuple[tuple[float, int], ...]:
    groups: list[list[float]] = []
    for v in values:
        if groups and abs(v - groups[-1][-1]) <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple((sum(g) / len(g), len(g)) for g in groups)


def eigenvalues(m: np.ndarray, cluster_tol: float = CLUSTER_TOL) -> Spectrum:
    """All eigenvalues of a symmetric matrix, ascending, with clusters."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric(f"matrix shape {m.shape} is not square")
    if not np.all(np.isfinite(m)):
        raise NotSymmetric("matrix has non-finite entries")
    if m.size and np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    try:
        vals = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    vals = tuple(float(v) for v in np.sort(vals))
    return Spectrum(values=vals, cluster_tol=cluster_tol, clusters=_cluster(vals, cluster_tol))


@dataclass(frozen=True)
class ExtremeEigs:
    least: float
    second_largest: float
    largest: float

    @property
    def lam(self) -> float:
        """max(second largest, |least|), the expander-style parameter."""
        return max(self.second_largest, abs(self.least))


def extreme_eigs(m: np.ndarray) -> ExtremeEigs:
    spec = eigenvalues(m)
    if len(spec.values) < 2:
        v = spec.values[0] if spec.values else 0.0
        return ExtremeEigs(least=v, second_largest=v, largest=v)
    return ExtremeEigs(
        least=spec.values[0], second_largest=spec.values[-2], largest=spec.values[-1]
    )


def er_cubic(q: int):
    """The cubic factor whose least root is the loopless polarity
    graph's least eigenvalue: x^3 - q*x^2 - 2*q*x + q^2 + q."""

    def f(x: float) -> float:
        return ((x - q) * x - 2 * q) * x + q * q + q

    return f


def cubic_least_root(q: int, tol: float = 1e-12) -> float:
    """Least root of the cubic by bisection on [-q, -sqrt(q)]."""
    f = er_cubic(q)
    lo, hi = -float(q), -math.sqrt(q)
    if not (f(lo) < 0 < f(hi)):
        raise ValueError(f"bisection bracket invalid for q={q}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def newton_least_root(q: int, iterations: int = 2) -> float:
    """Newton iterates on the cubic from -sqrt(q).

    The cubic is concave down left of -sqrt(q), so every iterate after
    the first step stays at or below the least root: the result is a
    certified lower bound on the loopless least eigenvalue.  Two
    iterations already land within ~1e-2 of the root.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    x = -math.sqrt(q)
    for _ in range(iterations):
        fx = ((x - q) * x - 2 * q) * x + q * q + q
        dfx = (3 * x - 2 * q) * x - 2 * q
        assert dfx != 0
        x -= fx / dfx
    return x


def _bisect(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo = f(lo)
    if flo == 0:
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _er_cubic_roots(q: int) -> list[float]:
    """All three real roots of the cubic, each bracketed and bisected."""
    f = er_cubic(q)
    rq = math.sqrt(q)
    r1 = cubic_least_root(q)
    # f(0) = q^2+q > 0 and f(sqrt(q)) = q(1 - sqrt(q)) < 0: a root between.
    r2 = _bisect(f, 0.0, rq)
    # f(q+1) = q+1 > 0: the third root sits in (sqrt(q), q+1].
    r3 = _bisect(f, rq, float(q + 1))
    return [r1, r2, r3]


def expected_er_spectrum(q: int, variant: str) -> list[float]:
    """Eigenvalues (with multiplicity, ascending) predicted by the
    factored characteristic polynomials of the two loopless variants."""
    rq = math.sqrt(q)
    e = (q * q - q - 2) // 2
    if variant == "deleted_absolute":
        roots = [float(q), 0.0] + [-1.0] * q + [rq] * e + [-rq] * e
    elif variant == "loopless":
        disc = math.sqrt(4 * q - 3)
        roots = _er_cubic_roots(q)
        roots += [(-1 + disc) / 2] * q + [(-1 - disc) / 2] * q
        roots += [rq] * e + [-rq] * e
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return sorted(roots)


def verify_er_charpoly(q: int, variant: str, tol: float = 1e-6) -> bool:
    """Compare the eigensolver output of a loopless polarity-graph
    variant against the factored characteristic polynomial's roots."""
    mode = {"deleted_absolute": "drop_absolute_vertices", "loopless": "drop_loops"}[variant]
    g = er_graph(q, mode)
    spec = eigenvalues(g.adjacency_matrix())
    expected = expected_er_spectrum(q, variant)
    if len(expected) != len(spec.values):
        return False
    return all(abs(a - b) <= tol for a, b in zip(spec.values, expected))

"""Exact maximum independent sets by branch and bound.

Loops never matter here: a looped vertex may always join an independent
set, so the search runs on the loop-stripped graph.  The solver branches
on a maximum-degree candidate vertex (include it or not) and prunes with
a greedy clique cover of the remaining candidates; an independent set
meets each clique at most once, so the cover size bounds what is left.
Candidate sets are Python-int bitmasks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphcore import Graph, is_independent

BRUTE_LIMIT = 25


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    witness: tuple[int, ...]
    optimal: bool  # False when the time budget expired; alpha is then a lower bound
    nodes: int
    elapsed: float


def _adjacency_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def _greedy_seed(adj: list[int], n: int) -> int:
    """Minimum-degree greedy independent set, as the starting incumbent."""
    chosen = 0
    candidates = (1 << n) - 1
    while candidates:
        best_v, best_deg = -1, n + 1
        m = candidates
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (adj[v] & candidates).bit_count()
            if d < best_deg:
                best_v, best_deg = v, d
        chosen |= 1 << best_v
        candidates &= ~(adj[best_v] | (1 << best_v))
    return chosen


def _clique_cover_size(candidates: int, adj: list[int], limit: int) -> int:
    """Greedy sequential clique cover of the candidate set.

    Vertices are taken in index order and placed into the first clique
    all of whose members are neighbors.  Stops early once the count
    reaches `limit`, since the caller only needs to compare against it.
    """
    common: list[int] = []  # per clique: vertices adjacent to every member
    count = 0
    m = candidates
    while m:
        v = (m & -m).bit_length() - 1
        bit = m & -m
        m &= m - 1
        for idx in range(count):
            if common[idx] & bit:
                common[idx] &= adj[v]
                break
        else:
            if count == limit:
                return limit + 1
            common.append(adj[v])
            count += 1
    return count


def max_independent_set(g: Graph, time_budget: float = 60.0) -> AlphaResult:
    """Branch-and-bound maximum independent set with a wall-clock budget.

    Deterministic in the returned alpha given the vertex order; when
    the budget expires, the incumbent is returned with optimal=False.
    """
    if time_budget <= 0:
        raise ValueError("time_budget must be positive")
    start = time.monotonic()
    deadline = start + time_budget
    n = g.n
    if n == 0:
        return AlphaResult(0, (), True, 0, 0.0)
    adj = _adjacency_masks(g)

    best_mask = _greedy_seed(adj, n)
    best = best_mask.bit_count()
    nodes = 0
    timed_out = False

    # Explicit stack of (chosen_mask, chosen_count, candidate_mask).
    stack = [(0, 0, (1 << n) - 1)]
    while stack:
        if nodes & 0x3FF == 0 and time.monotonic() > deadline:
            timed_out = True
            break
        chosen, size, cands = stack.pop()
        nodes += 1
        if not cands:
            if size > best:
                best, best_mask = size, chosen
            continue
        gap = best - size
        if cands.bit_count() <= gap:
            continue
        if _clique_cover_size(cands, adj, gap) <= gap:
            continue
        # Branch on a maximum-degree candidate (degree within the candidates).
        best_v, best_deg = -1, -1
        m = cands
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (adj[v] & cands).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        bit = 1 << best_v
        # Exclude branch first so the include branch is explored first.
        stack.append((chosen, size, cands & ~bit))
        stack.append((chosen | bit, size + 1, cands & ~(adj[best_v] | bit)))

    witness = tuple(v for v in range(n) if best_mask >> v & 1)
    assert is_independent(g, witness) and len(witness) == best
    return AlphaResult(
        alpha=best,
        witness=witness,
        optimal=not timed_out,
        nodes=nodes,
        elapsed=time.monotonic() - start,
    )


def brute_alpha(g: Graph) -> int:
    """Exhaustive reference: recursively enumerate all independent sets."""
    if g.n > BRUTE_LIMIT:
        raise TooLarge(f"brute_alpha is limited to n <= {BRUTE_LIMIT}, got {g.n}")
    adj = _adjacency_masks(g)
    n = g.n

    def explore(v: int, blocked: int, size: int) -> int:
        if v == n:
            return size
        skip = explore(v + 1, blocked, size)
        if blocked >> v & 1:
            return skip
        take = explore(v + 1, blocked | adj[v], size + 1)
        return max(skip, take)

    return explore(0, 0, 0)

"""Closed forms for the walk family of 1D cycles, plus component decomposition.

On the N-cycle with equal hop weights, t_q walk steps send node i to i + t_q
or i - t_q (mod N) with probability 1/2 each, so every family member is known
in closed form. This module is the analytic oracle the general pipeline is
checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooSmallError
from .graphs import TransitionMatrix

SUPPORT_TOL = 1e-9


@dataclass(frozen=True)
class CyclePrediction:
    """Counts and periods the closed form predicts for the N-cycle."""

    n: int
    distinct_count: int
    family_period: int
    unitary_period: int


def cycle_graph(n: int) -> TransitionMatrix:
    """Transition matrix of the n-cycle: jump to either neighbor with 1/2.

    n = 2 is rejected: the two neighbors coincide there, which the cycle
    formulas do not model.
    """
    if n < 3:
        raise TooSmallError(f"cycle formulas need n >= 3, got {n}")
    g = np.zeros((n, n))
    for i in range(n):
        g[(i + 1) % n, i] = 0.5
        g[(i - 1) % n, i] = 0.5
    return TransitionMatrix(g)


def cycle_semiclassical(n: int, t_q: int) -> TransitionMatrix:
    """Closed-form family member: node i links to i +/- t_q (mod n).

    When the two targets coincide (2 t_q divisible by n) the entry is an
    explicit 1 rather than a sum of halves, keeping the formula exact.
    """
    if n < 3:
        raise TooSmallError(f"cycle formulas need n >= 3, got {n}")
    if t_q < 1:
        raise ValueError("t_q must be >= 1")
    g = np.zeros((n, n))
    for i in range(n):
        up = (i + t_q) % n
        down = (i - t_q) % n
        if up == down:
            g[up, i] = 1.0
        else:
            g[up, i] = 0.5
            g[down, i] = 0.5
    return TransitionMatrix(g)


def cycle_predictions(n: int) -> CyclePrediction:
    """Distinct-member count and both periods for the n-cycle.

    floor(n/2) + 1 distinct members, family period n, and the walk operator
    itself repeats after n steps for even n but only after 2n for odd n.
    """
    if n < 3:
        raise TooSmallError(f"cycle formulas need n >= 3, got {n}")
    return CyclePrediction(
        n=n,
        distinct_count=n // 2 + 1,
        family_period=n,
        unitary_period=n if n % 2 == 0 else 2 * n,
    )


def components(m: TransitionMatrix, tol: float = SUPPORT_TOL) -> list[list[int]]:
    """Strongly connected components of the support digraph of m.

    Edge i -> j exists iff g[j, i] > tol. Components are returned sorted,
    each sorted internally. Computed by boolean reachability closure; dense
    is fine at the node counts this package targets.
    """
    n = m.n
    adj = (m.g.T > tol).astype(np.uint8)  # adj[i, j]: edge i -> j
    reach = adj | np.eye(n, dtype=np.uint8)
    while True:
        nxt = ((reach @ reach) > 0).astype(np.uint8) | reach
        if (nxt == reach).all():
            break
        reach = nxt
    mutual = (reach & reach.T).astype(bool)
    seen: set[int] = set()
    out: list[list[int]] = []
    for i in range(n):
        if i in seen:
            continue
        group = sorted(int(k) for k in np.flatnonzero(mutual[i]))
        seen.update(group)
        out.append(group)
    return out

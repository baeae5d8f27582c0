"""Vertex-isoperimetric machinery for even-degree hypercubes.

The minimum exterior-neighborhood size over all m-node subsets of Q_n has an
exact closed form built on the cascade (binomial) representation of m; this
module implements that representation, the resulting boundary formula, the
colex segments and lower shadows behind it, two independent oracles
(subset brute force and an explicit Hamming-ball segment), and the
inequality sweeps that certify the expansion condition used by the
connectivity results.

Subsets of {1..n} are encoded as frozensets when handed to callers; the
internal colex machinery runs on bitmasks (colex order on equal-size subsets
coincides with numeric order of their masks).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cube import InfeasibleError, check_dim, neighborhood, nodes_of


@dataclass(frozen=True)
class CascadeRepresentation:
    """Unique decomposition of 1 <= m <= 2^n - 1 over the binomial levels.

    m = sum(C(n, i) for i in r+1..n) + m_prime with 0 < m_prime <= C(n, r),
    and m_prime = sum(C(m_j, j) for (m_j, j) in terms) with the m_j strictly
    increasing in j and m_s >= s >= 1 at the lowest index s.
    """

    m: int
    n: int
    r: int
    m_prime: int
    terms: tuple[tuple[int, int], ...]  # (m_j, j) pairs, j descending from r

    @property
    def s(self) -> int:
        return self.terms[-1][1]

    def reconstruct(self) -> int:
        """Re-sum the representation; equals m for every valid input."""
        top = sum(comb(self.n, i) for i in range(self.r + 1, self.n + 1))
        return top + sum(comb(mj, j) for mj, j in self.terms)


def _check_m_range(m: int, n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"ambient dimension must be even and >= 2, got {n}")
    if not 1 <= m <= (1 << n) - 1:
        raise ValueError(f"m must be in 1..2^{n}-1, got {m}")


def binomial_cascade(m_prime: int, r: int) -> tuple[tuple[int, int], ...]:
    """Greedy binomial decomposition of m_prime starting at index r.

    Repeatedly takes the largest m_j with C(m_j, j) <= residual, stepping j
    down by one, until the residual vanishes.  Terminates with j >= 1 since
    C(y, 1) = y matches any positive residual exactly.
    """
    if m_prime < 1:
        raise ValueError(f"decomposition needs a positive integer, got {m_prime}")
    if r < 1:
        raise ValueError(f"top index must be positive, got {r}")
    terms = []
    residual = m_prime
    j = r
    while True:
        y = j
        while comb(y + 1, j) <= residual:
            y += 1
        terms.append((y, j))
        residual -= comb(y, j)
        if residual == 0:
            return tuple(terms)
        j -= 1


def cascade_representation(m: int, n: int) -> CascadeRepresentation:
    """The unique cascade representation of m over the levels of Q_n.

    r is the largest index with m <= sum(C(n, i) for i in r..n); the excess
    over the levels above r is then decomposed greedily from index r down.
    """
    _check_m_range(m, n)
    acc = 0
    for x in range(n, 0, -1):
        acc += comb(n, x)
        if acc >= m:
            r = x
            m_prime = m - (acc - comb(n, x))
            break
    return CascadeRepresentation(m, n, r, m_prime, binomial_cascade(m_prime, r))


def harper_boundary(m: int, n: int) -> int:
    """Minimum exterior-neighborhood size over all m-node subsets of Q_n.

    Evaluates Harper's formula C(n, r) - m' + sum C(m_j, j-1) on the cascade
    representation; the minimum is attained by Hamming-ball segments.
    """
    rep = cascade_representation(m, n)
    return comb(n, rep.r) - rep.m_prime + sum(comb(mj, j - 1) for mj, j in rep.terms)


def small_set_boundary(m: int, k: int) -> int:
    """Closed form 1 + m(4k - m - 1)/2 for the minimum boundary, m <= 2k + 1.

    Always integral: m and 4k - m - 1 have opposite parity.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not 1 <= m <= 2 * k + 1:
        raise ValueError(f"closed form applies for m in 1..{2 * k + 1}, got {m}")
    return 1 + m * (4 * k - m - 1) // 2


def min_boundary_bruteforce(m: int, d: int) -> int:
    """Exact minimum of |N(S)| over all m-subsets, by full enumeration (d <= 4)."""
    check_dim(d)
    if d > 4:
        raise InfeasibleError(f"subset enumeration supported for d <= 4, got {d}")
    n_nodes = 1 << d
    if not 1 <= m <= n_nodes - 1:
        raise ValueError(f"m must be in 1..{n_nodes - 1}, got {m}")
    best = n_nodes
    for combo in combinations(range(n_nodes), m):
        members = 0
        for v in combo:
            members |= 1 << v
        size = neighborhood(members, d).bit_count()
        if size < best:
            best = size
    return best


def _masks_of_weight(weight: int, d: int):
    """Masks with ``weight`` set bits among d, ascending (Gosper's hack)."""
    if weight == 0:
        yield 0
        return
    limit = 1 << d
    v = (1 << weight) - 1
    while v < limit:
        yield v
        low = v & -v
        ripple = v + low
        v = (((ripple ^ v) >> 2) // low) | ripple


def simplicial_order(d: int):
    """Yield the nodes of Q_d in simplicial order.

    Descending Hamming weight, colex (numeric) order within each weight
    level; initial segments of this order are the Hamming balls that
    minimize the exterior neighborhood.
    """
    check_dim(d)
    for weight in range(d, -1, -1):
        yield from _masks_of_weight(weight, d)


def simplicial_segment(m: int, d: int) -> int:
    """Node bitmask of the first m nodes in simplicial order."""
    if not 1 <= m <= (1 << d) - 1:
        raise ValueError(f"m must be in 1..2^{d}-1, got {m}")
    members = 0
    order = simplicial_order(d)
    for _ in range(m):
        members |= 1 << next(order)
    return members


def hamming_ball_boundary(m: int, d: int) -> int:
    """|N(S)| for the simplicial segment S of size m; coincides with
    ``harper_boundary`` on even d."""
    return neighborhood(simplicial_segment(m, d), d).bit_count()


def colex_initial_segment(m_prime: int, r: int, n: int) -> list[frozenset[int]]:
    """The first m_prime r-element subsets of {1..n} in colexicographic order.

    Colex compares by the largest differing element, so the segment is just
    the m_prime numerically smallest r-bit masks, decoded to subsets.
    """
    if not 0 <= r <= n:
        raise ValueError(f"subset size {r} out of range for ground set of {n}")
    if not 1 <= m_prime <= comb(n, r):
        raise ValueError(f"segment length must be in 1..C({n},{r}), got {m_prime}")
    segment = []
    for mask in _masks_of_weight(r, n):
        segment.append(frozenset(i + 1 for i in nodes_of(mask)))
        if len(segment) == m_prime:
            return segment
    raise AssertionError("unreachable: segment length within level size")


def lower_shadow(family) -> set[frozenset[int]]:
    """All (i-1)-element subsets contained in some member of an i-level family."""
    members = list(family)
    if not members:
        return set()
    level = len(members[0])
    if level < 1:
        raise ValueError("shadow needs subsets of size at least one")
    if any(len(a) != level for a in members):
        raise ValueError("family members must share a common level")
    return {a - {x} for a in members for x in a}


def shadow_size(m_prime: int, r: int, n: int) -> int:
    """Size of the lower shadow of the first m_prime colex r-subsets of {1..n}.

    Equals sum C(m_j, j-1) over the cascade decomposition of m_prime at
    index r (the Kruskal-Katona value, exact for initial segments).
    """
    if not 1 <= m_prime <= comb(n, r):
        raise ValueError(f"segment length must be in 1..C({n},{r}), got {m_prime}")
    return sum(comb(mj, j - 1) for mj, j in binomial_cascade(m_prime, r))


def shadow_exceeds_segment(m_prime: int, r: int, k: int) -> bool:
    """Whether the colex-segment shadow at level r strictly exceeds the segment.

    Requires r >= k + 1 in Q_2k; in that regime each r-set has r neighbors
    one level down while each (r-1)-set has at most 2k - r + 1 < r neighbors
    up, so the result should always be True.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if r < k + 1:
        raise ValueError(f"level must satisfy r >= k+1 = {k + 1}, got {r}")
    n = 2 * k
    if not 1 <= m_prime <= comb(n, r):
        raise ValueError(f"segment length must be in 1..C({n},{r}), got {m_prime}")
    return shadow_size(m_prime, r, n) > m_prime


def check_expansion_condition(k: int) -> bool:
    """Every m-set boundary in Q_2k beats min(k^2 - 1, (k-1)(m+1)).

    Scans m up to half the node count, the only range the connectivity
    argument needs (the smaller cut side never exceeds it).
    """
    if not 1 <= k <= 8:
        raise InfeasibleError(f"expansion sweep supported for k <= 8, got {k}")
    n = 2 * k
    for m in range(1, (1 << (n - 1)) + 1):
        if harper_boundary(m, n) <= min(k * k - 1, (k - 1) * (m + 1)):
            return False
    return True


def verify_boundary_inequalities(k: int) -> bool:
    """Check the two-regime boundary bounds and their closed-form identities.

    (a) For m <= k and for k <= m <= 2k+1, twice the slack of the closed
    form over the active bound matches its factored rewrite exactly.
    (b) The closed form beats min((k-1)(m+1), (k-1)(k+1)) for m <= 2k+1.
    (c) The cascade formula beats (k-1)(k+1) for 2k+2 <= m <= 2^(2k-1).
    """
    if not 1 <= k <= 6:
        raise InfeasibleError(f"inequality sweep supported for k <= 6, got {k}")
    for m in range(1, k + 1):
        slack2 = 2 + m * (4 * k - m - 1) - 2 * (k - 1) * (m + 1)
        if slack2 != m * (k - m) + (k + 1) * (m - 2) + 6:
            return False
    for m in range(k, 2 * k + 2):
        slack2 = 2 + m * (4 * k - m - 1) - 2 * (k - 1) * (k + 1)
        if slack2 != (2 * k + 1 - m) * (m - k + 1) + (m - 1) * (k - 1) + 2:
            return False
    for m in range(1, 2 * k + 2):
        if small_set_boundary(m, k) <= min((k - 1) * (m + 1), (k - 1) * (k + 1)):
            return False
    for m in range(2 * k + 2, (1 << (2 * k - 1)) + 1):
        if harper_boundary(m, 2 * k) <= (k - 1) * (k + 1):
            return False
    return True

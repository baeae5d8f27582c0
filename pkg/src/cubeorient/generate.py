"""Orientation generators for hypercubes.

Covers the Euler-tour construction of Eulerian orientations, a seeded
cycle-reversal sampler (every reversal of a directed cycle preserves the
in/out balance, so the walk stays inside the Eulerian orientations),
exhaustive enumeration with degree pruning at small dimension, the recursive
strongly-connected construction on even-degree cubes, and a search for
smooth orientations that fail strong connectivity on odd-degree cubes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .connectivity import strongly_connected, strongly_connected_masks
from .cube import (
    InfeasibleError,
    NotEulerianError,
    Orientation,
    check_dim,
    edge_count,
    edge_rank,
    full_node_mask,
    in_neighbor_masks,
    is_smooth,
    out_neighbor_masks,
)


@dataclass(frozen=True)
class SamplerConfig:
    """Seed and move budget for the cycle-reversal samplers.

    ``steps`` counts single cycle-reversal moves; None resolves to ten times
    the edge count of the cube being sampled.
    """

    seed: int = 0
    steps: int | None = None

    def __post_init__(self):
        if self.steps is not None and self.steps < 0:
            raise ValueError("steps must be nonnegative")


def _resolve_steps(cfg: SamplerConfig, d: int) -> int:
    return 10 * edge_count(d) if cfg.steps is None else cfg.steps


def _euler_circuit_arcs(d: int, parallel_matching: bool) -> list[tuple[int, int, int]]:
    """Arcs of an Euler circuit, as (tail, head, slot) triples.

    Hierholzer with an explicit stack; slots 0..d-1 are the real dimensions
    and slot d, present only with ``parallel_matching``, is a second copy of
    every dimension-0 edge (used to even out odd degrees).  Each stack entry
    pops exactly when its pusher is back on top, so the arc pusher -> popped
    is always a real traversal of the recorded slot.
    """
    n = 1 << d
    slots = d + 1 if parallel_matching else d
    unused = [(1 << slots) - 1] * n
    stack: list[tuple[int, int]] = [(0, -1)]
    arcs: list[tuple[int, int, int]] = []
    while stack:
        v, _ = stack[-1]
        remaining = unused[v]
        if remaining:
            slot = (remaining & -remaining).bit_length() - 1
            dim = 0 if slot == d else slot
            w = v ^ (1 << dim)
            unused[v] &= ~(1 << slot)
            unused[w] &= ~(1 << slot)
            stack.append((w, slot))
        else:
            _, slot = stack.pop()
            if stack:
                arcs.append((stack[-1][0], v, slot))
    return arcs


def _bits_from_arcs(arcs, d: int) -> int:
    bits = 0
    for tail, _head, slot in arcs:
        if slot >= d:
            continue  # virtual parallel edge
        if not tail >> slot & 1:
            bits |= 1 << edge_rank(tail, slot, d)
    return bits


def euler_tour_orientation(d: int) -> Orientation:
    """Eulerian orientation obtained by directing the edges along an Euler tour."""
    check_dim(d)
    if d % 2:
        raise NotEulerianError(f"Q_{d} has odd degree, no Eulerian orientation exists")
    return Orientation(d, _bits_from_arcs(_euler_circuit_arcs(d, False), d))


def smooth_orientation(d: int) -> Orientation:
    """A deterministic smooth orientation of Q_d, any d.

    For even d this is the Euler-tour orientation.  For odd d, doubling the
    dimension-0 perfect matching makes every degree even; touring the
    multigraph and dropping the virtual copies leaves each node with an
    in/out imbalance of exactly one.
    """
    check_dim(d)
    if d % 2 == 0:
        return euler_tour_orientation(d)
    return Orientation(d, _bits_from_arcs(_euler_circuit_arcs(d, True), d))


def _reversal_move(out_nb: list[int], in_nb: list[int] | None, rng: random.Random, n: int) -> None:
    """Reverse one random directed cycle in place.

    A random walk along out-arcs stops at the first repeated node; the
    discovered cycle is reversed arc by arc.  Every node on the cycle loses
    one outgoing and one incoming arc and regains one of each, so all
    degrees are preserved.
    """
    v = rng.randrange(n)
    pos = {v: 0}
    path = [v]
    while True:
        m = out_nb[v]
        j = rng.randrange(m.bit_count())
        while j:
            m &= m - 1
            j -= 1
        w = (m & -m).bit_length() - 1
        p = pos.get(w)
        if p is None:
            pos[w] = len(path)
            path.append(w)
            v = w
            continue
        cycle = path[p:]
        cycle.append(w)
        if in_nb is None:
            for a, b in zip(cycle, cycle[1:]):
                out_nb[a] ^= 1 << b
                out_nb[b] |= 1 << a
        else:
            for a, b in zip(cycle, cycle[1:]):
                out_nb[a] ^= 1 << b
                out_nb[b] |= 1 << a
                in_nb[b] ^= 1 << a
                in_nb[a] |= 1 << b
        return


def _orientation_from_out_masks(d: int, out_nb: list[int]) -> Orientation:
    n = 1 << d
    bits = 0
    r = 0
    for base in range(n):
        nb = out_nb[base]
        for i in range(d):
            if base >> i & 1:
                continue
            if nb >> (base ^ (1 << i)) & 1:
                bits |= 1 << r
            r += 1
    return Orientation(d, bits)


def sample_eulerian_orientations(
    d: int, count: int, cfg: SamplerConfig | None = None
) -> Iterator[Orientation]:
    """Stream of seeded pseudo-random Eulerian orientations.

    One chain started from the Euler-tour orientation, emitting a sample
    after every block of ``cfg.steps`` cycle reversals.  Deterministic for a
    fixed (d, seed, steps); no uniformity of the distribution is claimed.
    """
    cfg = cfg or SamplerConfig()
    steps = _resolve_steps(cfg, d)
    rng = random.Random(cfg.seed)
    out_nb = out_neighbor_masks(euler_tour_orientation(d))
    n = 1 << d
    for _ in range(count):
        for _ in range(steps):
            _reversal_move(out_nb, None, rng, n)
        yield _orientation_from_out_masks(d, out_nb)


def random_eulerian_orientation(d: int, cfg: SamplerConfig | None = None) -> Orientation:
    """First sample of the cycle-reversal chain (steps=0 reproduces the tour)."""
    return next(sample_eulerian_orientations(d, 1, cfg))


def enumerate_eulerian_orientations(
    d: int,
    visitor: Optional[Callable[[Orientation], None]] = None,
    edge_order: str = "base-major",
) -> int:
    """Visit every Eulerian orientation of Q_d exactly once; return the count.

    Depth-first assignment of one direction per edge, pruned by capping both
    the in- and out-degree of every node at d/2 (with in + out + unassigned
    equal to d at each node, the caps are exactly the feasibility condition).
    Two fixed edge orders are available so independent runs can cross-check
    the count: "base-major" follows the canonical rank order, "dim-major"
    sorts by dimension first.
    """
    check_dim(d)
    if d % 2:
        raise NotEulerianError(f"Q_{d} has odd degree, no Eulerian orientation exists")
    if d > 4:
        raise InfeasibleError(f"exhaustive enumeration supported for d <= 4, got {d}")
    n = 1 << d
    half = d // 2
    edges = []
    for base in range(n):
        for i in range(d):
            if not base >> i & 1:
                edges.append((base, base ^ (1 << i), edge_rank(base, i, d), i))
    if edge_order == "dim-major":
        edges.sort(key=lambda e: (e[3], e[0]))
    elif edge_order != "base-major":
        raise ValueError(f"unknown edge order {edge_order!r}")

    total = len(edges)
    outdeg = [0] * n
    indeg = [0] * n
    count = 0

    def assign(idx: int, bits: int) -> None:
        nonlocal count
        if idx == total:
            count += 1
            if visitor is not None:
                visitor(Orientation(d, bits))
            return
        base, w, rank, _ = edges[idx]
        if outdeg[base] < half and indeg[w] < half:
            outdeg[base] += 1
            indeg[w] += 1
            assign(idx + 1, bits | (1 << rank))
            outdeg[base] -= 1
            indeg[w] -= 1
        if indeg[base] < half and outdeg[w] < half:
            indeg[base] += 1
            outdeg[w] += 1
            assign(idx + 1, bits)
            indeg[base] -= 1
            outdeg[w] -= 1

    assign(0, 0)
    return count


def inductive_orientation(k: int) -> Orientation:
    """Eulerian orientation of Q_2k that is strongly k-node connected.

    Built recursively: the base case directs the 4-cycle 00 -> 01 -> 11 ->
    10 -> 00.  The step views Q_(2k) as four copies of Q_(2k-2) selected by
    the two highest label bits, reuses the previous level inside each copy,
    and directs each of the 2^(2k-2) connecting 4-cycles the same way
    (00 -> 01 -> 11 -> 10 on the top bits).  Every node then gains exactly
    one in- and one out-arc on top of the balanced copy orientation.
    """
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= 5:
        raise ValueError(f"construction supported for k in 1..5, got {k!r}")
    if k == 1:
        return Orientation(2, 0b0101)
    prev = inductive_orientation(k - 1)
    dp = prev.d
    d = dp + 2
    n_prev = 1 << dp
    lo = 1 << dp
    hi = 1 << (dp + 1)
    bits = 0
    for x in range(n_prev):
        for i in range(dp):
            if x >> i & 1:
                continue
            if prev.direction(x, i):
                for c in (0, lo, hi, lo | hi):
                    bits |= 1 << edge_rank(c | x, i, d)
    for x in range(n_prev):
        bits |= 1 << edge_rank(x, dp, d)           # (00,x) -> (01,x)
        bits |= 1 << edge_rank(lo | x, dp + 1, d)  # (01,x) -> (11,x)
        # (11,x) -> (10,x) and (10,x) -> (00,x) point into their bases: bits stay 0
    return Orientation(d, bits)


def find_smooth_not_strongly_connected(
    d: int, cfg: SamplerConfig | None = None
) -> Orientation | None:
    """Search for a smooth orientation whose digraph is not strongly connected.

    Exhaustive over all orientations for d <= 3; for larger d, a seeded
    cycle-reversal walk over smooth orientations checks connectivity after
    every move and gives up (returns None) once the move budget is spent.
    """
    check_dim(d)
    if d <= 3:
        for bits in range(1 << edge_count(d)):
            o = Orientation(d, bits)
            if is_smooth(o) and not strongly_connected(o):
                return o
        return None
    cfg = cfg or SamplerConfig()
    steps = _resolve_steps(cfg, d)
    rng = random.Random(cfg.seed)
    seed_o = smooth_orientation(d)
    out_nb = out_neighbor_masks(seed_o)
    in_nb = in_neighbor_masks(seed_o)
    n = 1 << d
    alive = full_node_mask(d)
    if not strongly_connected_masks(out_nb, in_nb, alive):
        return seed_o
    for _ in range(steps):
        _reversal_move(out_nb, in_nb, rng, n)
        if not strongly_connected_masks(out_nb, in_nb, alive):
            return _orientation_from_out_masks(d, out_nb)
    return None

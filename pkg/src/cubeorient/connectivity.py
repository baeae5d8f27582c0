"""Strong-connectivity decision procedures for oriented hypercubes.

The primary procedure is exhaustive deletion: a digraph is strongly k-node
connected when it keeps a single strongly connected component after removing
any set of at most k-1 nodes.  A vertex-capacity max-flow (node splitting)
routine provides the independent Menger cross-check, and doubles as the
undirected node-connectivity computation.

Reachability runs on successor/predecessor bitmasks, so one check on Q_6
is a few dozen word operations rather than a full graph traversal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .cube import (
    InfeasibleError,
    Orientation,
    check_dim,
    full_node_mask,
    in_neighbor_masks,
    neighbors,
    nodes_of,
    out_neighbor_masks,
)


@dataclass(frozen=True)
class ConnectivityReport:
    """Verdict of a strong k-connectivity check, with a witness on failure.

    When ``verdict`` is False, ``witness_deleted`` is the removed node set Z
    (|Z| <= k-1) and ``witness_side`` is a set S such that every arc between
    S and the rest of the surviving graph crosses in one direction only.
    Both are node bitmasks; they are None on a True verdict.
    """

    verdict: bool
    k: int
    witness_deleted: int | None = None
    witness_side: int | None = None

    def to_json(self) -> dict:
        doc: dict = {"verdict": self.verdict, "k": self.k}
        if not self.verdict:
            doc["witness_deleted"] = nodes_of(self.witness_deleted)
            doc["witness_side"] = nodes_of(self.witness_side)
        return doc


def _closure(adj: list[int], alive: int, seed: int) -> int:
    """Reachable set from ``seed`` restricted to ``alive``, following adj masks."""
    reached = seed
    frontier = seed
    while frontier:
        acc = 0
        f = frontier
        while f:
            low = f & -f
            acc |= adj[low.bit_length() - 1]
            f ^= low
        frontier = acc & alive & ~reached
        reached |= frontier
    return reached


def strongly_connected_masks(out_masks: list[int], in_masks: list[int], alive: int) -> bool:
    """Strong connectivity of the subgraph induced on ``alive``.

    One forward and one backward closure from the lowest-index survivor.
    """
    root = alive & -alive
    if _closure(out_masks, alive, root) != alive:
        return False
    return _closure(in_masks, alive, root) == alive


def strongly_connected(o: Orientation, deleted: int = 0) -> bool:
    """True iff the digraph induced on the surviving nodes has one SCC."""
    alive = full_node_mask(o.d) & ~deleted
    if alive == 0:
        raise ValueError("at least one node must survive the deletion")
    return strongly_connected_masks(out_neighbor_masks(o), in_neighbor_masks(o), alive)


def _one_way_side(out_masks: list[int], in_masks: list[int], alive: int) -> int:
    """A side S of a one-directional cut in a non-strongly-connected subgraph.

    If the forward closure R from the lowest survivor misses nodes, no arc
    leaves R, so every cut arc leaves S = alive - R.  Otherwise the backward
    closure B is incomplete and no arc enters B, so every cut arc leaves S = B.
    """
    root = alive & -alive
    forward = _closure(out_masks, alive, root)
    if forward != alive:
        return alive & ~forward
    backward = _closure(in_masks, alive, root)
    assert backward != alive, "witness requested for a strongly connected graph"
    return backward


def is_strongly_k_node_connected(o: Orientation, k: int) -> ConnectivityReport:
    """Exhaustive-deletion check of strong k-node connectivity.

    Deletion sets are scanned in lowest-index lexicographic order by
    increasing size, so the witness on a False verdict is deterministic.
    """
    if k < 1:
        raise ValueError(f"connectivity level must be positive, got {k}")
    n = 1 << o.d
    if n < k + 1:
        raise ValueError(f"need at least {k + 1} nodes to test k={k}, have {n}")
    out_masks = out_neighbor_masks(o)
    in_masks = in_neighbor_masks(o)
    full = full_node_mask(o.d)
    for size in range(k):
        for combo in combinations(range(n), size):
            zmask = 0
            for v in combo:
                zmask |= 1 << v
            alive = full & ~zmask
            if not strongly_connected_masks(out_masks, in_masks, alive):
                side = _one_way_side(out_masks, in_masks, alive)
                return ConnectivityReport(False, k, zmask, side)
    return ConnectivityReport(True, k)


# ---------------------------------------------------------------------------
# Menger cross-check: vertex-capacity max-flow via node splitting.


def _vertex_capacity_maxflow(out_masks: list[int], n: int, s: int, t: int):
    """Max internally node-disjoint s -> t paths, plus a separating node set.

    Every node v is split into v_in = 2v and v_out = 2v + 1 joined by a
    unit-capacity arc (omitted for s and t); every arc u -> w becomes
    u_out -> w_in with capacity n, so only the split arcs bind and every
    saturated cut crosses split arcs alone.  A direct s -> t arc gets
    capacity 1 instead (it is the one path with no internal node).  Returns
    (flow, cut_mask); the cut is None when the arc s -> t exists, in which
    case no separating node set does.
    """
    size = 2 * n
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(size)]

    def add(u, x, capacity):
        cap[(u, x)] = capacity
        cap.setdefault((x, u), 0)
        adj[u].append(x)
        adj[x].append(u)

    for v in range(n):
        if v != s and v != t:
            add(2 * v, 2 * v + 1, 1)
    for v in range(n):
        for w in nodes_of(out_masks[v]):
            add(2 * v + 1, 2 * w, 1 if (v, w) == (s, t) else n)

    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {src: -1}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == sink:
                break
            for x in adj[u]:
                if x not in prev and cap[(u, x)] > 0:
                    prev[x] = u
                    queue.append(x)
        if sink not in prev:
            break
        x = sink
        while x != src:
            u = prev[x]
            cap[(u, x)] -= 1
            cap[(x, u)] += 1
            x = u
        flow += 1

    if out_masks[s] >> t & 1:
        return flow, None

    reach = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for x in adj[u]:
            if x not in reach and cap[(u, x)] > 0:
                reach.add(x)
                queue.append(x)
    cut = 0
    for v in range(n):
        if v != s and v != t and 2 * v in reach and 2 * v + 1 not in reach:
            cut |= 1 << v
    return flow, cut


def min_vertex_cut(o: Orientation, s: int, t: int) -> tuple[int, int | None]:
    """Size of a minimum s-t separating node set, with the set itself.

    The size equals the maximum number of internally node-disjoint directed
    s -> t paths.  When the arc s -> t is present no separating set exists,
    so the cut component is None.
    """
    if s == t:
        raise ValueError("source and target must differ")
    n = 1 << o.d
    if not (0 <= s < n and 0 <= t < n):
        raise ValueError("node id out of range")
    return _vertex_capacity_maxflow(out_neighbor_masks(o), n, s, t)


def menger_strong_connectivity(o: Orientation) -> int:
    """Strong node connectivity by Menger: min local connectivity over all
    ordered pairs with no direct arc."""
    n = 1 << o.d
    out_masks = out_neighbor_masks(o)
    best = n - 1
    for s in range(n):
        for t in range(n):
            if s == t or out_masks[s] >> t & 1:
                continue
            flow, _ = _vertex_capacity_maxflow(out_masks, n, s, t)
            best = min(best, flow)
            if best == 0:
                return 0
    return best


def undirected_node_connectivity(d: int) -> int:
    """Node connectivity of the undirected hypercube Q_d.

    Runs the vertex-capacity max-flow on the symmetric digraph.  XOR
    translation is an automorphism carrying any node pair onto a pair that
    contains node 0, so scanning targets of node 0 covers every pair.
    """
    check_dim(d)
    if d > 6:
        raise InfeasibleError(f"node connectivity supported for d <= 6, got {d}")
    n = 1 << d
    if d == 1:
        return 1  # complete graph on two nodes
    sym_masks = [neighbors(v, d) for v in range(n)]
    best = n - 1
    for t in range(1, n):
        if sym_masks[0] >> t & 1:
            continue
        flow, _ = _vertex_capacity_maxflow(sym_masks, n, 0, t)
        best = min(best, flow)
    return best

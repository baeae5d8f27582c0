"""Hypercube graphs, orientations of their edges, and bit-exact serialization.

Nodes of the d-dimensional hypercube are the integers 0 .. 2^d - 1, read as
d-bit labels; flipping bit i of a label crosses dimension i, so adjacency is
a single XOR.  Node sets are plain int bitmasks over node ids (bit v is set
exactly when node v belongs to the set), which keeps neighborhood and cut
queries down to a handful of word operations.

An orientation assigns one direction bit per edge.  Edges are named
canonically by the endpoint whose flipped bit is 0, and serialized in the
fixed rank order defined by ``edge_rank``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

MAX_DIM = 20  # 2^20 nodes is the largest graph the search modules handle


class NotEulerianError(ValueError):
    """An Eulerian orientation was requested for an odd-degree hypercube."""


class InfeasibleError(ValueError):
    """The request exceeds the supported exhaustive-search range."""


def check_dim(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or not 1 <= d <= MAX_DIM:
        raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {d!r}")


def node_count(d: int) -> int:
    return 1 << d


def edge_count(d: int) -> int:
    return d << (d - 1)


def full_node_mask(d: int) -> int:
    """Bitmask containing every node of Q_d."""
    return (1 << (1 << d)) - 1


def node_mask(nodes) -> int:
    """Bitmask for an iterable of node ids."""
    mask = 0
    for v in nodes:
        mask |= 1 << v
    return mask


def nodes_of(mask: int) -> list[int]:
    """Sorted list of node ids contained in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_node(v: int, d: int) -> None:
    if not 0 <= v < (1 << d):
        raise ValueError(f"node id {v} out of range for dimension {d}")


def _check_node_set(mask: int, d: int) -> None:
    if mask < 0 or mask.bit_length() > (1 << d):
        raise ValueError(f"node set {mask:#x} out of range for dimension {d}")


def neighbors(v: int, d: int) -> int:
    """Bitmask of the d nodes adjacent to v (one single-bit flip per dimension)."""
    check_dim(d)
    _check_node(v, d)
    mask = 0
    for i in range(d):
        mask |= 1 << (v ^ (1 << i))
    return mask


@lru_cache(maxsize=None)
def _dimension_masks(d: int) -> tuple[int, ...]:
    """For each dimension i, the bitmask of node ids whose bit i is 0."""
    n = 1 << d
    masks = []
    for i in range(d):
        step = 1 << i
        period = step << 1
        reps = n // period
        block = (1 << step) - 1
        masks.append(((1 << (reps * period)) - 1) // ((1 << period) - 1) * block)
    return tuple(masks)


def neighborhood(members: int, d: int) -> int:
    """Exterior neighborhood: nodes outside the set adjacent to some member.

    Computed dimension by dimension: shifting the characteristic bitmask by
    2^i moves every node across dimension i at once.
    """
    check_dim(d)
    _check_node_set(members, d)
    grown = 0
    for i, zeros in enumerate(_dimension_masks(d)):
        step = 1 << i
        grown |= ((members & zeros) << step) | ((members >> step) & zeros)
    return grown & ~members


@lru_cache(maxsize=None)
def _edge_rank_offsets(d: int) -> tuple[int, ...]:
    """offsets[b] = number of canonical edges whose base precedes b."""
    n = 1 << d
    offsets = [0] * n
    for b in range(n - 1):
        offsets[b + 1] = offsets[b] + d - b.bit_count()
    return tuple(offsets)


def edge_rank(base: int, dim: int, d: int) -> int:
    """Rank of the edge (base, dim) in canonical order.

    Canonical edges are sorted by base ascending, then dim ascending, where
    the base is the endpoint whose bit ``dim`` is 0.  Exactly d * 2^(d-1)
    ranks exist.
    """
    if not 0 <= dim < d:
        raise ValueError(f"dimension index {dim} out of range for d={d}")
    _check_node(base, d)
    if base >> dim & 1:
        raise ValueError(f"edge base {base} must have bit {dim} clear")
    below = base & ((1 << dim) - 1)
    return _edge_rank_offsets(d)[base] + dim - below.bit_count()


@dataclass(frozen=True)
class Orientation:
    """Direction assignment for every edge of Q_d.

    Bit r of ``bits`` holds the direction of the rank-r canonical edge
    (base, dim): 1 sends the arc base -> base ^ (1 << dim), 0 the reverse.
    Immutable; all derived queries are pure.
    """

    d: int
    bits: int

    def __post_init__(self):
        check_dim(self.d)
        if not 0 <= self.bits < (1 << edge_count(self.d)):
            raise ValueError("orientation bits out of range for dimension")

    def direction(self, base: int, dim: int) -> int:
        return self.bits >> edge_rank(base, dim, self.d) & 1

    def arc_leaves(self, v: int, dim: int) -> bool:
        """True iff the dimension-dim edge at v is oriented away from v."""
        base = v & ~(1 << dim)
        return self.direction(base, dim) != (v >> dim & 1)

    def out_neighbors(self, v: int) -> int:
        """Bitmask of nodes w with an arc v -> w."""
        _check_node(v, self.d)
        mask = 0
        for i in range(self.d):
            if self.arc_leaves(v, i):
                mask |= 1 << (v ^ (1 << i))
        return mask

    def out_degree(self, v: int) -> int:
        return self.out_neighbors(v).bit_count()

    def in_degree(self, v: int) -> int:
        return self.d - self.out_degree(v)


def out_degrees(o: Orientation) -> list[int]:
    """Out-degree of every node, in one pass over the edge ranks."""
    d, bits = o.d, o.bits
    n = 1 << d
    deg = [0] * n
    r = 0
    for base in range(n):
        for i in range(d):
            if base >> i & 1:
                continue
            if bits >> r & 1:
                deg[base] += 1
            else:
                deg[base ^ (1 << i)] += 1
            r += 1
    return deg


def out_neighbor_masks(o: Orientation) -> list[int]:
    """Successor bitmask per node (arc v -> w puts bit w in entry v)."""
    d, bits = o.d, o.bits
    n = 1 << d
    masks = [0] * n
    r = 0
    for base in range(n):
        for i in range(d):
            if base >> i & 1:
                continue
            w = base ^ (1 << i)
            if bits >> r & 1:
                masks[base] |= 1 << w
            else:
                masks[w] |= 1 << base
            r += 1
    return masks


def in_neighbor_masks(o: Orientation) -> list[int]:
    """Predecessor bitmask per node (complement of the successors among neighbors)."""
    outs = out_neighbor_masks(o)
    return [neighbors(v, o.d) ^ outs[v] for v in range(1 << o.d)]


def is_smooth(o: Orientation) -> bool:
    """True iff indegree and outdegree differ by at most one at every node."""
    d = o.d
    return all(abs(d - 2 * deg) <= 1 for deg in out_degrees(o))


def is_eulerian_orientation(o: Orientation) -> bool:
    """True iff indegree equals outdegree at every node (impossible for odd d)."""
    d = o.d
    if d % 2:
        return False
    half = d // 2
    return all(deg == half for deg in out_degrees(o))


def cut_arcs(members: int, o: Orientation) -> tuple[int, int]:
    """Count arcs leaving and entering a nonempty proper node set.

    Returns (out_count, in_count); the two sum to the undirected cut size.
    """
    d = o.d
    _check_node_set(members, d)
    if members == 0 or members == full_node_mask(d):
        raise ValueError("cut requires a nonempty proper node subset")
    out_c = in_c = 0
    for v in nodes_of(members):
        for i in range(d):
            if members >> (v ^ (1 << i)) & 1:
                continue
            if o.arc_leaves(v, i):
                out_c += 1
            else:
                in_c += 1
    return out_c, in_c


# ---------------------------------------------------------------------------
# Serialization: CUBEORIENT v1
#
# The bit stream enumerates edges in canonical rank order; bit r is stored
# MSB-first within byte r // 8.  Files carry one header line and one line of
# lowercase hex.


def serialize(o: Orientation) -> bytes:
    """Pack the direction bits into ceil(E / 8) bytes, rank order, MSB-first."""
    e = edge_count(o.d)
    buf = bytearray((e + 7) // 8)
    bits = o.bits
    for r in range(e):
        if bits >> r & 1:
            buf[r >> 3] |= 0x80 >> (r & 7)
    return bytes(buf)


def deserialize(data: bytes, d: int) -> Orientation:
    """Inverse of ``serialize``; rejects wrong lengths and nonzero padding."""
    check_dim(d)
    e = edge_count(d)
    expected = (e + 7) // 8
    if len(data) != expected:
        raise ValueError(f"expected {expected} bytes for dimension {d}, got {len(data)}")
    bits = 0
    for r in range(e):
        if data[r >> 3] >> (7 - (r & 7)) & 1:
            bits |= 1 << r
    pad = 8 * expected - e
    if pad and data[-1] & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in orientation stream")
    return Orientation(d, bits)


_HEADER_RE = re.compile(r"^CUBEORIENT v1 d=(\d+)$")


def to_text(o: Orientation) -> str:
    """CUBEORIENT v1 text form: header line plus hex payload, newline-terminated."""
    return f"CUBEORIENT v1 d={o.d}\n{serialize(o).hex()}\n"


def from_text(text: str) -> Orientation:
    lines = text.strip().split("\n")
    if len(lines) != 2:
        raise ValueError("expected a header line and one hex line")
    match = _HEADER_RE.match(lines[0].strip())
    if not match:
        raise ValueError(f"bad CUBEORIENT header: {lines[0]!r}")
    d = int(match.group(1))
    try:
        data = bytes.fromhex(lines[1].strip())
    except ValueError as exc:
        raise ValueError(f"bad hex payload: {exc}") from None
    return deserialize(data, d)


def save(o: Orientation, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_text(o))


def load(path) -> Orientation:
    with open(path, "r", encoding="ascii") as fh:
        return from_text(fh.read())

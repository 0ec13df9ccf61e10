"""Simple undirected graphs with bitmask adjacency.

Vertices are the integers 0..n-1 and vertex identity is the index, so
constructions elsewhere in the package can promise exact (label-wise)
layouts, not just isomorphism types. Graphs are immutable after
construction and all operations here are pure.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

ISOMORPHISM_CAP = 16
ENUMERATION_CAP = 7
GRAPH6_CAP = 62


class GraphError(ValueError):
    """Invalid construction, malformed input, or an out-of-range query."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``adj[v]`` is the neighbour set of v as a bitmask."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self.adj[v]))

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        return tuple(
            (u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))
        )

    def relabel(self, perm: tuple[int, ...]) -> Graph:
        """Image under the vertex map v -> perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            m = 0
            for w in _bits(self.adj[v]):
                m |= 1 << perm[w]
            adj[perm[v]] = m
        return Graph(self.n, tuple(adj))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for graph on {self.n} vertices")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build(n: int, edges) -> Graph:
    """Build a graph on n vertices from an edge list, deduplicating pairs."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u} is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def closed_neighbourhood(g: Graph, v: int) -> set[int]:
    """N[v]: the neighbours of v together with v itself."""
    g._check_vertex(v)
    return set(_bits(g.adj[v] | (1 << v)))


@dataclass(frozen=True)
class DegreeProfile:
    """Extremal degree data: maximum, minimum, regular degree if any, and
    the number of vertices attaining the maximum."""

    max_degree: int
    min_degree: int
    regular_degree: int | None
    max_degree_count: int


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise GraphError("degree profile of the empty graph is undefined")
    degs = g.degrees()
    dmax, dmin = max(degs), min(degs)
    return DegreeProfile(
        max_degree=dmax,
        min_degree=dmin,
        regular_degree=dmax if dmax == dmin else None,
        max_degree_count=degs.count(dmax),
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring of the vertices as (side0, side1), or None if impossible."""
    if g.n == 0:
        raise GraphError("bipartition of the empty graph is undefined")
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in _bits(g.adj[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    side0 = frozenset(v for v in range(g.n) if colour[v] == 0)
    side1 = frozenset(v for v in range(g.n) if colour[v] == 1)
    return side0, side1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n)))


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best = None
    for start in range(g.n):
        dist = {start: 0}
        parent = {start: -1}
        layer = [start]
        while layer:
            nxt = []
            for u in layer:
                for w in _bits(g.adj[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        cycle = dist[u] + dist[w] + 1
                        if best is None or cycle < best:
                            best = cycle
            layer = nxt
    return best


# ---------------------------------------------------------------------------
# graph6 interchange (short form, n <= 62)

def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_CAP:
        raise GraphError(f"graph6 short form only covers up to {GRAPH6_CAP} vertices")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    if not text:
        raise GraphError("empty graph6 string")
    head = ord(text[0]) - 63
    if not 0 <= head <= GRAPH6_CAP:
        raise GraphError(f"malformed graph6 header {text[0]!r}")
    n = head
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    payload = text[1:]
    if len(payload) != need:
        raise GraphError(
            f"graph6 payload for {n} vertices needs {need} characters, got {len(payload)}"
        )
    bits = []
    for ch in payload:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphError(f"invalid graph6 payload character {ch!r}")
        bits.extend((value >> k) & 1 for k in range(5, -1, -1))
    if any(bits[npairs:]):
        raise GraphError("nonzero padding bits in graph6 payload")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT rendering with solid edges only."""
    lines = [f"graph {name} {{"]
    if g.labels is not None:
        for v in range(g.n):
            lines.append(f'  {v} [label="{g.labels[v]}"];')
    else:
        for v in range(g.n):
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Small-order enumeration up to isomorphism

def _pair_positions(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


@functools.lru_cache(maxsize=None)
def _perm_pair_index(n: int) -> np.ndarray:
    """Row p of the result maps pair position e to its position under
    permutation p; used to take the minimum edge mask over all of S_n."""
    pairs = _pair_positions(n)
    pos = {pair: k for k, pair in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    idx = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for r, p in enumerate(perms):
        for e, (u, v) in enumerate(pairs):
            a, b = p[u], p[v]
            idx[r, e] = pos[(a, b) if a < b else (b, a)]
    return idx


def _canonical_mask(mask: int, n: int) -> int:
    """Minimum edge bitmask over all vertex relabellings (brute force)."""
    if n <= 1:
        return 0
    idx = _perm_pair_index(n)
    npairs = idx.shape[1]
    bits = np.fromiter(((mask >> e) & 1 for e in range(npairs)), dtype=np.int64, count=npairs)
    scattered = np.zeros_like(idx)
    rows = np.arange(idx.shape[0])[:, None]
    scattered[rows, idx] = bits[None, :]
    keys = scattered @ (np.int64(1) << np.arange(npairs, dtype=np.int64))
    return int(keys.min())


def _mask_to_graph(mask: int, n: int) -> Graph:
    adj = [0] * n
    for k, (u, v) in enumerate(_pair_positions(n)):
        if mask >> k & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@functools.lru_cache(maxsize=None)
def _graph_masks(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    prev = _graph_masks(n - 1)
    base = (n - 1) * (n - 2) // 2  # pairs (i, n-1) sit at positions base..base+n-2
    found = set()
    for mask in prev:
        for subset in range(1 << (n - 1)):
            extended = mask
            rest = subset
            while rest:
                low = rest & -rest
                extended |= 1 << (base + low.bit_length() - 1)
                rest ^= low
            found.add(_canonical_mask(extended, n))
    return tuple(sorted(found))


def enumerate_graphs(n: int, connected_only: bool = False):
    """Yield one representative per isomorphism class of graphs on n vertices."""
    if n < 1:
        raise GraphError("enumeration needs at least one vertex")
    if n > ENUMERATION_CAP:
        raise GraphError(f"enumeration is capped at {ENUMERATION_CAP} vertices")
    for mask in _graph_masks(n):
        g = _mask_to_graph(mask, n)
        if connected_only and not is_connected(g):
            continue
        yield g


# ---------------------------------------------------------------------------
# Isomorphism testing

def _vertex_invariants(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = g.degrees()
    return [(degs[v], tuple(sorted(degs[w] for w in _bits(g.adj[v])))) for v in range(g.n)]


def _isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism search; no size cap (internal use)."""
    if g.n != h.n:
        return False
    if g.size != h.size:
        return False
    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return False
    n = g.n
    # Process G's vertices so each one (after the first) touches the mapped prefix.
    order: list[int] = []
    placed = 0
    rarity = {inv: inv_g.count(inv) for inv in set(inv_g)}
    while len(order) < n:
        candidates = [v for v in range(n) if not placed >> v & 1]
        attached = [v for v in candidates if g.adj[v] & placed]
        pool = attached or candidates
        v = min(pool, key=lambda v: (rarity[inv_g[v]], -inv_g[v][0], v))
        order.append(v)
        placed |= 1 << v

    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or inv_h[w] != inv_g[v]:
                continue
            ok = True
            for u in order[:k]:
                if bool(g.adj[v] >> u & 1) != bool(h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff an adjacency-preserving bijection between the two graphs exists."""
    if g.n > ISOMORPHISM_CAP or h.n > ISOMORPHISM_CAP:
        raise GraphError(f"isomorphism testing is capped at {ISOMORPHISM_CAP} vertices")
    return _isomorphic(g, h)

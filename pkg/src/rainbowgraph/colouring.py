"""Exact chromatic computations.

Chromatic colourings are handled as partitions of the vertex set into
independent classes (killing colour-permutation symmetry), with classes in a
canonical order: descending size, ties broken by smallest contained vertex.
All searches are exact and capped at desk scale; the caps can be raised
explicitly by callers who accept the cost.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .graph import Graph, GraphError, _bits, bipartition, degree_profile
from .transforms import line_graph

DEFAULT_PARTITION_CAP = 14
DEFAULT_DOMINATION_CAP = 20
DEFAULT_EDGE_SEARCH_CAP = 80

PARTITION_CAP_ENV = "RAINBOWGRAPH_PARTITION_CAP"
DOMINATION_CAP_ENV = "RAINBOWGRAPH_DOMINATION_CAP"


class CapExceededError(GraphError):
    """A search was asked to run beyond its configured desk-scale cap."""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what}: instance size {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


def partition_cap() -> int:
    return int(os.environ.get(PARTITION_CAP_ENV, DEFAULT_PARTITION_CAP))


def domination_cap() -> int:
    return int(os.environ.get(DOMINATION_CAP_ENV, DEFAULT_DOMINATION_CAP))


class InvalidPartitionError(GraphError):
    """The supplied colour classes do not form a valid chromatic partition."""


@dataclass(frozen=True)
class ColourPartition:
    """Colour classes in canonical order; class i carries colour i+1."""

    classes: tuple[frozenset[int], ...]

    @staticmethod
    def from_classes(classes) -> "ColourPartition":
        ordered = sorted((frozenset(c) for c in classes), key=lambda c: (-len(c), min(c)))
        return ColourPartition(tuple(ordered))

    @property
    def size_vector(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_masks(self) -> tuple[int, ...]:
        masks = []
        for c in self.classes:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    def sort_key(self) -> tuple:
        return tuple(tuple(sorted(c)) for c in self.classes)

    def validate(self, g: Graph) -> None:
        seen = 0
        for c in self.classes:
            if not c:
                raise InvalidPartitionError("empty colour class")
            m = 0
            for v in c:
                if not 0 <= v < g.n:
                    raise InvalidPartitionError(f"vertex {v} out of range")
                m |= 1 << v
            if seen & m:
                raise InvalidPartitionError("colour classes overlap")
            seen |= m
            for v in c:
                if g.adj[v] & m:
                    raise InvalidPartitionError(f"class containing vertex {v} is not independent")
        if seen != (1 << g.n) - 1:
            raise InvalidPartitionError("classes do not cover the vertex set")


@dataclass(frozen=True)
class ConventionCertificate:
    """A chromatic partition whose size vector is lexicographically maximal.

    The flag is only ever set by the convention search itself.
    """

    partition: ColourPartition
    lexicographically_maximal: bool = field(default=False)

    @property
    def size_vector(self) -> tuple[int, ...]:
        return self.partition.size_vector


# ---------------------------------------------------------------------------
# Chromatic number

def _greedy_clique(g: Graph) -> int:
    degs = g.degrees()
    best = 1 if g.n else 0
    order = sorted(range(g.n), key=lambda v: -degs[v])
    for seed in order:
        clique_mask = 1 << seed
        size = 1
        for v in order:
            if v != seed and g.adj[v] & clique_mask == clique_mask:
                clique_mask |= 1 << v
                size += 1
        best = max(best, size)
    return best


def _greedy_colouring(g: Graph) -> int:
    """DSATUR greedy; returns the number of colours used (an upper bound)."""
    n = g.n
    colour = [-1] * n
    neigh = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (neigh[u].bit_count(), g.adj[u].bit_count(), -u),
        )
        c = 0
        while neigh[v] >> c & 1:
            c += 1
        colour[v] = c
        for w in _bits(g.adj[v]):
            neigh[w] |= 1 << c
    return max(colour) + 1


def _k_colouring(g: Graph, k: int) -> list[int] | None:
    """One proper colouring with at most k colours, or None (DSATUR search)."""
    n = g.n
    colour = [-1] * n
    neigh = [0] * n

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (neigh[u].bit_count(), g.adj[u].bit_count(), -u),
        )
        if neigh[v].bit_count() >= k:
            return False
        for c in range(min(used + 1, k)):
            if neigh[v] >> c & 1:
                continue
            colour[v] = c
            bit = 1 << c
            changed = []
            for w in _bits(g.adj[v]):
                if not neigh[w] & bit:
                    neigh[w] |= bit
                    changed.append(w)
            if rec(done + 1, max(used, c + 1)):
                return True
            for w in changed:
                neigh[w] &= ~bit
            colour[v] = -1
        return False

    return colour if rec(0, 0) else None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number (clique lower bound + DSATUR-ordered search)."""
    if g.n == 0:
        raise GraphError("chromatic number of the empty graph is undefined")
    if g.size == 0:
        return 1
    if bipartition(g) is not None:
        return 2
    lower = max(3, _greedy_clique(g))
    upper = _greedy_colouring(g)
    k = lower
    while k < upper:
        if _k_colouring(g, k) is not None:
            return k
        k += 1
    return upper


# ---------------------------------------------------------------------------
# Partition enumeration and the convention search

def enumerate_chromatic_partitions(g: Graph, cap: int | None = None, allow_large: bool = False):
    """Yield every partition of V into exactly chi(G) independent classes.

    Each partition appears exactly once: classes are grown in
    restricted-growth order (a new class is always opened by the smallest
    unassigned vertex), which eliminates colour-permutation duplicates.
    """
    limit = partition_cap() if cap is None else cap
    if g.n > limit and not allow_large:
        raise CapExceededError("chromatic partition enumeration", g.n, limit)
    if g.n == 0:
        raise GraphError("cannot enumerate partitions of the empty graph")
    chi = chromatic_number(g)
    masks: list[int] = []

    def rec(v: int):
        if v == g.n:
            yield ColourPartition.from_classes(frozenset(_bits(m)) for m in masks)
            return
        need = chi - len(masks)
        if need < g.n - v:
            for i in range(len(masks)):
                if not masks[i] & g.adj[v]:
                    masks[i] |= 1 << v
                    yield from rec(v + 1)
                    masks[i] &= ~(1 << v)
        if len(masks) < chi:
            masks.append(1 << v)
            yield from rec(v + 1)
            masks.pop()

    yield from rec(0)


def convention_partitions(
    g: Graph, cap: int | None = None, allow_large: bool = False
) -> list[ConventionCertificate]:
    """All chromatic partitions whose size vector is the lexicographic maximum.

    Branch and bound over the same restricted-growth search as the
    enumerator: a branch is cut when even piling every unassigned vertex
    onto the largest open class cannot reach the incumbent vector.
    """
    limit = partition_cap() if cap is None else cap
    if g.n > limit and not allow_large:
        raise CapExceededError("convention colouring search", g.n, limit)
    if g.n == 0:
        raise GraphError("cannot colour the empty graph")
    chi = chromatic_number(g)
    masks: list[int] = []
    best_vector: tuple[int, ...] | None = None
    best: list[ColourPartition] = []

    def optimistic() -> tuple[int, ...]:
        sizes = [m.bit_count() for m in masks]
        remaining = g.n - sum(sizes)
        need = chi - len(sizes)
        free = remaining - need
        if sizes:
            top = max(sizes)
            sizes.remove(top)
            bound = [top + free] + sizes + [1] * need
        else:
            bound = [1 + free] + [1] * (need - 1)
        return tuple(sorted(bound, reverse=True))

    def rec(v: int):
        nonlocal best_vector
        if v == g.n:
            part = ColourPartition.from_classes(frozenset(_bits(m)) for m in masks)
            vec = part.size_vector
            if best_vector is None or vec > best_vector:
                best_vector = vec
                best.clear()
            if vec == best_vector:
                best.append(part)
            return
        if best_vector is not None and optimistic() < best_vector:
            return
        need = chi - len(masks)
        if need < g.n - v:
            for i in range(len(masks)):
                if not masks[i] & g.adj[v]:
                    masks[i] |= 1 << v
                    rec(v + 1)
                    masks[i] &= ~(1 << v)
        if len(masks) < chi:
            masks.append(1 << v)
            rec(v + 1)
            masks.pop()

    rec(0)
    best.sort(key=ColourPartition.sort_key)
    return [ConventionCertificate(p, lexicographically_maximal=True) for p in best]


# ---------------------------------------------------------------------------
# Chromatic index

def proper_edge_colouring_regular_bipartite(g: Graph) -> list[list[int]]:
    """Colour classes (edge-index lists) for a d-regular bipartite graph,
    found by peeling perfect matchings; exactly d classes."""
    sides = bipartition(g)
    profile = degree_profile(g)
    if sides is None or profile.regular_degree is None:
        raise GraphError("matching peel needs a regular bipartite graph")
    d = profile.regular_degree
    if d == 0:
        return []
    left, right = (sorted(sides[0]), sorted(sides[1]))
    if len(left) != len(right):
        raise GraphError("regular bipartite graph must have equal sides")
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    work: dict[int, set[int]] = {a: set() for a in left}
    for u, v in edges:
        a, b = (u, v) if u in work else (v, u)
        work[a].add(b)
    classes: list[list[int]] = []
    for _ in range(d):
        match_of_b: dict[int, int] = {}

        def augment(a: int, seen: set[int]) -> bool:
            for b in sorted(work[a]):
                if b in seen:
                    continue
                seen.add(b)
                if b not in match_of_b or augment(match_of_b[b], seen):
                    match_of_b[b] = a
                    return True
            return False

        for a in left:
            if not augment(a, set()):
                raise GraphError("matching peel failed; graph is not regular bipartite")
        klass = []
        for b, a in match_of_b.items():
            work[a].discard(b)
            klass.append(index[(a, b) if a < b else (b, a)])
        classes.append(sorted(klass))
    return classes


def chromatic_index(g: Graph, cap: int | None = None, allow_large: bool = False) -> int:
    """Exact chromatic index, computed as the chromatic number of the line graph.

    Regular bipartite graphs take a constructive shortcut: the maximum degree
    is certainly a lower bound, and peeling perfect matchings attains it.
    """
    if g.size == 0:
        raise GraphError("chromatic index of an edgeless graph is undefined")
    profile = degree_profile(g)
    if profile.regular_degree is not None and bipartition(g) is not None:
        classes = proper_edge_colouring_regular_bipartite(g)
        return len(classes)
    limit = DEFAULT_EDGE_SEARCH_CAP if cap is None else cap
    if g.size > limit and not allow_large:
        raise CapExceededError("chromatic index search", g.size, limit)
    lg, _ = line_graph(g)
    return chromatic_number(lg)


# ---------------------------------------------------------------------------
# Chromatic polynomial evaluation (deletion-contraction)

def _falling(k: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= k - i
    return out


def _components(adj: dict[int, set[int]]) -> list[set[int]]:
    comps = []
    left = set(adj)
    while left:
        start = next(iter(left))
        comp = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        comps.append(comp)
        left -= comp
    return comps


def _del_con(adj: dict[int, set[int]], k: int) -> int:
    isolated = [v for v in adj if not adj[v]]
    if isolated:
        rest = {v: adj[v] for v in adj if adj[v]}
        return k ** len(isolated) * _del_con(rest, k)
    if not adj:
        return 1
    n = len(adj)
    m = sum(len(s) for s in adj.values()) // 2
    if m == n * (n - 1) // 2:
        return _falling(k, n)
    comps = _components(adj)
    if len(comps) > 1:
        out = 1
        for comp in comps:
            out *= _del_con({v: adj[v] & comp for v in comp}, k)
        return out
    u = max(adj, key=lambda v: (len(adj[v]), -v))
    v = max(adj[u], key=lambda w: (len(adj[w]), -w))
    deleted = {x: set(adj[x]) for x in adj}
    deleted[u].discard(v)
    deleted[v].discard(u)
    contracted = {x: set(adj[x]) for x in adj if x != v}
    contracted[u] = (adj[u] | adj[v]) - {u, v}
    for x in contracted:
        if v in contracted[x]:
            contracted[x].discard(v)
            if x != u:
                contracted[x].add(u)
                contracted[u].add(x)
    return _del_con(deleted, k) - _del_con(contracted, k)


def count_proper_colourings(g: Graph, k: int) -> int:
    """Value of the chromatic polynomial at k, by deletion-contraction."""
    if g.n > 14:
        raise CapExceededError("chromatic polynomial evaluation", g.n, 14)
    if k < 0:
        raise GraphError("colour count must be non-negative")
    adj = {v: set(_bits(g.adj[v])) for v in range(g.n)}
    return _del_con(adj, k)


# ---------------------------------------------------------------------------
# Domination number

def domination_number(g: Graph, cap: int | None = None, allow_large: bool = False) -> int:
    """Minimum dominating set size by branch and bound over closed neighbourhoods."""
    limit = domination_cap() if cap is None else cap
    if g.n > limit and not allow_large:
        raise CapExceededError("domination number search", g.n, limit)
    if g.n == 0:
        raise GraphError("domination number of the empty graph is undefined")
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1

    # Greedy incumbent.
    covered = 0
    incumbent = 0
    while covered != full:
        gain, pick = max(
            ((closed[v] & ~covered).bit_count(), -v) for v in range(g.n)
        )
        covered |= closed[-pick]
        incumbent += 1

    best = incumbent

    def rec(count: int, covered: int) -> None:
        nonlocal best
        if covered == full:
            best = min(best, count)
            return
        uncovered = full & ~covered
        max_gain = max((closed[v] & uncovered).bit_count() for v in range(g.n))
        lower = count + -(-uncovered.bit_count() // max_gain)
        if lower >= best:
            return
        v = (uncovered & -uncovered).bit_length() - 1
        dominators = sorted(
            _bits(closed[v]), key=lambda u: -(closed[u] & uncovered).bit_count()
        )
        for u in dominators:
            rec(count + 1, covered | closed[u])

    rec(0, 0)
    return best

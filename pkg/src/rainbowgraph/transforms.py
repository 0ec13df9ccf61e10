"""Graph operators: union, join, corona, cover constructions, and line graphs.

The line graph, the expanded line graph, and the broken-edge contraction all
share one canonical edge order (lexicographic on (min endpoint, max
endpoint)), so contracting the expanded line graph reproduces the line graph
as label-wise equality rather than mere isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, build


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G followed by H, with H's vertex indices shifted by |V(G)|."""
    edges = list(g.edges())
    edges += [(u + g.n, v + g.n) for u, v in h.edges()]
    return build(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    edges = list(g.edges())
    edges += [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return build(g.n + h.n, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """One fresh copy of H per vertex of G, each copy joined to its host.

    Host v keeps index v; vertex i of v's copy is n1 + v*n2 + i.
    """
    if g.n < 1:
        raise GraphError("corona needs a non-empty host graph")
    edges = list(g.edges())
    for v in range(g.n):
        base = g.n + v * h.n
        edges += [(base + a, base + b) for a, b in h.edges()]
        edges += [(v, base + i) for i in range(h.n)]
    return build(g.n + g.n * h.n, edges)


def chithra(g: Graph, subsets) -> Graph:
    """Attach one new vertex per subset, adjacent to exactly that subset.

    The subsets must be non-empty and jointly cover the vertex set; the new
    vertex for subsets[i] is g.n + i.
    """
    subsets = [frozenset(w) for w in subsets]
    covered: set[int] = set()
    for i, w in enumerate(subsets):
        if not w:
            raise GraphError(f"subset {i} is empty")
        for v in w:
            if not 0 <= v < g.n:
                raise GraphError(f"subset {i} contains out-of-range vertex {v}")
        covered |= w
    if covered != set(range(g.n)):
        raise GraphError("subsets must jointly cover the vertex set")
    edges = list(g.edges())
    for i, w in enumerate(subsets):
        edges += [(v, g.n + i) for v in sorted(w)]
    return build(g.n + len(subsets), edges)


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """The line graph plus the edge list mapping line-vertex i to edge i."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is undefined")
    m = len(edges)
    line_edges = []
    for i in range(m):
        u1, v1 = edges[i]
        for j in range(i + 1, m):
            u2, v2 = edges[j]
            if u1 in (u2, v2) or v1 in (u2, v2):
                line_edges.append((i, j))
    return build(m, line_edges), edges


@dataclass(frozen=True)
class ExpandedGraph:
    """Each vertex of the source replaced by a clique on its degree, with one
    broken edge per source edge linking the two inserted vertices.

    ``graph`` holds solid and broken edges together; colouring code must not
    consume it directly, which is why this is a separate type. ``cliques[v]``
    lists the clique vertices standing in for source vertex v (ordered by
    incident edge index), and ``broken[i]`` is the linked pair for source
    edge i in the canonical edge order.
    """

    graph: Graph
    cliques: tuple[tuple[int, ...], ...]
    broken: tuple[tuple[int, int], ...]
    source_edges: tuple[tuple[int, int], ...]

    @property
    def solid_edges(self) -> tuple[tuple[int, int], ...]:
        broken = set(self.broken)
        return tuple(e for e in self.graph.edges() if e not in broken)


def expanded_line_graph(g: Graph) -> ExpandedGraph:
    edges = g.edges()
    if not edges:
        raise GraphError("expanded line graph of an edgeless graph is undefined")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    offsets = []
    total = 0
    for v in range(g.n):
        offsets.append(total)
        total += len(incident[v])
    slot: dict[tuple[int, int], int] = {}  # (source vertex, edge index) -> clique vertex
    for v in range(g.n):
        for rank, i in enumerate(incident[v]):
            slot[(v, i)] = offsets[v] + rank
    solid = []
    for v in range(g.n):
        members = [slot[(v, i)] for i in incident[v]]
        solid += [(a, b) for k, a in enumerate(members) for b in members[k + 1:]]
    broken = tuple((slot[(u, i)], slot[(v, i)]) for i, (u, v) in enumerate(edges))
    graph = build(total, solid + [tuple(sorted(b)) for b in broken])
    if graph.size != len(solid) + len(broken):
        raise GraphError("clique and broken edges overlap; source graph was not simple")
    cliques = tuple(tuple(slot[(v, i)] for i in incident[v]) for v in range(g.n))
    return ExpandedGraph(graph=graph, cliques=cliques, broken=broken, source_edges=edges)


def contract_broken(x: ExpandedGraph) -> Graph:
    """Merge the two ends of every broken edge; vertex i is source edge i."""
    owner = {}
    for i, (a, b) in enumerate(x.broken):
        owner[a] = i
        owner[b] = i
    edges = [(owner[a], owner[b]) for a, b in x.solid_edges]
    return build(len(x.broken), [(min(p), max(p)) for p in edges])


def expanded_to_dot(x: ExpandedGraph, name: str = "G") -> str:
    """DOT rendering of an expanded line graph; broken edges are dashed."""
    lines = [f"graph {name} {{"]
    for v in range(x.graph.n):
        lines.append(f"  {v};")
    broken = set(x.broken)
    for u, v in x.graph.edges():
        if (u, v) in broken or (v, u) in broken:
            lines.append(f"  {u} -- {v} [style=dashed];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Parametric graph generators and the named-graph catalogue.

Every generator documents its index layout so downstream identities can be
checked as label-wise equality. The catalogue of named cubic and quartic
graphs lives in ``data/named_graphs.txt``; each constructible entry is
re-validated against its recorded order, size, regular degree, and
bipartiteness every time it is built.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass

from .graph import Graph, GraphError, bipartition, build, degree_profile, is_connected

FAMILY_TAGS = (
    "path",
    "cycle",
    "complete",
    "star",
    "wheel",
    "ladder",
    "complete_multipartite",
    "petersen",
)


class CatalogError(GraphError):
    """A named-graph record is unknown, unconstructible, or fails validation."""


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters (part sizes for multipartite)."""

    tag: str
    params: tuple[int, ...] = ()


def parse_family(text: str) -> FamilySpec:
    """Parse CLI syntax ``family:param[,param...]``, e.g. ``wheel:5``."""
    tag, _, rest = text.partition(":")
    if tag not in FAMILY_TAGS:
        raise GraphError(f"unknown family {tag!r} (choose from {', '.join(FAMILY_TAGS)})")
    if not rest:
        return FamilySpec(tag)
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise GraphError(f"non-integer parameter in family spec {text!r}") from None
    return FamilySpec(tag, params)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """Centre is vertex 0; the leaves are 1..leaves."""
    if leaves < 1:
        raise GraphError("star needs at least one leaf")
    return build(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def wheel(rim: int) -> Graph:
    """Cycle 0..rim-1 joined to a hub at index rim."""
    if rim < 3:
        raise GraphError("wheel needs rim length at least three")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return build(rim + 1, edges)


def ladder(n: int) -> Graph:
    """Two rails of length n with all n rungs; vertex (i, j) is index 2i+j."""
    if n < 2:
        raise GraphError("ladder needs at least two rungs")
    edges = []
    for i in range(n - 1):
        edges.append((2 * i, 2 * (i + 1)))
        edges.append((2 * i + 1, 2 * (i + 1) + 1))
    for i in range(n):
        edges.append((2 * i, 2 * i + 1))
    return build(2 * n, edges)


def complete_multipartite(parts: tuple[int, ...]) -> Graph:
    """Parts occupy consecutive index ranges in the order given."""
    if len(parts) < 2:
        raise GraphError("complete multipartite graph needs at least two parts")
    if any(r < 1 for r in parts):
        raise GraphError("every part must be non-empty")
    bounds = [0]
    for r in parts:
        bounds.append(bounds[-1] + r)
    n = bounds[-1]
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(bounds[a], bounds[a + 1]):
                for v in range(bounds[b], bounds[b + 1]):
                    edges.append((u, v))
    return build(n, edges)


def petersen() -> Graph:
    """Outer cycle 0..4, inner vertices 5..9 with chords at step two."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return build(10, edges)


def generate(spec: FamilySpec) -> Graph:
    tag, params = spec.tag, spec.params
    if tag == "path":
        return path(_one_param(spec))
    if tag == "cycle":
        return cycle(_one_param(spec))
    if tag == "complete":
        return complete(_one_param(spec))
    if tag == "star":
        return star(_one_param(spec))
    if tag == "wheel":
        return wheel(_one_param(spec))
    if tag == "ladder":
        return ladder(_one_param(spec))
    if tag == "complete_multipartite":
        return complete_multipartite(params)
    if tag == "petersen":
        if params:
            raise GraphError("petersen takes no parameters")
        return petersen()
    raise GraphError(f"unknown family {tag!r}")


def _one_param(spec: FamilySpec) -> int:
    if len(spec.params) != 1:
        raise GraphError(f"family {spec.tag!r} takes exactly one integer parameter")
    return spec.params[0]


def lcf_graph(pattern: list[int] | tuple[int, ...], exponent: int) -> Graph:
    """Cubic Hamiltonian graph: cycle 0..n-1 plus chords i -> i + pattern[i mod len]."""
    if exponent < 1 or not pattern:
        raise GraphError("LCF pattern and exponent must be non-trivial")
    n = len(pattern) * exponent
    if n % 2:
        raise GraphError("LCF graph needs an even vertex count for a cubic result")
    for s in pattern:
        if not 1 < abs(s) < n:
            raise GraphError(f"LCF shift {s} out of range: need 1 < |s| < {n}")
    cycle_edges = {frozenset((i, (i + 1) % n)) for i in range(n)}
    chords: set[frozenset[int]] = set()
    touched = [0] * n
    for i in range(n):
        j = (i + pattern[i % len(pattern)]) % n
        chord = frozenset((i, j))
        if chord in cycle_edges:
            raise GraphError(f"LCF chord {i}-{j} collides with a cycle edge")
        if chord not in chords:
            chords.add(chord)
            touched[i] += 1
            touched[j] += 1
    if len(chords) != n // 2 or any(t != 1 for t in touched):
        raise GraphError("LCF chords do not pair the vertices; the result is not cubic")
    edges = [tuple(sorted(e)) for e in cycle_edges | chords]
    return build(n, edges)


def thorn_cycle(n: int, host: int, pendants: int) -> Graph:
    """Cycle 0..n-1 with ``pendants`` degree-one vertices attached to ``host``."""
    if n < 3:
        raise GraphError("thorn cycle needs a cycle of length at least three")
    if not 0 <= host < n:
        raise GraphError(f"host vertex {host} out of range")
    if pendants < 1:
        raise GraphError("thorn cycle needs at least one pendant")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(host, n + k) for k in range(pendants)]
    return build(n + pendants, edges)


def g_star(g: Graph, t: int) -> Graph:
    """Add t new vertices, each adjacent to every vertex except vertex 0."""
    if g.n < 2:
        raise GraphError("base graph needs at least two vertices")
    if not is_connected(g):
        raise GraphError("base graph must be connected")
    if t < 0:
        raise GraphError("number of added vertices must be non-negative")
    edges = list(g.edges())
    for k in range(t):
        edges += [(v, g.n + k) for v in range(1, g.n)]
    return build(g.n + t, edges)


# ---------------------------------------------------------------------------
# Named-graph catalogue

@dataclass(frozen=True)
class NamedGraphRecord:
    name: str
    order: int
    size: int
    degree: int
    bipartite: bool
    construction: str  # "lcf:...", "edges:...", "family:...", or "none:<note>"

    @property
    def constructible(self) -> bool:
        return not self.construction.startswith("none:")


_ALIASES = {"naura": "nauru", "cubicle": "cubical", "levi": "tutte-coxeter"}

_catalog_cache: dict[str, NamedGraphRecord] | None = None


def load_catalog() -> dict[str, NamedGraphRecord]:
    """Parse data/named_graphs.txt into records, keyed by name."""
    global _catalog_cache
    if _catalog_cache is not None:
        return _catalog_cache
    text = (
        importlib.resources.files("rainbowgraph")
        .joinpath("data/named_graphs.txt")
        .read_text(encoding="utf-8")
    )
    records: dict[str, NamedGraphRecord] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 6:
            raise CatalogError(f"named_graphs.txt line {lineno}: expected 6 fields")
        name, order, size, degree, bip, construction = fields
        record = NamedGraphRecord(
            name=name,
            order=int(order),
            size=int(size),
            degree=int(degree),
            bipartite={"yes": True, "no": False}[bip],
            construction=construction,
        )
        if 2 * record.size != record.order * record.degree:
            raise CatalogError(f"catalogue entry {name}: size inconsistent with regular degree")
        records[name] = record
    _catalog_cache = records
    return records


def catalog_names() -> tuple[str, ...]:
    return tuple(load_catalog())


def named_graph(name: str) -> Graph:
    """Build and validate a catalogue graph by name."""
    key = _ALIASES.get(name.lower(), name.lower())
    records = load_catalog()
    if key not in records:
        raise CatalogError(f"unknown named graph {name!r}")
    record = records[key]
    kind, _, data = record.construction.partition(":")
    if kind == "none":
        raise CatalogError(
            f"no construction shipped for {record.name!r} ({data}); "
            "only its recorded parameters are available"
        )
    if kind == "lcf":
        pattern_text, _, exp_text = data.partition("^")
        g = lcf_graph([int(s) for s in pattern_text.split(",")], int(exp_text))
    elif kind == "edges":
        pairs = [pair.split("-") for pair in data.split(",")]
        g = build(record.order, [(int(u), int(v)) for u, v in pairs])
    elif kind == "family":
        g = generate(parse_family(data))
    else:
        raise CatalogError(f"catalogue entry {record.name}: unknown construction {kind!r}")
    _validate_named(record, g)
    return g


def _validate_named(record: NamedGraphRecord, g: Graph) -> None:
    profile = degree_profile(g)
    problems = []
    if g.n != record.order:
        problems.append(f"order {g.n} != {record.order}")
    if g.size != record.size:
        problems.append(f"size {g.size} != {record.size}")
    if profile.regular_degree != record.degree:
        problems.append(f"degree {profile.regular_degree} != {record.degree}")
    if (bipartition(g) is not None) != record.bipartite:
        problems.append("bipartiteness mismatch")
    if problems:
        raise CatalogError(f"catalogue entry {record.name} failed validation: " + "; ".join(problems))

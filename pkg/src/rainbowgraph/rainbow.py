"""Rainbow neighbourhood computations and the closed-form engine.

A vertex yields a rainbow neighbourhood when its closed neighbourhood meets
every colour class of the colouring at hand. The headline quantity is the
minimum yield count over all convention (lexicographically maximal)
colourings; the global minimum and maximum over all chromatic colourings are
computed alongside it so the convention's minimality can be audited rather
than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import families
from .colouring import (
    CapExceededError,
    ColourPartition,
    convention_partitions,
    enumerate_chromatic_partitions,
    partition_cap,
)
from .graph import Graph, GraphError, _bits, bipartition, complement, is_connected


@dataclass(frozen=True)
class RainbowReport:
    """Per-vertex yield flags for one graph/colouring pair."""

    graph: Graph
    partition: ColourPartition
    flags: tuple[bool, ...]

    @property
    def count(self) -> int:
        return sum(self.flags)

    def yielding(self) -> tuple[int, ...]:
        return tuple(v for v, f in enumerate(self.flags) if f)


def rainbow_set(g: Graph, partition: ColourPartition) -> RainbowReport:
    """Evaluate the yield flag of every vertex under the given partition.

    The partition must split V(G) into independent classes; callers who want
    the rainbow neighbourhood number must pass a chromatic partition (exactly
    chi(G) classes), which is what every search in this package produces.
    """
    partition.validate(g)
    masks = partition.class_masks()
    flags = []
    for v in range(g.n):
        closed = g.adj[v] | (1 << v)
        flags.append(all(m & closed for m in masks))
    return RainbowReport(graph=g, partition=partition, flags=tuple(flags))


@dataclass(frozen=True)
class RainbowValue:
    """An r-value with its derivation path and, for oracle runs, a witness."""

    value: int
    method: str  # "oracle" or "formula"
    witness: ColourPartition | None = None
    claim: str | None = None


def _oracle_feasible(g: Graph, cap: int | None, allow_large: bool) -> bool:
    limit = partition_cap() if cap is None else cap
    return g.n <= limit or allow_large


def r_conv(g: Graph, cap: int | None = None, allow_large: bool = False) -> RainbowValue:
    """Minimum yield count over all convention colourings, with a witness.

    Beyond the oracle cap the value falls back to a closed form when the
    graph is recognised (complete, odd cycle, connected bipartite, complete
    multipartite, or a wheel); the result is flagged accordingly.
    """
    if _oracle_feasible(g, cap, allow_large):
        best: RainbowValue | None = None
        for cert in convention_partitions(g, cap=cap, allow_large=True):
            report = rainbow_set(g, cert.partition)
            if best is None or report.count < best.value:
                best = RainbowValue(report.count, "oracle", cert.partition)
        assert best is not None
        return best
    recognised = _recognise(g)
    if recognised is not None:
        value, claim = recognised
        return RainbowValue(value, "formula", None, claim)
    limit = partition_cap() if cap is None else cap
    raise CapExceededError("rainbow neighbourhood oracle", g.n, limit)


def r_min(g: Graph, cap: int | None = None, allow_large: bool = False) -> RainbowValue:
    """Minimum yield count over ALL chromatic partitions."""
    return _extreme(g, cap, allow_large, want_max=False)


def r_max(g: Graph, cap: int | None = None, allow_large: bool = False) -> RainbowValue:
    """Maximum yield count over ALL chromatic partitions."""
    return _extreme(g, cap, allow_large, want_max=True)


def _extreme(g: Graph, cap, allow_large, want_max: bool) -> RainbowValue:
    best_count = None
    best_partition = None
    for partition in enumerate_chromatic_partitions(g, cap=cap, allow_large=allow_large):
        count = rainbow_set(g, partition).count
        if best_count is None or (count > best_count if want_max else count < best_count):
            best_count = count
            best_partition = partition
    if best_count is None:
        raise GraphError("graph admits no chromatic partition")
    return RainbowValue(best_count, "oracle", best_partition)


# ---------------------------------------------------------------------------
# Family recognition (formula fall-back for graphs beyond the oracle cap)

def _recognise(g: Graph) -> tuple[int, str] | None:
    n = g.n
    if n == 0:
        return None
    degs = g.degrees()
    if all(d == n - 1 for d in degs):
        return n, "PROP2.1c"
    if n >= 3 and all(d == 2 for d in degs) and is_connected(g) and n % 2 == 1:
        return 3, "PROP2.1b"
    if bipartition(g) is not None and is_connected(g):
        return n, "THM2.2"
    parts = _multipartite_parts(g)
    if parts is not None:
        return sum(parts), "PROP2.1e"
    rim = _wheel_rim(g)
    if rim is not None:
        return (4 if rim % 2 else rim + 1), "PROP2.1d"
    return None


def _multipartite_parts(g: Graph) -> tuple[int, ...] | None:
    """Part sizes if the complement is a disjoint union of at least two cliques."""
    co = complement(g)
    seen = 0
    parts = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = co.adj[v] | (1 << v)
        # the component must be a clique: every member's closed set equals it
        for w in _bits(comp):
            if co.adj[w] | (1 << w) != comp:
                return None
        parts.append(comp.bit_count())
        seen |= comp
    if len(parts) < 2:
        return None
    return tuple(sorted(parts, reverse=True))


def _wheel_rim(g: Graph) -> int | None:
    n = g.n
    if n < 5:  # the rim-three wheel is complete and caught earlier
        return None
    hubs = [v for v in range(n) if g.degree(v) == n - 1]
    if len(hubs) != 1:
        return None
    hub = hubs[0]
    rim = [v for v in range(n) if v != hub]
    if any(g.degree(v) != 3 for v in rim):
        return None
    # rim must induce a single cycle
    start = rim[0]
    first = [w for w in _bits(g.adj[start]) if w != hub]
    if len(first) != 2:
        return None
    seen = {start}
    prev, cur = start, first[0]
    while cur != start:
        if cur in seen:
            return None
        seen.add(cur)
        nxts = [w for w in _bits(g.adj[cur]) if w != hub and w != prev]
        if len(nxts) != 1:
            return None
        prev, cur = cur, nxts[0]
    if len(seen) != n - 1:
        return None
    return n - 1


# ---------------------------------------------------------------------------
# Closed-form engine

@dataclass(frozen=True)
class FormulaValue:
    """A closed-form prediction, tagged with the claim it came from."""

    claim: str
    values: dict


def formula_r(kind: str, **kw) -> FormulaValue:
    """Closed-form values for families, line-graph pairs, and operations.

    Kinds: ``family`` (spec=FamilySpec), ``line_pair`` (spec=FamilySpec),
    ``join`` (r_g, r_h), ``union`` (r_g, r_h, chi_g, chi_h), ``corona``
    (n_g, r_g, r_h, chi_g, chi_h), ``k1_join`` (r_g), ``chithra_k1``
    (t, r_g), ``bipartite`` (n), ``regular_line`` (size), ``line_upper``
    (max_degree_count, max_degree) and ``g_star`` (a, b).
    """
    if kind == "family":
        return _family_formula(kw["spec"])
    if kind == "line_pair":
        return _line_pair_formula(kw["spec"])
    if kind == "join":
        return FormulaValue("THM2.5ii", {"r": kw["r_g"] + kw["r_h"]})
    if kind == "union":
        equal = kw["chi_g"] == kw["chi_h"]
        return FormulaValue(
            "THM2.5i",
            {"r": kw["r_g"] + kw["r_h"], "relation": "eq" if equal else "lt"},
        )
    if kind == "corona":
        if kw["chi_h"] >= kw["chi_g"] - 1:
            return FormulaValue("THM2.5iii", {"r": kw["n_g"] * (1 + kw["r_h"]), "branch": "join"})
        return FormulaValue("THM2.5iii", {"r": kw["r_g"], "branch": "host-only"})
    if kind == "corona_chi":
        if kw["chi_h"] >= kw["chi_g"] - 1:
            return FormulaValue("COR2.6", {"chi": kw["chi_h"] + 1})
        return FormulaValue("COR2.6", {"chi": kw["chi_g"]})
    if kind == "k1_join":
        return FormulaValue("LEM2.3", {"r": 1 + kw["r_g"]})
    if kind == "chithra_k1":
        return FormulaValue("THM2.4", {"r": kw["t"] + kw["r_g"]})
    if kind == "bipartite":
        return FormulaValue("THM2.2", {"r": kw["n"]})
    if kind == "regular_line":
        return FormulaValue("COR2.9", {"r_line": kw["size"]})
    if kind == "line_upper":
        return FormulaValue("COR2.8", {"bound": kw["max_degree_count"] * kw["max_degree"]})
    if kind == "g_star":
        return FormulaValue("THM2.12", {"r": kw["a"], "chi": kw["b"]})
    raise GraphError(f"unknown formula kind {kind!r}")


def _family_formula(spec: families.FamilySpec) -> FormulaValue:
    tag, params = spec.tag, spec.params
    if tag == "path":
        (n,) = params
        return FormulaValue("PROP2.1a", {"r": n})
    if tag == "cycle":
        (n,) = params
        return FormulaValue("PROP2.1b", {"r": 3 if n % 2 else n})
    if tag == "complete":
        (n,) = params
        return FormulaValue("PROP2.1c", {"r": n})
    if tag == "wheel":
        (rim,) = params
        return FormulaValue("PROP2.1d", {"r": 4 if rim % 2 else rim + 1})
    if tag == "ladder":
        (n,) = params
        return FormulaValue("PROP2.1f", {"r": 2 * n})
    if tag in ("complete_multipartite", "star"):
        parts = params if tag == "complete_multipartite" else (1, params[0])
        return FormulaValue("PROP2.1e", {"r": sum(parts)})
    if tag == "petersen":
        return FormulaValue("PETERSEN", {"r": 9})
    raise GraphError(f"no closed form for family {tag!r}")


def _line_pair_formula(spec: families.FamilySpec) -> FormulaValue:
    tag, params = spec.tag, spec.params
    if tag == "path":
        (n,) = params
        return FormulaValue("PROP2.6a", {"sum": 2 * n - 1, "product": n * (n - 1)})
    if tag == "cycle":
        (n,) = params
        if n % 2:
            return FormulaValue("PROP2.6b", {"sum": 6, "product": 9})
        return FormulaValue("PROP2.6b", {"sum": 2 * n, "product": n * n})
    if tag == "ladder":
        (n,) = params
        return FormulaValue("PROP2.6c", {"sum": 5 * n - 4, "product": 2 * n * (3 * n - 4)})
    if tag == "wheel":
        (rim,) = params
        if rim == 3:
            return FormulaValue("PROP2.6d", {"sum": 10, "product": 24})
        if rim % 2:
            return FormulaValue("PROP2.6d", {"sum": rim + 4, "product": 4 * rim})
        return FormulaValue("PROP2.6d", {"sum": 2 * rim + 1, "product": rim * (rim + 1)})
    if tag == "complete":
        (n,) = params
        return FormulaValue(
            "PROP2.6e",
            {"sum": Fraction(n * (n + 1), 2), "product": Fraction(n * n * (n - 1), 2)},
        )
    if tag == "complete_multipartite":
        # Reproduced exactly as stated, including the r_1 inside the second
        # sum; the tiny-instance audit judges it against the oracle.
        parts = params
        ell = len(parts)
        total = sum(parts)
        head = sum(parts[:-1])
        inner = (ell - 1) * parts[0] - 1
        line_term = Fraction(parts[-1], 2) * head * inner
        return FormulaValue(
            "PROP2.6f",
            {"sum": total + line_term, "product": total * line_term},
        )
    raise GraphError(f"no line-pair closed form for family {tag!r}")

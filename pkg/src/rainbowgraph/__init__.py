"""Rainbow neighbourhood numbers of graphs.

A vertex yields a rainbow neighbourhood when its closed neighbourhood meets
every colour class of a chromatic colouring. This package computes the
associated graph parameter exactly (under the lexicographically-maximal
colouring convention, and as a global minimum/maximum over all chromatic
colourings), generates the graph families and named graphs the parameter is
usually studied on, and audits a catalogue of closed-form claims about it
against brute-force oracles.
"""

from .audits import AuditResult, NGBoundReport, audit, claim_ids, ng_bounds, table1_report
from .colouring import (
    CapExceededError,
    ColourPartition,
    ConventionCertificate,
    InvalidPartitionError,
    chromatic_index,
    chromatic_number,
    convention_partitions,
    count_proper_colourings,
    domination_number,
    enumerate_chromatic_partitions,
)
from .families import (
    CatalogError,
    FamilySpec,
    NamedGraphRecord,
    catalog_names,
    g_star,
    generate,
    lcf_graph,
    load_catalog,
    named_graph,
    parse_family,
    thorn_cycle,
)
from .graph import (
    DegreeProfile,
    Graph,
    GraphError,
    are_isomorphic,
    build,
    closed_neighbourhood,
    complement,
    degree_profile,
    enumerate_graphs,
    girth,
    is_bipartite,
    is_connected,
    bipartition,
    parse_graph6,
    to_dot,
    write_graph6,
)
from .rainbow import (
    FormulaValue,
    RainbowReport,
    RainbowValue,
    formula_r,
    r_conv,
    r_max,
    r_min,
    rainbow_set,
)
from .transforms import (
    ExpandedGraph,
    chithra,
    contract_broken,
    corona,
    disjoint_union,
    expanded_line_graph,
    expanded_to_dot,
    join,
    line_graph,
)

__version__ = "0.1.0"

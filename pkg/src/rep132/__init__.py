"""132-avoiding word representation of graphs.

A word w over {1..n} represents the graph on vertices 1..n whose edges are
exactly the pairs of letters that alternate in w; a 132-representant is
such a word avoiding the pattern 132. The package provides the word/graph
semantics, constructive representants (trees, paths, cycles, complete
graphs), a complete brute-force decision search over labelings, and
circle-graph witnesses via chord diagrams.
"""

from .words import (
    Word,
    Pattern,
    P132,
    P123,
    P21,
    reduce_word,
    occurrences,
    alternates,
    is_k_uniform,
    contains_pattern,
    has_132,
    catalan,
    format_word,
)
from .graphs import (
    LabeledGraph,
    Labeling,
    degree,
    complete,
    cycle,
    path,
    wheel,
    prism,
    star,
    relabel,
    identity_labeling,
    inverse_labeling,
    canonical_form,
    automorphisms,
    enumerate_graphs,
    components,
)
from .represent import (
    RepresentationCheck,
    Violation,
    graph_from_word,
    represents,
    is_132_representant,
    combine_components,
    add_isolated,
    remove_vertex_word,
)
from .constructions import (
    RootedTree,
    preorder_label,
    tree_representant,
    path_representant,
    cycle_representant,
    av132_permutations,
    kn_count,
    kn_enumerate,
    KnRepertoire,
)
from .search import (
    SearchConfig,
    SearchStats,
    SearchReport,
    search_fixed,
    search_all_labelings,
    scan_order,
    REPRESENTABLE,
    NOT_REPRESENTABLE,
    BUDGET_EXCEEDED,
)
from .circle import ChordDiagram, chords_from_word, intersection_graph, circle_witness
from .kernels import backend_name

__version__ = "0.1.0"

__all__ = [
    "Word", "Pattern", "P132", "P123", "P21",
    "reduce_word", "occurrences", "alternates", "is_k_uniform",
    "contains_pattern", "has_132", "catalan", "format_word",
    "LabeledGraph", "Labeling", "degree",
    "complete", "cycle", "path", "wheel", "prism", "star",
    "relabel", "identity_labeling", "inverse_labeling",
    "canonical_form", "automorphisms", "enumerate_graphs", "components",
    "RepresentationCheck", "Violation",
    "graph_from_word", "represents", "is_132_representant",
    "combine_components", "add_isolated", "remove_vertex_word",
    "RootedTree", "preorder_label", "tree_representant",
    "path_representant", "cycle_representant",
    "av132_permutations", "kn_count", "kn_enumerate", "KnRepertoire",
    "SearchConfig", "SearchStats", "SearchReport",
    "search_fixed", "search_all_labelings", "scan_order",
    "REPRESENTABLE", "NOT_REPRESENTABLE", "BUDGET_EXCEEDED",
    "ChordDiagram", "chords_from_word", "intersection_graph", "circle_witness",
    "backend_name",
]

"""Garside-monoid normal forms, valuations, and removable-pair detection.

The working objects are a :class:`~garside.contexts.GarsideContext`
(braid:N, dihedral:M, or a table file) and signed words over its atoms.
On top sit canonical forms and lattice operations, left valuations and
Cayley-graph order-types, removable-pair finders for trivial words, word
reversing with the seed-word counterexample search, and braid diagram
rendering.  ``python -m garside`` or the ``garside`` script exposes all
of it on the command line.
"""

from .contexts import (
    GarsideContext,
    braid_context,
    build_context,
    dihedral_context,
    table_context,
)
from .disks import (
    NO_PAIR_TRIVIAL_B4,
    RemovablePair,
    UnbraidResult,
    delete_pair,
    find_pair_dihedral,
    find_pair_simple_fraction,
    find_removable_pairs,
    is_removable_pair,
    transfer_pair,
    unbraid,
)
from .elements import (
    GroupElement,
    PositiveElement,
    complement,
    divide,
    equivalent,
    gcd,
    group_element,
    head,
    is_pure,
    is_trivial,
    lcm,
    normalize,
    phi,
    simple,
)
from .kernel import backend_name
from .render import render_diagram
from .reversing import (
    ReversingResult,
    SearchReport,
    random_trivial_word,
    reverse,
    search_counterexamples,
    seed_word,
)
from .valuation import (
    NeighbourGraph,
    OrderType,
    enumerate_order_types,
    is_neighbour,
    neighbour_graph,
    nu,
    ordered_bell,
    separation,
    type_of,
    valuation_sequence,
)
from .words import Letter, Word, format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "GarsideContext",
    "GroupElement",
    "Letter",
    "NO_PAIR_TRIVIAL_B4",
    "NeighbourGraph",
    "OrderType",
    "PositiveElement",
    "RemovablePair",
    "ReversingResult",
    "SearchReport",
    "UnbraidResult",
    "Word",
    "backend_name",
    "braid_context",
    "build_context",
    "complement",
    "delete_pair",
    "dihedral_context",
    "divide",
    "enumerate_order_types",
    "equivalent",
    "find_pair_dihedral",
    "find_pair_simple_fraction",
    "find_removable_pairs",
    "format_word",
    "gcd",
    "group_element",
    "head",
    "is_neighbour",
    "is_pure",
    "is_removable_pair",
    "is_trivial",
    "lcm",
    "neighbour_graph",
    "normalize",
    "nu",
    "ordered_bell",
    "parse_word",
    "phi",
    "random_trivial_word",
    "render_diagram",
    "reverse",
    "search_counterexamples",
    "seed_word",
    "separation",
    "simple",
    "table_context",
    "transfer_pair",
    "type_of",
    "unbraid",
    "valuation_sequence",
]

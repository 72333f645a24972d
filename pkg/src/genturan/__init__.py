"""Generalized Turán numbers for cliques, books and related patterns.

Exact constructions, unlabelled copy counting, pattern detection, Zykov
symmetrization and an exhaustive small-n oracle for ex(n, H, F).
"""

from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_labeling
from .constructions import (
    bipartite_plus_edge,
    book,
    clique_join_turan,
    complete_multipartite,
    disjoint_cliques,
    turan,
    turan_parts,
    turan_plus,
)
from .counting import (
    automorphism_count,
    copies_at_vertex,
    count_bicliques,
    count_cliques,
    count_copies,
    count_embeddings,
)
from .errors import (
    ArgumentError,
    CapacityError,
    ConsistencyError,
    GenTuranError,
    InfeasibleError,
    ParseError,
)
from .formulas import (
    CaseId,
    TheoremCase,
    best_bipartite_plus_edge,
    cliques_in_turan,
    f_value,
    predicted_ex,
    prediction,
)
from .freeness import (
    Book,
    Clique,
    DisjointCliques,
    Explicit,
    Nothing,
    UnionPair,
    contains,
    find_book,
    is_book_free,
    is_rootlet,
    witness,
)
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced,
    join,
    path_graph,
)
from .oracle import enumerate_free, ex_family_oracle, ex_oracle
from .symmetrization import Mode, restricted_step_allowed, run, symmetrize
from .verify import VerifyReport, verify

__version__ = "0.1.0"

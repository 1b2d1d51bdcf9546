"""Frustrated-triangle toolkit: counting, switching classes, exact spectra."""

__version__ = "0.1.0"

from .constructors import (
    Thm2Params,
    clique_plus_matching,
    complete_bipartite,
    counterexample_pair,
    extremal_for_edges,
    matching,
    star,
    thm2_family,
)
from .frustration import (
    f_degree_formula,
    f_k_count,
    f_pair_formula,
    f_scan,
    flip_pair_delta,
    frustrated_on_pair,
    parity_of_f,
)
from .graphs import (
    CapabilityError,
    Graph,
    Graph6Error,
    StructureProfile,
    are_isomorphic,
    complement,
    disjoint_union,
    find_isomorphism,
    flip_pair,
    from_edges,
    from_pair_bits,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
    parse_graph,
    relabel,
    structure_profile,
)
from .spectrum import (
    RestrictedSpectrum,
    SpectrumResult,
    enumerate_full,
    restricted_spectrum,
    spectrum_by_recursion,
    verify_structure,
    verify_thm1_structure,
    verify_thm2_family,
    verify_thm3,
)
from .switching import (
    Bipartition,
    SwitchWitness,
    flip_vertex,
    isolate_normal_form,
    odd_pair_count,
    switch_subset,
    switching_equivalent,
    t_exact,
)
from .theory import (
    BipartiteDistance,
    Classification,
    IntervalTable,
    bipartite_distance,
    classify_f,
    interval_superset,
    interval_table,
    max_f_for_edges,
    min_f_for_edges,
)

"""Cycle spectra of claw-free hamiltonian graphs.

Exact spectra by subset DP, the tight extremal family, constructive
certificates for spectrum lower bounds and brute-force verification sweeps.
"""

from .certify import (
    Certificate,
    CertificationError,
    PathCollection,
    certify_spectrum_lower_bound,
    classify_paths,
    insertion_cycles,
    lemma1_cycles,
    lemma2_long_cycles,
    oriented_collection,
    path_decomposition,
)
from .constructions import (
    enumerate_small_graphs,
    extremal_graph,
    extremal_hamiltonian_cycle,
    line_graph,
    random_claw_free_hamiltonian,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    decode_graph6,
    encode_graph6,
    graph_from_edges,
    graph_from_mask,
    max_degree,
    verify_cycle,
    verify_path,
)
from .hamilton import (
    HamCycle,
    find_cycle_of_length,
    find_hamiltonian_cycle,
    hamiltonian_path_alpha2,
    search_hamiltonian_cycle,
)
from .recognition import (
    abx_partition,
    find_claw,
    independence_at_most_two,
    is_bipartite,
    neighborhood_split,
)
from .spectrum import (
    Spectrum,
    check_hakimi_schmeichel,
    cycle_spectrum_exact,
    cycle_spectrum_naive,
    cycle_spectrum_partial,
    is_pancyclic,
    is_subpancyclic,
    mw_lower_bound,
    theorem1_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificationError",
    "PathCollection",
    "certify_spectrum_lower_bound",
    "classify_paths",
    "insertion_cycles",
    "lemma1_cycles",
    "lemma2_long_cycles",
    "oriented_collection",
    "path_decomposition",
    "enumerate_small_graphs",
    "extremal_graph",
    "extremal_hamiltonian_cycle",
    "line_graph",
    "random_claw_free_hamiltonian",
    "Graph",
    "Graph6Error",
    "GraphError",
    "decode_graph6",
    "encode_graph6",
    "graph_from_edges",
    "graph_from_mask",
    "max_degree",
    "verify_cycle",
    "verify_path",
    "HamCycle",
    "find_cycle_of_length",
    "find_hamiltonian_cycle",
    "hamiltonian_path_alpha2",
    "search_hamiltonian_cycle",
    "abx_partition",
    "find_claw",
    "independence_at_most_two",
    "is_bipartite",
    "neighborhood_split",
    "Spectrum",
    "check_hakimi_schmeichel",
    "cycle_spectrum_exact",
    "cycle_spectrum_naive",
    "cycle_spectrum_partial",
    "is_pancyclic",
    "is_subpancyclic",
    "mw_lower_bound",
    "theorem1_lower_bound",
]

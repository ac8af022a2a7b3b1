"""Central vertex-edge join of three graphs: distance spectra, energy and indices."""

from .errors import CveError
from .graph import (
    Graph,
    adjacency_matrix,
    central_graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    incidence_matrix,
    is_connected,
    is_regular,
    is_triangle_free,
    line_graph,
    new_graph,
    petersen,
)
from .join import CveGraph, CveParameters, cve_degree, cve_eccentricity, cve_join, cve_order, cve_size
from .spectral import (
    Spectrum,
    closed_form_d_spectrum,
    distance_energy,
    distance_spectrum,
    line_graph_spectrum_oracle,
    quotient_matrix,
    spectra_equal,
    sym_eigenvalues,
)
from .distance import all_pairs_distances, eccentricity, transmission
from .equienergetic import certify_family, cp_graph, partitions_min3, cycle_union_family, variable_part_energy
from .indices import indices_definitional, verify_indices

__version__ = "0.1.0"

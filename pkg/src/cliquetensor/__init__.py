"""Spectral radius of the r-clique tensor of a graph and related bounds."""

from .bounds import (
    BoundReport,
    ScanReport,
    bound_report,
    count_bound,
    erdos_count,
    gap_table,
    implication_gap,
    mantel_check,
    scan_extremal,
    turan_floor_bound,
)
from .cliques import CliqueSet, clique_components, clique_degree, enumerate_cliques
from .graph import (
    Graph,
    GraphFormatError,
    PartiteSpec,
    complete_multipartite,
    emit_edge_list,
    is_clique_free,
    parse_edge_list,
    random_graph,
    turan_graph,
)
from .spectral import (
    SolverOptions,
    SpectralResult,
    multipartite_rho_closed_form,
    power_iterate,
    rayleigh_maximize_oracle,
    spectral_radius,
    turan_rho,
)
from .tensor import EigenPair, apply, rayleigh, residual

__version__ = "0.1.0"

"""Eigenvalue bounds on independence numbers, with the graph families
needed to verify them: finite-field projective planes, their polarity
and incidence graphs, comparison families, an exact branch-and-bound
solver, and equality-case certification."""

from .bounds import (
    BoundReport,
    RatioCertificate,
    abound,
    abound1,
    abound2,
    er_bounds,
    general_bound,
    hoffman,
    lbound,
    lbound2,
    polarity_bound,
    ratio_certificate,
    sarnak,
    sarnak_improved,
    wq_bound,
)
from .certify import (
    coprime_complete_bipartite_check,
    gentight_check,
    hoffman_equality_certify,
    laplacian_equality_certify,
)
from .exact import AlphaResult, brute_alpha, max_independent_set
from .families import complete_bipartite, xm_graph
from .galois import Field, FieldElement, NotAPrimePower, field_arith, make_field
from .geometry import (
    Polarity,
    ProjectivePoint,
    enumerate_points,
    er_graph,
    incidence_graph_with_polarity,
)
from .graphcore import (
    Graph,
    SetParams,
    from_json,
    is_equitable,
    is_independent,
    laplacian,
    quotient,
    semiregular_bipartite,
    set_params,
    to_json,
)
from .spectra import (
    Spectrum,
    cubic_least_root,
    eigenvalues,
    extreme_eigs,
    newton_least_root,
    verify_er_charpoly,
)

__version__ = "0.1.0"

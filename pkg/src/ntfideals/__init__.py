"""Associated primes of powers of monomial ideals: normally torsion-free and
nearly normally torsion-free ideals, cover ideals of graphs, and t-spread
principal Borel ideals."""

from .decomposition import (
    IrreducibleComponent,
    alexander_dual,
    associated_primes,
    embedded_primes,
    irreducible_decomposition,
    minimal_primes,
    symbolic_power,
)
from .hypergraph import (
    Hypergraph,
    almost_bipartite_decomposition,
    classify_graph,
    cover_ideal,
    edge_ideal,
    minimal_vertex_covers,
    special_odd_cycles,
    verify_gluing,
    whisker,
)
from .integrality import integral_closure, integral_closure_of_power, is_normal_up_to, newton_member
from .monomial import (
    InputError,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    colon,
    deletion,
    intersect,
    localization,
    power,
    saturation,
)
from .parsing import parse_hypergraph, parse_ideal
from .properties import (
    ass_of_powers,
    is_nearly_ntf_up_to,
    is_ntf_up_to,
    localization_criterion_check,
    persistence_checks,
)
from .tspread import (
    BorelSpec,
    a_intervals,
    analytic_spread,
    borel_generators,
    classify_degree2,
    classify_degree3,
    classify_ntf,
    linear_relation_graph,
    relabel_shift,
)

__all__ = [name for name in dir() if not name.startswith("_")]

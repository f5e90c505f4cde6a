"""Local maximum stable sets of forests and unicycle graphs, and when they form a greedoid."""
from .classifier import (
    Agreement,
    brute_force_greedoid,
    classify_unicycle,
    cross_validate,
    cycle_psi_prefilter,
    induced_cycles,
)
from .corpus import corpus
from .errors import (
    ForestError,
    GraphError,
    InvariantViolation,
    NotUnicycleError,
    ParseError,
    SizeLimitError,
)
from .fuzz import run_fuzz
from .generators import GeneratorSpec, generate_random_unicycle, mix64
from .graph import CycleInfo, Graph, parse_edge_list, size_limits, unique_cycle
from .greedoid import (
    Chain,
    Verdict,
    Witness,
    chain_for_forest,
    chain_via_triangle,
    check_accessibility,
    check_exchange,
    find_accessibility_chain,
    is_greedoid,
)
from .kernels import BACKEND
from .matching import (
    all_max_matchings_ur,
    find_alternating_cycle,
    is_konig_egervary,
    is_uniquely_restricted,
    is_uniquely_restricted_oracle,
    matching_number,
    maximum_matchings,
)
from .stability import (
    SetFamily,
    enumerate_psi,
    extends_to_maximum,
    is_local_max_stable,
    maximum_stable_sets,
    stability_number,
)

__version__ = "0.1.0"

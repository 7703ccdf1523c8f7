"""Largest graphs of given order and diameter.

Closed-form bound, the full family of graphs attaining it, certificate-based
recognition, and exhaustive verification on small orders.
"""

from .bound import BoundBreakdown, BoundQuery, bound_breakdown, ore_max_size
from .canon import CanonicalForm, are_isomorphic, canonical_form
from .construct import (
    ExtremalParams,
    enumerate_extremal_up_to_iso,
    enumerate_params,
    realize,
)
from .errors import (
    CapacityError,
    CharacterizationError,
    DomainError,
    Graph6Error,
    InputError,
    SearchLimitError,
    ToolkitError,
)
from .g6 import decode_g6, encode_g6
from .graph import (
    UNREACHABLE,
    Graph,
    GraphBuilder,
    bfs_distances,
    diameter,
    is_clique,
    is_geodesic,
    size,
)
from .oracle import OracleReport, oracle_search, oracle_table
from .recognize import (
    Certificate,
    Choice,
    extract_certificate,
    geodesic_neighbor_lemma,
    is_extremal,
    validate_certificate,
    window_union_lemma,
)

__version__ = "0.1.0"

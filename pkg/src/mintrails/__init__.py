"""Minimal activated trails in DAGs without active cycles."""
from .dag import (
    Dag,
    ancestors,
    build_dag,
    children,
    descendants,
    induced_subgraph,
    parents,
    topological_order,
)
from .errors import (
    AntiparallelArcs,
    CycleDetected,
    DuplicateArc,
    DuplicateLabel,
    GraphError,
    HasConvergingConnection,
    InvalidQuery,
    MinTrailsError,
    NoDescendantInZ,
    NodeOutOfRange,
    NotActivated,
    NotLocal,
    ParseError,
    SelfLoop,
    UnknownCheckName,
)
from .formats import dumps_graph, graph_from_doc, graph_to_doc, parse_graph, parse_trail, to_dot
from .order import MinimalTrails, OrderResult, TrailKey, compare, minimal_trails, trail_key
from .structure import (
    ActiveCycle,
    Verdict,
    connected_or_dsep,
    decompose_local,
    find_active_cycles,
    has_active_cycle,
    has_local_relationships,
    is_active_cycle,
    local_after_removal,
)
from .trails import (
    ActivationWitness,
    ConnectionKind,
    DescendantPath,
    Direction,
    Trail,
    TrailDecomposition,
    all_trails,
    chords,
    closest_descendant,
    common_ancestor,
    connection_at,
    d_separated,
    decompose,
    enumerate_trails,
    is_activated,
    shortest_constrained_trail,
    trails_xyz,
)

__version__ = "0.1.0"

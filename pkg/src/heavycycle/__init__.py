"""Heavy-cycle toolkit.

Core objects: immutable bitmask graphs, degree-relaxed adjacency, cycle
relaxations with constructive realization, exact circumference engines,
extremal family generators, and exhaustive small-order verification.
"""

from .circumference import (
    Budget,
    CircumferenceResult,
    all_longest_cycles,
    branch_and_bound_circumference,
    circumference,
    every_longest_cycle_heavy,
    has_cycle_through_at_least,
    has_heavy_cycle_brute,
    longest_cycle_through_dp,
    subset_dp_circumference,
)
from .enumeration import (
    are_isomorphic,
    automorphism_generators,
    canonical_cert,
    canonical_graph,
    canonical_graph6,
    enumerate_connected,
)
from .extremal import ExtremalParams, FamilyReport, generate, verify_family
from .graphs import (
    Graph,
    Graph6Error,
    VertexSet,
    articulation_points,
    biconnected_component_masks,
    distance,
    from_graph6,
    induced,
    is_connected,
    is_two_connected,
    to_graph6,
)
from .harness import SweepConfig, analyze, run_sweep
from .heavy import ebar, heavy_vertices, is_heavy_cycle, is_pattern_heavy
from .ocycle import (
    AcyclicTree,
    CertificateError,
    CycleSeq,
    InvalidSequenceError,
    OCycleSeq,
    OneHeavyStarCut,
    OPathSeq,
    RealizationError,
    TwoHeavyBridge,
    deficit,
    heavy_cycle_or_certificate,
    realize,
    structural_certificate,
    validate_certificate,
)
from .patterns import (
    PatternWitness,
    induced_occurrences,
    is_pattern_free,
    pattern_by_name,
)
from .theorems import (
    TheoremReport,
    fan_condition,
    find_obstruction,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
    verify_theorem5_necessity,
)

__all__ = [
    "AcyclicTree",
    "Budget",
    "CertificateError",
    "CircumferenceResult",
    "CycleSeq",
    "ExtremalParams",
    "FamilyReport",
    "Graph",
    "Graph6Error",
    "InvalidSequenceError",
    "OCycleSeq",
    "OPathSeq",
    "OneHeavyStarCut",
    "PatternWitness",
    "RealizationError",
    "SweepConfig",
    "TheoremReport",
    "TwoHeavyBridge",
    "VertexSet",
    "all_longest_cycles",
    "analyze",
    "are_isomorphic",
    "articulation_points",
    "automorphism_generators",
    "biconnected_component_masks",
    "branch_and_bound_circumference",
    "canonical_cert",
    "canonical_graph",
    "canonical_graph6",
    "circumference",
    "deficit",
    "distance",
    "ebar",
    "enumerate_connected",
    "every_longest_cycle_heavy",
    "fan_condition",
    "find_obstruction",
    "from_graph6",
    "generate",
    "has_cycle_through_at_least",
    "has_heavy_cycle_brute",
    "heavy_cycle_or_certificate",
    "heavy_vertices",
    "induced",
    "induced_occurrences",
    "is_connected",
    "is_heavy_cycle",
    "is_pattern_free",
    "is_pattern_heavy",
    "is_two_connected",
    "longest_cycle_through_dp",
    "pattern_by_name",
    "realize",
    "run_sweep",
    "structural_certificate",
    "subset_dp_circumference",
    "to_graph6",
    "validate_certificate",
    "verify_family",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem4",
    "verify_theorem5_necessity",
]

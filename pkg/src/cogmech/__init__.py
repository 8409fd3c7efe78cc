"""Digraph models of cognition mechanisms.

Walk, path and cycle enumeration; units and uniters; ground (self)
detection; characterization in three modes; formization tables with
permutation-aware equivalence; and evolution of edited mechanisms.
"""

__version__ = "0.1.0"

from .characterization import (
    CharacterizationMode,
    CharacterizationReport,
    StandardCharacterization,
    characterize,
    hybrid_completion,
    standard_cognition_characterization,
)
from .digraph import (
    Condensation,
    Digraph,
    MechanismValidationReport,
    Status,
    StructureFlags,
    build_digraph,
    induced_subdigraph,
    is_connected,
    is_subdigraph,
    scc_condensation,
    structure_flags,
    union_digraphs,
    validate_mechanism,
)
from .dot import NO_GROUND, arc_color, emit_dot, vertex_colors
from .enumeration import (
    Limits,
    WalkListing,
    all_cycles,
    all_paths,
    cycle_counts,
    diversal_check,
    full_listing,
    path_counts,
    unit,
    uniter,
)
from .errors import (
    CogmechError,
    DigraphError,
    FormatError,
    ModeMismatchError,
    NoGroundError,
    NotAGroundError,
    ResourceLimitError,
    TableSizeError,
    UncoverableError,
    WalkError,
)
from .formization import (
    Equivalence,
    FormizationMode,
    FormizationTable,
    LabelAssignment,
    formization_equivalent,
    formize,
    recover_labels,
)
from .ground import (
    BaseFeatureReport,
    GroundPartition,
    base_characteristics,
    find_ground,
    partition_from_candidate,
)
from .mechfile import ArcDiff, Edit, EditScript, MechFile, apply_edits, diff_digraphs, emit_mech, parse_mech
from .tables import emit_formization, emit_walk_listing, parse_formization_csv
from .walks import Closure, Walk, WalkKind, carrying_net, classify_walk, join_walks, make_walk, steady_instances


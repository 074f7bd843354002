"""Structural analysis of (P5, paraglider)-free graphs."""

from .classes import (
    ExpansionMap,
    GReductionTrace,
    GStep,
    HDecomposition,
    embed_into_base,
    find_good_stable_set,
    find_stable_with_perfect_rest,
    g_membership,
    is_awesome,
    is_good_stable_set,
    recognize_c5_expansion,
    recognize_h_member,
    replay_trace,
    validate_expansion,
    validate_h_decomposition,
)
from .decomposition import (
    find_clique_cutset,
    find_comparable_pair,
    find_homogeneous_set,
    find_universal,
    is_atom,
    maximal_strong_modules,
    minimal_separators,
    module_closure,
)
from .outcome import (
    C5ExpansionCase,
    ClebschSubgraph,
    CliqueCutset,
    ComparablePair,
    GoodStableSet,
    HMember,
    Outcome,
    Perfect,
    SmallAtom,
    StablePerfectRest,
    Universal,
    structure_outcome,
)
from .partition import C5Partition, Violation, c5_partition, is_dominating, validate_partition_properties

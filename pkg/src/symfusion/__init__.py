"""Tight fusion frames with symmetric- and alternating-group symmetry.

The package splits into combinatorics (partitions and standard tableaux),
representation matrices for S_n and A_n, ensemble analysis against the Welch
bounds, and the construction recipes plus their exact rational certificates.
"""

from .tableaux import (
    Box,
    Partition,
    StandardTableau,
    apply_adjacent_transposition,
    axial_distance,
    box_axial_distance,
    content,
    diagonal_count,
    dimension,
    down_set,
    embed,
    enumerate_standard_tableaux,
    hook_length,
    is_symmetric,
    make_partition,
    partitions_of,
    row_superstandard,
    transpose,
    transpose_tableau,
    up_set,
)
from .permutations import (
    Permutation,
    permutation_word,
    transversal_an,
    transversal_sn,
)
from .symrep import (
    adjacent_transposition_matrix,
    branching_isometry,
    rep_apply,
    rep_matrix,
)
from .altrep import (
    associator_unitary,
    an_generator_matrix,
    an_rep_matrix,
    eigenspace_injection,
    field_for,
    pair_associator_unitary,
    pair_branching_isometry,
    reference_permutation_sign,
    reference_tableau,
    symmetric_branching_isometry,
    tab_star,
)
from .fusion import (
    CertificationReport,
    FusionEnsemble,
    automorphism_witness,
    certify,
    cross_gram,
    fusion_frame_operator,
    fusion_gram,
    isoclinism_check,
    naimark_complement,
    pairwise_distances,
    principal_angles,
    tightness_residual,
    welch_alpha,
    welch_bounds,
)
from .constructions import (
    ExactIsoclinicCertificate,
    LayerSelection,
    alternating_ensemble,
    alternating_parameters,
    an_table,
    canonical_subsets,
    classify_single_layer,
    decomposition_check,
    distance_condition,
    four_part_family,
    generic_orbit_ensemble,
    isoclinic_certificate,
    multi_layer_ensemble,
    search_isoclinic,
    single_layer_ensemble,
    single_layer_parameters,
    single_layer_shapes,
    sn_table,
    three_part_family,
)
from .ensemble_io import load_ensemble, save_ensemble

__version__ = "0.1.0"

__all__ = [
    "Box",
    "Partition",
    "StandardTableau",
    "Permutation",
    "FusionEnsemble",
    "CertificationReport",
    "LayerSelection",
    "ExactIsoclinicCertificate",
    "adjacent_transposition_matrix",
    "alternating_ensemble",
    "alternating_parameters",
    "an_generator_matrix",
    "an_rep_matrix",
    "an_table",
    "apply_adjacent_transposition",
    "associator_unitary",
    "automorphism_witness",
    "axial_distance",
    "box_axial_distance",
    "branching_isometry",
    "canonical_subsets",
    "certify",
    "classify_single_layer",
    "content",
    "cross_gram",
    "decomposition_check",
    "diagonal_count",
    "dimension",
    "distance_condition",
    "down_set",
    "eigenspace_injection",
    "embed",
    "enumerate_standard_tableaux",
    "field_for",
    "four_part_family",
    "fusion_frame_operator",
    "fusion_gram",
    "generic_orbit_ensemble",
    "hook_length",
    "is_symmetric",
    "isoclinic_certificate",
    "isoclinism_check",
    "load_ensemble",
    "make_partition",
    "multi_layer_ensemble",
    "naimark_complement",
    "pair_associator_unitary",
    "pair_branching_isometry",
    "pairwise_distances",
    "partitions_of",
    "permutation_word",
    "principal_angles",
    "reference_permutation_sign",
    "reference_tableau",
    "rep_apply",
    "rep_matrix",
    "row_superstandard",
    "save_ensemble",
    "search_isoclinic",
    "single_layer_ensemble",
    "single_layer_parameters",
    "single_layer_shapes",
    "sn_table",
    "symmetric_branching_isometry",
    "tab_star",
    "three_part_family",
    "tightness_residual",
    "transpose",
    "transpose_tableau",
    "transversal_an",
    "transversal_sn",
    "up_set",
    "welch_alpha",
    "welch_bounds",
]

"""Exact-arithmetic toolkit for path algebras of finite acyclic quivers:
classification of quivers by representation type, enumeration of support
tau-tilting pairs and the finite lattice of functorially finite torsion
classes in the Dynkin case, and witness constructions showing that
lattice structure fails beyond two vertices outside Dynkin type."""

from .linalg import Matrix, column_space_contains, extend_to_basis, symmetric_definiteness
from .quiver import (
    Quiver,
    QuiverClass,
    QuiverError,
    QuiverSyntaxError,
    classify,
    classify_by_shape,
    find_witness_subquiver,
    full_subquiver,
    opposite,
    parse_quiver,
    theorem_main_decision,
    tits_form,
    tits_matrix,
)
from .forms import (
    FormsContext,
    cartan_matrix,
    coxeter_matrix,
    euler_form,
    forms_context,
    tau_dimvec,
    tau_inverse_dimvec,
    triple_quiver,
    wild_triple_euler_value,
)
from .rep import (
    Morphism,
    Rep,
    ar_translate,
    ar_translate_inverse,
    direct_sum,
    dualize,
    enumerate_indecomposables,
    exists_surjection,
    ext1_dim,
    ext1_via_presentation,
    extension_realize,
    gen_contains,
    hom_basis,
    hom_dim,
    injective_rep,
    is_brick,
    is_isomorphic,
    is_rigid,
    is_tau_rigid,
    projective_presentation,
    projective_rep,
    reflect,
    simple_rep,
    zero_rep,
)
from .taurig import (
    Catalog,
    SpotcheckReport,
    SttPair,
    catalog,
    enumerate_stt,
    enumerate_stt_exhaustive,
    enumerate_stt_mutation,
    fac_class,
    is_compatible,
    mutations,
    pair_module,
    stt_pairs_to_json,
    surjection_table,
    tc_join,
    tc_left_perp,
    tc_meet,
    tc_perp,
    torsion_axiom_spotcheck,
)
from .poset import FinitePoset, PosetError, build_poset, poset_from_json, torsion_poset
from .families import (
    KroneckerReport,
    KroneckerWindow,
    NonFFReport,
    TowerLevel,
    WildWitness,
    WitnessReport,
    build_wild_witness,
    case_quiver,
    detect_case,
    kronecker_chain_check,
    kronecker_quiver,
    kronecker_window,
    nonff_evidence,
    uniserial_tower,
    verify_witness,
)

__all__ = [
    "Matrix",
    "column_space_contains",
    "extend_to_basis",
    "symmetric_definiteness",
    "Quiver",
    "QuiverClass",
    "QuiverError",
    "QuiverSyntaxError",
    "classify",
    "classify_by_shape",
    "find_witness_subquiver",
    "full_subquiver",
    "opposite",
    "parse_quiver",
    "theorem_main_decision",
    "tits_form",
    "tits_matrix",
    "FormsContext",
    "cartan_matrix",
    "coxeter_matrix",
    "euler_form",
    "forms_context",
    "tau_dimvec",
    "tau_inverse_dimvec",
    "triple_quiver",
    "wild_triple_euler_value",
    "Morphism",
    "Rep",
    "ar_translate",
    "ar_translate_inverse",
    "direct_sum",
    "dualize",
    "enumerate_indecomposables",
    "exists_surjection",
    "ext1_dim",
    "ext1_via_presentation",
    "extension_realize",
    "gen_contains",
    "hom_basis",
    "hom_dim",
    "injective_rep",
    "is_brick",
    "is_isomorphic",
    "is_rigid",
    "is_tau_rigid",
    "projective_presentation",
    "projective_rep",
    "reflect",
    "simple_rep",
    "zero_rep",
    "Catalog",
    "SpotcheckReport",
    "SttPair",
    "catalog",
    "enumerate_stt",
    "enumerate_stt_exhaustive",
    "enumerate_stt_mutation",
    "fac_class",
    "is_compatible",
    "mutations",
    "pair_module",
    "stt_pairs_to_json",
    "surjection_table",
    "tc_join",
    "tc_left_perp",
    "tc_meet",
    "tc_perp",
    "torsion_axiom_spotcheck",
    "FinitePoset",
    "PosetError",
    "build_poset",
    "poset_from_json",
    "torsion_poset",
    "KroneckerReport",
    "KroneckerWindow",
    "NonFFReport",
    "TowerLevel",
    "WildWitness",
    "WitnessReport",
    "build_wild_witness",
    "case_quiver",
    "detect_case",
    "kronecker_chain_check",
    "kronecker_quiver",
    "kronecker_window",
    "nonff_evidence",
    "uniserial_tower",
    "verify_witness",
]

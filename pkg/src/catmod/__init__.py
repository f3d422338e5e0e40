"""catmod: finite c-groups, crossed modules of c-groups, finite
categorical groups, and the executable equivalence between the latter
two."""

from __future__ import annotations

from .catgroup import (
    CatGroup,
    CatGroupFunctor,
    arrow_inverses,
    arrows_cgroup,
    arrows_ker_d0,
    arrows_star_zero,
    check_comp_via_add,
    check_ker_commute,
    coherence_diagnostic,
    compose_functors,
    identity_functor,
    ker_d1_subset,
    kernel_extension,
    objects_cgroup,
    special_iso_closure,
    star_action,
    validate_catgroup,
    validate_functor,
    weak_special_iso_pairs,
)
from .cgroup import (
    CGroup,
    CGroupMorphism,
    CSubset,
    c_image,
    c_kernel,
    compose_morphisms,
    from_group,
    identity_morphism,
    inc,
    incs,
    induced_cgroup,
    is_c_isomorphism,
    is_connected,
    is_normal,
    is_perfect,
    lift_from_surjection,
    semidirect_product,
    semidirect_projection,
    special_closure,
    validate_cgroup,
    validate_morphism,
)
from .crossmod import (
    CAction,
    CCrossedModule,
    CrossedModuleMorphism,
    compose_cm,
    identity_cm,
    inclusion_crossed_module,
    is_cssc,
    is_special,
    is_strict,
    relational_weak_special,
    special_lift,
    trivial_action,
    validate_action,
    validate_cm_morphism,
    validate_crossed_module,
)
from .equivalence import (
    Corpus,
    RoundTripReport,
    build_F,
    build_P,
    build_phi,
    build_psi,
    chosen_special_section,
    verify_LT,
    verify_LT_naturality,
    verify_TL,
    verify_TL_naturality,
    verify_equivalence,
)
from .errors import (
    CatmodError,
    ChoiceOutsideFiber,
    ElementOutsideParent,
    InvalidAction,
    MalformedTable,
    NoLift,
    NonUniqueLift,
    NotAGroup,
    NotAGroupoid,
    NotAbelian,
    NotComposable,
    NotCssc,
    NotPerfectOrNormal,
    NotSpecialLeg,
    NotSpecialPair,
    ParseError,
    SourceTargetMismatch,
    TooManyArrows,
    VersionMismatch,
)
from .functors import (
    GArrow,
    L0,
    L1,
    T0,
    T1,
    TCatGroup,
    canonicalize,
    t_add,
    t_compose,
    t_identity,
    t_inverse,
    t_opposite,
    t_special_iso,
)
from .report import CheckResult, ValidationReport
from .toolkit import (
    corpus_catgroups,
    corpus_cm_morphisms,
    corpus_functors,
    corpus_modules,
    cyclic_table,
    default_corpus,
    from_doc,
    gen_brown_spencer,
    gen_delooping,
    gen_discrete,
    gen_skeletal_cocycle,
    load_corpus,
    parse,
    serialize,
    standard_cocycle,
    to_doc,
    write_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "CatGroup",
    "CatGroupFunctor",
    "CatmodError",
    "CAction",
    "CCrossedModule",
    "CGroup",
    "CGroupMorphism",
    "CheckResult",
    "ChoiceOutsideFiber",
    "Corpus",
    "CrossedModuleMorphism",
    "CSubset",
    "ElementOutsideParent",
    "GArrow",
    "InvalidAction",
    "L0",
    "L1",
    "MalformedTable",
    "NoLift",
    "NonUniqueLift",
    "NotAbelian",
    "NotAGroup",
    "NotAGroupoid",
    "NotComposable",
    "NotCssc",
    "NotPerfectOrNormal",
    "NotSpecialLeg",
    "NotSpecialPair",
    "ParseError",
    "RoundTripReport",
    "SourceTargetMismatch",
    "T0",
    "T1",
    "TCatGroup",
    "TooManyArrows",
    "ValidationReport",
    "VersionMismatch",
    "arrow_inverses",
    "arrows_cgroup",
    "arrows_ker_d0",
    "arrows_star_zero",
    "build_F",
    "build_P",
    "build_phi",
    "build_psi",
    "c_image",
    "c_kernel",
    "canonicalize",
    "check_comp_via_add",
    "check_ker_commute",
    "chosen_special_section",
    "coherence_diagnostic",
    "compose_cm",
    "compose_functors",
    "compose_morphisms",
    "corpus_catgroups",
    "corpus_cm_morphisms",
    "corpus_functors",
    "corpus_modules",
    "cyclic_table",
    "default_corpus",
    "from_doc",
    "from_group",
    "gen_brown_spencer",
    "gen_delooping",
    "gen_discrete",
    "gen_skeletal_cocycle",
    "identity_cm",
    "identity_functor",
    "identity_morphism",
    "inc",
    "incs",
    "inclusion_crossed_module",
    "induced_cgroup",
    "is_c_isomorphism",
    "is_connected",
    "is_cssc",
    "is_normal",
    "is_perfect",
    "is_special",
    "is_strict",
    "ker_d1_subset",
    "kernel_extension",
    "lift_from_surjection",
    "load_corpus",
    "objects_cgroup",
    "parse",
    "relational_weak_special",
    "semidirect_product",
    "semidirect_projection",
    "serialize",
    "special_closure",
    "special_iso_closure",
    "special_lift",
    "standard_cocycle",
    "star_action",
    "t_add",
    "t_compose",
    "t_identity",
    "t_inverse",
    "t_opposite",
    "t_special_iso",
    "to_doc",
    "trivial_action",
    "validate_action",
    "validate_catgroup",
    "validate_cgroup",
    "validate_cm_morphism",
    "validate_crossed_module",
    "validate_functor",
    "validate_morphism",
    "verify_equivalence",
    "verify_LT",
    "verify_LT_naturality",
    "verify_TL",
    "verify_TL_naturality",
    "weak_special_iso_pairs",
    "write_corpus",
]

"""extbar: exact Ext tables for twisted exponential functors, computed from
weight slices of iterated bar constructions and cross-checked against
closed-form predictions."""

from .algebra import (
    DIVIDED,
    EXTERIOR,
    FLAVORS,
    SYMMETRIC,
    Bidegree,
    FreeAlgebra,
    InternalAssertionError,
    WdgAlgebra,
    algebras_agree,
    check_one_eps_commutative,
    divided_power_composition_coefficient,
    make_free_algebra,
    regrade,
    tensor_signed,
    weight_twist,
)
from .bar import BarAlgebra, bar, iterate_bar, suspension_chain
from .extract import ExtTable, bar_source_algebra, ext_table_via_bar, hom_dimension
from .homology import (
    AbelianGroup,
    FpHomologyRing,
    dimensions_mod_p_from_integral,
    homology_over_Fp,
    homology_over_Z,
    homology_ring_over_Fp,
    integral_homology_table,
    kunneth,
    kunneth_fold,
    p_primary_unitalize,
    smith_normal_form,
)
from .koszul import (
    KoszulSpec,
    build_X0,
    build_Xp,
    build_koszul,
    koszul_homology_closed_form,
    koszul_kernels_dims,
    predicted_bar_homology,
    xp_homology_table,
)
from .predict import (
    FreeAlgebraSpec,
    GeneratorFamily,
    cartan_field_generators,
    duality_flip,
    expand_by_even_offsets,
    ext_field_predict,
    ext_integral_predict,
    ext_twisted_predict,
    poincare_dims,
    twist_shift,
)
from .rings import GF, Ring, ZZ, parse_ring
from .verify import SuiteResult, run_suite
from .words import (
    PPair,
    enumerate_p_pairs,
    enumerate_words,
    is_admissible,
    is_admissible_mod2,
    pair_partner,
    word_degree,
    word_height,
    word_twisting,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BarAlgebra",
    "Bidegree",
    "DIVIDED",
    "EXTERIOR",
    "FLAVORS",
    "SYMMETRIC",
    "algebras_agree",
    "divided_power_composition_coefficient",
    "ExtTable",
    "FpHomologyRing",
    "FreeAlgebra",
    "FreeAlgebraSpec",
    "GF",
    "GeneratorFamily",
    "InternalAssertionError",
    "KoszulSpec",
    "PPair",
    "Ring",
    "SuiteResult",
    "WdgAlgebra",
    "ZZ",
    "bar",
    "bar_source_algebra",
    "build_X0",
    "build_Xp",
    "build_koszul",
    "cartan_field_generators",
    "check_one_eps_commutative",
    "dimensions_mod_p_from_integral",
    "duality_flip",
    "enumerate_p_pairs",
    "enumerate_words",
    "expand_by_even_offsets",
    "ext_field_predict",
    "ext_integral_predict",
    "ext_table_via_bar",
    "ext_twisted_predict",
    "hom_dimension",
    "homology_over_Fp",
    "homology_over_Z",
    "homology_ring_over_Fp",
    "integral_homology_table",
    "is_admissible",
    "is_admissible_mod2",
    "iterate_bar",
    "koszul_homology_closed_form",
    "koszul_kernels_dims",
    "kunneth",
    "kunneth_fold",
    "make_free_algebra",
    "p_primary_unitalize",
    "pair_partner",
    "parse_ring",
    "poincare_dims",
    "predicted_bar_homology",
    "regrade",
    "run_suite",
    "smith_normal_form",
    "suspension_chain",
    "tensor_signed",
    "twist_shift",
    "weight_twist",
    "word_degree",
    "word_height",
    "word_twisting",
    "xp_homology_table",
]

"""Binary SLCE sequences: generation, linear complexity, and exact
character-sum divisibility criteria for root multiplicities."""

from .cyclo import (
    Character,
    CycInt,
    IdealSpec,
    char_value,
    cyclotomic_polynomial,
    gauss_sum_numeric,
    ideal_membership,
    jacobi_sum,
    k_sum,
    quadratic_gauss_closed,
    reduce_mod_P,
    semiprimitive_gauss_closed,
)
from .criteria import (
    AnalysisContext,
    CriterionRecord,
    MultiplicityProfile,
    SemiprimitiveParams,
    admissible_contexts,
    coset_sum,
    derivative_vanishes_direct,
    lemma1_check,
    make_context,
    multiplicity_profile,
    necessary_condition_check,
    prop_check,
    run_verify,
    semiprimitive_params,
    semiprimitive_predict,
    thm1_check,
    thm2_check,
    thm3_check,
)
from .ff import (
    DEFAULT_SIZE_CAP,
    ExtField,
    FieldElement,
    ResidueField,
    build_field,
    build_residue_field,
    dlog,
)
from .polybin import (
    BinaryPoly,
    LinearComplexityResult,
    berlekamp_massey,
    binom_mod2,
    bit_length_h,
    factor_phi_mod2,
    hasse_derivative,
    index_set,
    lc_via_gcd,
    poly_gcd,
    root_multiplicity,
)
from .seq import (
    SlceSequence,
    autocorrelation,
    balance_report,
    characteristic_poly,
    generate_slce,
    sequence_from_json,
)

__version__ = "0.1.0"

"""growthlab: exact measurements of sum-set and product-set growth for
structured sets in totally real number rings, prime fields, and polynomial
section spaces over F_q, plus the explicit-constant pipeline that balances
the additive and multiplicative savings.
"""

from .bounds import (
    ExplicitConstants,
    OptimizationResult,
    coefficient_bundle,
    derived_eps,
    ff_exponent_conditions,
    fq_entropy,
    optimize_c,
    saving_at,
)
from .boxes import (
    AdditiveBoxQuery,
    LogBoxQuery,
    check_ball_bounds,
    enum_additive_box,
    enum_unit_box,
    separation_check,
    slab_volume,
)
from .construct import (
    GPConstruction,
    build_GP,
    build_P,
    build_mult_only,
    verify_gp_envelopes,
    verify_mult_envelopes,
)
from .field import (
    AlgInt,
    FieldContext,
    FieldSpec,
    decide_cmp,
    embed,
    is_unit,
    make_field,
    norm,
    regulator_rank1,
)
from .funcfield import SectionSet, build_A_ff, build_G_ff, build_P_ff, ff_growth_report, ff_to_rational
from .linrel import SolutionQuery, count_solutions, is_nondegenerate, pigeonhole_report
from .residue import SplitPrimeWitness, find_split_primes, reduce_set, stability_threshold
from .sets import (
    ElementSet,
    GrowthReport,
    PolyAmbient,
    PrimeFieldAmbient,
    RingAmbient,
    additive_energy,
    growth_report,
    k_fold_product,
    k_fold_sum,
    productset,
    representation_energy_k,
    sumset,
)

__version__ = "0.1.0"

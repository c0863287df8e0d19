"""apolarity-lab: exact h-vectors of level algebra presentations over a prime
field, generic quotients of truncations, and two-sided bounds on the
h-vectors of those quotients.

A presentation is a list of homogeneous forms of one degree e in the dual
variables y_1..y_r; differentiation by the x_i computes the graded dimensions
(the h-vector) of the corresponding graded quotient algebra. All arithmetic
is exact modulo a user-chosen prime, large by default so that random
instances behave like generic ones.
"""

from .bounds import (
    BoundsReport,
    ContainmentCheck,
    bounds_report,
    check_within,
    lower_bound,
    upper_bound,
)
from .constructions import (
    GENERIC,
    PowerSumSpec,
    Remark5Params,
    compressed_hvector,
    expected_remark5_h,
    expected_remark5_quotient_h,
    generic_forms_presentation,
    power_sum_presentation,
    remark5_family,
    remark5_upper_sharp,
    remark6_designated_quotient,
    remark6_pair,
)
from .errors import (
    ApolarityError,
    DegreeExceeded,
    DegreeOutOfRange,
    DependentGenerators,
    GenericityFailure,
    IndexOutOfRange,
    InvalidParameter,
    MixedDegrees,
    MixedVariableCounts,
    ParseError,
    RaggedInput,
    ShapeMismatch,
    TypeTooLarge,
    VariableMismatch,
    ZeroForm,
    ZeroInverse,
)
from .field import DEFAULT_PRIME, PrimeField, SeededRng, derive_seed, is_prime
from .forms import (
    Form,
    degree_dimension,
    differentiate,
    monomial_rank,
    monomial_unrank,
    monomials_of_degree,
    power_of_linear_form,
    sum_forms,
)
from .hvector import HVector
from .inverse_system import (
    DerivativeSpace,
    LevelPresentation,
    derivative_space,
    generic_quotient,
    hvector,
    truncation,
    truncation_basis,
    validate_level,
)
from .linalg import ReducedBasis, active_kernel, random_combinations, rank_of_span, rref
from .serialization import (
    dump_presentation,
    load_presentation,
    parse_presentation,
    save_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "ApolarityError",
    "BoundsReport",
    "ContainmentCheck",
    "DEFAULT_PRIME",
    "DegreeExceeded",
    "DegreeOutOfRange",
    "DependentGenerators",
    "DerivativeSpace",
    "Form",
    "GENERIC",
    "GenericityFailure",
    "HVector",
    "IndexOutOfRange",
    "InvalidParameter",
    "LevelPresentation",
    "MixedDegrees",
    "MixedVariableCounts",
    "ParseError",
    "PowerSumSpec",
    "PrimeField",
    "RaggedInput",
    "ReducedBasis",
    "Remark5Params",
    "SeededRng",
    "ShapeMismatch",
    "TypeTooLarge",
    "VariableMismatch",
    "ZeroForm",
    "ZeroInverse",
    "active_kernel",
    "bounds_report",
    "check_within",
    "compressed_hvector",
    "degree_dimension",
    "derivative_space",
    "derive_seed",
    "differentiate",
    "dump_presentation",
    "expected_remark5_h",
    "expected_remark5_quotient_h",
    "generic_forms_presentation",
    "generic_quotient",
    "hvector",
    "is_prime",
    "load_presentation",
    "lower_bound",
    "monomial_rank",
    "monomial_unrank",
    "monomials_of_degree",
    "parse_presentation",
    "power_of_linear_form",
    "power_sum_presentation",
    "random_combinations",
    "rank_of_span",
    "remark5_family",
    "remark5_upper_sharp",
    "remark6_designated_quotient",
    "remark6_pair",
    "rref",
    "save_presentation",
    "sum_forms",
    "truncation",
    "truncation_basis",
    "upper_bound",
    "validate_level",
    "__version__",
]

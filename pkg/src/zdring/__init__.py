"""Exact zero-divisor computations in integral group rings of computable groups.

The package models five group families in canonical form, does exact
arithmetic in their integral group rings, differentiates free-group words,
and constructs, verifies, and classifies annihilating pairs: the
commutator-power pair over the class-2 exponent-n model, the unit-twisted
pairs over free products of cyclic groups, and augmentation-kernel pairs
over finite groups.
"""

from .groups import (
    AntinormalityReport,
    CyclicGroupSpec,
    CyclicSubgroup,
    FiniteTableSpec,
    FreeGroupSpec,
    FreeProductSpec,
    GroupElement,
    GroupSpec,
    Nil2Spec,
    commutator,
    enumerate_elements,
    is_antinormal_bounded,
    load_table,
    parse_table,
)
from .ring import RingElement, geometric_sum, geometric_sum_from_one
from .fox import (
    fox_derivative,
    fox_power_rule_check,
    fundamental_identity_check,
    theta,
)
from .zdlab import (
    ORIENT_DIFF_SUM,
    ORIENT_SUM_DIFF,
    CosetReport,
    PrimitiveCheckResult,
    SearchSpace,
    TrivialCheckResult,
    TrivialityCertificate,
    UnitCatalogEntry,
    ZeroDivisorPair,
    annihilator_left,
    annihilator_right,
    candidate_torsion_elements,
    construct_lemma3,
    construct_theorem1,
    construct_theorem2_finite,
    coset_report,
    default_unit_catalog,
    generated_subgroup,
    integer_kernel,
    lemma3_unit,
    primitive_pair_check,
    reduce_to_standard_freeproduct,
    solve_A_eq_X_times,
    solve_B_eq_times_Y,
    trivial_pair_check,
)
from .cli import (
    ExpressionError,
    GroupSpecError,
    parse_group_spec,
    parse_ring_expr,
    run_command,
)

__version__ = "0.1.0"

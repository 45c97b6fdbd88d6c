"""Vertex-regular 1-factorizations of Cayley graphs on computable infinite groups.

The package builds perfect-matching decompositions of infinite Cayley graphs
(complete graphs, complete equipartite graphs, and general symmetric
connection sets whose non-involution part is empty or of full cardinality),
answers factor and partner queries lazily with bounded work, embeds given
regular factorizations via product lifts, and verifies every claimed property
by brute force on finite windows.
"""

from .cardinals import ALEPH_0, Cardinal, card_div, card_divides, card_mul, parse_cardinal
from .connsets import (
    ConnectionSet,
    FreePartClass,
    SplitSets,
    all_nonzero,
    classify,
    complement_of_subgroup,
    explicit_set,
    parse_connection_spec,
    predicate_set,
    split_involutions,
)
from .errors import (
    DifferenceAbsent,
    DivisibilityViolation,
    EncodingError,
    FinitenessViolation,
    GroupFinite,
    IndexOutOfRange,
    InvalidFactorId,
    InvolutionInU,
    NotAnEdge,
    NotInU,
    ParseError,
    RegfactError,
    SearchBudgetExceeded,
    ShapeMismatch,
    SymmetryViolation,
    UnsupportedByTheorem,
)
from .export import factor_table, render_dot, render_json, render_table
from .factorization import (
    FactorId,
    RegularFactorization,
    build,
    complete_equipartite,
    inv_factor,
    lifted_factor,
    trans_factor,
)
from .greedy import BaseFactorBuilder, FrozenBase, StepRecord, new_builder
from .groups import (
    DirectProduct,
    FiniteCyclic,
    FreeGroup,
    GroupOracle,
    Integers,
    InfiniteDihedral,
    SubgroupSpec,
    coset_key,
    cyclic_subgroup,
    direct_product,
    integer_multiples,
    parse_group_spec,
    parse_subgroup_spec,
    product_subgroup,
    trivial_subgroup,
    whole_subgroup,
)
from .subfact import (
    LiftedFactorization,
    NestedFactorization,
    TableFactorization,
    lift,
    nested,
    table_from_json,
)
from .verify import (
    WindowReport,
    check_part_closed,
    oracle_partition,
    verify_window,
    window_elements,
)

__all__ = [
    "ALEPH_0",
    "BaseFactorBuilder",
    "Cardinal",
    "ConnectionSet",
    "DifferenceAbsent",
    "DirectProduct",
    "DivisibilityViolation",
    "EncodingError",
    "FactorId",
    "FiniteCyclic",
    "FinitenessViolation",
    "FreeGroup",
    "FrozenBase",
    "GroupFinite",
    "GroupOracle",
    "FreePartClass",
    "IndexOutOfRange",
    "Integers",
    "InfiniteDihedral",
    "InvalidFactorId",
    "InvolutionInU",
    "LiftedFactorization",
    "NestedFactorization",
    "NotAnEdge",
    "NotInU",
    "ParseError",
    "RegfactError",
    "RegularFactorization",
    "SearchBudgetExceeded",
    "ShapeMismatch",
    "SplitSets",
    "StepRecord",
    "SubgroupSpec",
    "SymmetryViolation",
    "TableFactorization",
    "UnsupportedByTheorem",
    "WindowReport",
    "all_nonzero",
    "build",
    "card_div",
    "card_divides",
    "card_mul",
    "check_part_closed",
    "classify",
    "complement_of_subgroup",
    "complete_equipartite",
    "coset_key",
    "cyclic_subgroup",
    "direct_product",
    "explicit_set",
    "factor_table",
    "integer_multiples",
    "inv_factor",
    "lift",
    "lifted_factor",
    "nested",
    "new_builder",
    "oracle_partition",
    "parse_cardinal",
    "parse_connection_spec",
    "parse_group_spec",
    "parse_subgroup_spec",
    "predicate_set",
    "product_subgroup",
    "render_dot",
    "render_json",
    "render_table",
    "split_involutions",
    "table_from_json",
    "trans_factor",
    "trivial_subgroup",
    "verify_window",
    "whole_subgroup",
    "window_elements",
]

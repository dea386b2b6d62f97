"""Exact computation in the inverse monoid of cofinite monotone partial
bijections of the positive integers, its bicyclic-monoid skeleton, and two
classical enlargements (adjoined zero, integer adjunction)."""

from .core import (
    CofMap,
    GapSet,
    IDENTITY,
    canonical_leq,
    compose,
    dom_tail_start,
    evaluate,
    from_dict,
    gapset,
    invert,
    is_idempotent,
    natural_leq,
    preimage,
    ran_tail_start,
    shift,
    shift_threshold,
    tail_identity,
    tail_start,
    to_dict,
    up_set,
)
from .green import (
    SolutionSet,
    connect_idempotents,
    green_d,
    green_h,
    green_l,
    green_r,
    semilattice_iso,
    simplicity_witness,
    solve_left,
    solve_right,
)
from .bicyclic import (
    BICYCLIC_IDENTITY,
    Bicyclic,
    SHIFT_DOWN,
    SHIFT_UP,
    absorbing_idempotent,
    as_bicyclic,
    congruence_witnesses,
    conjugation_witness,
    embed,
    fresh_bicyclic,
    group_congruent,
    standard_below,
    tail_projection,
)
from .extensions import (
    AdjElement,
    AdjoinedZero,
    ZERO,
    ZeroElement,
    adj_mul,
    element_from_dict,
    element_to_dict,
    in_adj_nbhd,
    in_zero_nbhd,
    sample_zero_stability,
    zero_mul,
    zero_stability_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AdjElement",
    "AdjoinedZero",
    "BICYCLIC_IDENTITY",
    "Bicyclic",
    "CofMap",
    "GapSet",
    "IDENTITY",
    "SHIFT_DOWN",
    "SHIFT_UP",
    "SolutionSet",
    "ZERO",
    "ZeroElement",
    "absorbing_idempotent",
    "adj_mul",
    "as_bicyclic",
    "canonical_leq",
    "compose",
    "congruence_witnesses",
    "conjugation_witness",
    "connect_idempotents",
    "dom_tail_start",
    "element_from_dict",
    "element_to_dict",
    "embed",
    "evaluate",
    "fresh_bicyclic",
    "from_dict",
    "gapset",
    "green_d",
    "green_h",
    "green_l",
    "green_r",
    "group_congruent",
    "in_adj_nbhd",
    "in_zero_nbhd",
    "invert",
    "is_idempotent",
    "natural_leq",
    "preimage",
    "ran_tail_start",
    "sample_zero_stability",
    "semilattice_iso",
    "shift",
    "shift_threshold",
    "simplicity_witness",
    "solve_left",
    "solve_right",
    "standard_below",
    "tail_identity",
    "tail_projection",
    "tail_start",
    "to_dict",
    "up_set",
    "zero_mul",
    "zero_stability_bound",
]

from ._core import (
    Hitchin,
    b7_action_norms,
    bundle_slopes,
    catalog_names,
    collapse_directions,
    enumerate_family,
    eschenburg_oracle,
    eval_hitchin,
    eval_profile,
    extend_profile,
    inverse_block,
    lemma_ab,
    lemma_c,
    s4_action_norms,
    space_L,
    verify,
    weyl_order,
)

__all__ = [
    "Hitchin",
    "b7_action_norms",
    "bundle_slopes",
    "catalog_names",
    "collapse_directions",
    "enumerate_family",
    "eschenburg_oracle",
    "eval_hitchin",
    "eval_profile",
    "extend_profile",
    "inverse_block",
    "lemma_ab",
    "lemma_c",
    "s4_action_norms",
    "space_L",
    "verify",
    "weyl_order",
]

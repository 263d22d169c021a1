"""Exact laboratory for the tree norms X and Y.

Vectors are ``{node: rational}`` dicts: nodes are 0/1 strings ("@" is the
root), coefficients are exact rationals given as ``"p/q"`` strings, ints, or
decimal strings. Everything stays exact until a square root is rendered.

>>> import treenorm
>>> treenorm.norm_sq({"0": 1, "1": 1}, "X")
'4'
"""

from treenorm._core import (  # noqa: F401
    __version__,
    acceptable_chain_family,
    acceptable_witness,
    admissible_witness,
    best_chain,
    brute_force_norm_sq,
    check_two_beta_delta,
    check_two_nuc_conditions,
    comparable,
    format_vector,
    in_subtree,
    is_prefix,
    lemma_check,
    level_antichain,
    max_node_length,
    max_two_beta_delta,
    node_at_level,
    node_length,
    norm,
    norm_sq,
    on_spine,
    parallelogram_gap,
    parse_node,
    parse_vector_text,
    probe_two_beta,
    probe_two_nuc,
    run_sweep,
    separated_family,
    set_max_node_length,
    sqrt_decimal,
    validate_chain,
    verify_separation,
    witness_levels,
)

"""Exact Chow polynomials of weakly ranked posets, their symmetric chain
decompositions, and sequence-property certificates."""

from .chow import (
    FYMonomial,
    chow_chain_sum,
    chow_chain_sum_by_chains,
    chow_via_fy,
    enumerate_fy_monomials,
    iter_fy_monomials,
)
from .families import (
    gen_boolean,
    gen_chain,
    gen_nonlogconcave_counterexample,
    gen_nonpure_counterexample,
    gen_product_of_chains,
    gen_random_graded,
    generate,
    parse_family,
    sweep_log_concavity,
)
from .monomials import Monomial, MonomialSet
from .polynomial import IntPolynomial, count_real_roots, gamma_vector
from .poset import (
    Poset,
    PosetError,
    build_poset,
    enumerate_chains_from_bottom,
    is_ranked,
    validate_weak_rank,
    whitney_numbers,
)
from .scd import (
    ChainDecomposition,
    initial_elements_formula,
    is_monomial_order_ideal,
    is_pure_ideal,
    scd_of_fy,
    scd_product_of_chains,
    sfy_generate,
)
from .sequences import (
    d_binomial_expansion,
    delta,
    hibi_check,
    is_log_concave,
    is_O_sequence,
    is_palindromic,
    is_pure_O_len3,
    is_SI_sequence,
    is_unimodal,
    logconcavity_from_delta,
    macaulay_next_bound,
    pure_ideal_bruteforce,
)

__version__ = "0.1.0"

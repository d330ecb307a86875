"""Exact combinatorics of the affine symmetric group.

Windows, covers, reduced words, cyclically decreasing factorizations,
the affine Little bijection, and affine Stanley symmetric function
tables, all in exact integer/rational arithmetic.
"""

from .group import (
    AffinePermutation,
    Reflection,
    as_reflection,
    bruhat_ball,
    bruhat_leq,
    canonical_reduced_word,
    chevalley_coefficient,
    covers_above,
    elements_of_length,
    format_window,
    from_window,
    grassmannian_from_partition,
    grassmannian_to_partition,
    identity,
    is_grassmannian,
    left_r_covers,
    parse_window,
    right_r_covers,
    simple,
    transposition_element,
)
from .little import (
    AlphaDecomposition,
    MarkedSubset,
    MarkedWord,
    PQPair,
    backward_step,
    cd_cover_step,
    cd_cover_step_back,
    forward_step,
    generalized_little,
    inverse_generalized_little,
    is_v_marked,
    little_trace,
    parse_decomposition,
    parse_marked_word,
    phi,
    phi_inverse,
    phi_r,
    pq,
    v_marked_words,
)
from .stanley import (
    CoefficientTable,
    ExpansionResult,
    affine_schur_basis,
    alpha_decompositions,
    check_chevalley,
    check_garsia_little,
    classical_element,
    coefficient,
    compositions_bounded,
    expand_in_affine_schur,
    ls_children,
    multiply_by_s1,
    partitions_bounded,
    stanley_table,
)
from .words import (
    CyclicSubset,
    Word,
    canonical_cd_word,
    cd_element,
    cd_subset,
    count_reduced_words,
    cyclically_decreasing_elements,
    evaluate,
    insertion_index,
    is_cyclically_decreasing,
    is_reduced,
    marked_index,
    maximal_cyclic_intervals,
    parse_word,
    reduced_words,
)

__version__ = "0.1.0"

"""
braidnf: greedy normal forms for braid monoids and groups computed in
simple-braid (permutation) generators, with inversion-set calculus, the
weak-order lattice, a confluent rewriting system, an explicit small-n
normal-form automaton, and brute-force verification sweeps.
"""
from .lattice import (
    InversionSet,
    complement,
    deglex_compare,
    deglex_key,
    join,
    leq,
    meet,
    meet_permutations,
    meet_variant,
    star,
)
from .normalform import (
    GroupNormalForm,
    PositiveNormalForm,
    PositiveWord,
    equal,
    gs_rewrite_to_fixpoint,
    is_normal,
    normalize_group,
    normalize_positive,
    prepend_simple,
    rewrite_pair_at,
)
from .perms import (
    PairSet,
    act_on_pairs,
    adjacent_transposition,
    compose,
    compose_via_inversions,
    flip,
    identity,
    inverse,
    inversion_set,
    is_inversion_set,
    omega,
    permutation_from_inversions,
)
from .oracle import (
    VerificationReport,
    brute_meet,
    brute_validity,
    strand_crossings,
    verify_confluence,
    verify_gsb,
    verify_gsb_strict,
    verify_meet,
    verify_stop,
    verify_strand_lemma,
    verify_validity,
)
from .simple import (
    SimpleBraid,
    Transfer,
    commuting_characterization_check,
    flip_braid,
    generator_braid,
    head_op,
    head_set_identity_check,
    identity_braid,
    is_clean_transfer,
    is_head,
    is_normal_pair,
    is_tail,
    omega_braid,
    product_in_D,
    star_set,
    tail_op,
    transfer,
)
from .textio import (
    ArtinWord,
    ParseError,
    Token,
    format_normal_form,
    format_permutation,
    format_word,
    parse_permutation,
    parse_word,
    render_diagram,
    simple_to_artin,
    word_to_simple_letters,
)

__version__ = "0.1.0"

__all__ = [
    "ArtinWord",
    "GroupNormalForm",
    "InversionSet",
    "PairSet",
    "ParseError",
    "PositiveNormalForm",
    "PositiveWord",
    "SimpleBraid",
    "Token",
    "Transfer",
    "VerificationReport",
    "act_on_pairs",
    "adjacent_transposition",
    "brute_meet",
    "brute_validity",
    "commuting_characterization_check",
    "complement",
    "compose",
    "compose_via_inversions",
    "deglex_compare",
    "deglex_key",
    "equal",
    "flip",
    "flip_braid",
    "format_normal_form",
    "format_permutation",
    "format_word",
    "generator_braid",
    "gs_rewrite_to_fixpoint",
    "head_op",
    "head_set_identity_check",
    "identity",
    "identity_braid",
    "inverse",
    "inversion_set",
    "is_clean_transfer",
    "is_head",
    "is_inversion_set",
    "is_normal",
    "is_normal_pair",
    "is_tail",
    "join",
    "leq",
    "meet",
    "meet_permutations",
    "meet_variant",
    "normalize_group",
    "normalize_positive",
    "omega",
    "omega_braid",
    "parse_permutation",
    "parse_word",
    "permutation_from_inversions",
    "prepend_simple",
    "product_in_D",
    "render_diagram",
    "rewrite_pair_at",
    "simple_to_artin",
    "star",
    "star_set",
    "strand_crossings",
    "tail_op",
    "transfer",
    "verify_confluence",
    "verify_gsb",
    "verify_gsb_strict",
    "verify_meet",
    "verify_stop",
    "verify_strand_lemma",
    "verify_validity",
    "word_to_simple_letters",
]

"""Decision procedures for special monoid presentations.

Solves the word problem, left/right divisibility, two-sided
invertibility, and computes the maximal subgroup for monoids presented
by relations ``A_i = 1``, via a distinguished factor-base construction;
the required group word-problem oracle is a generalized Dehn algorithm
for presentations satisfying a 2/11 small-cancellation condition.
"""

from .cwords import (
    CWordSets,
    KLTuple,
    PropertyFlags,
    TupleIndex,
    check_properties,
    distinguish,
    generate_c_words,
    is_distinguished,
    make_tuple,
    tuple_from_cwords,
    tuple_index,
)
from .decision import (
    IntegralWord,
    Representation,
    divides_left,
    divides_right,
    f_map,
    integral_decompose,
    is_final,
    is_invertible,
    maximal_subgroup,
    mu,
    representation,
    t_set,
    words_equal,
)
from .errors import (
    AlphabetMismatchError,
    EmptyRelatorError,
    EmptyWordInListError,
    InvariantViolationError,
    NotFinalError,
    NotInvertibleError,
    NotK211Error,
    NotReducedError,
    OracleInconclusiveError,
    PresentationSyntaxError,
    RelationTooLongError,
    SpecialMonoidsError,
    UnknownGeneratorError,
)
from .oracle import Budget, OracleHandle, select_oracle
from .overlap import delta, delta_trace, omega, reduce_list, words_overlap
from .presentation import (
    BWordList,
    GroupPresentation,
    SpecialPresentation,
    b_words,
    derived_group,
    factor_over,
    make_presentation,
    parse_group_relators,
    parse_presentation,
)
from .smallcancel import (
    DehnState,
    KAlphaReport,
    certificate_bound,
    decide_identity,
    dehn_reduce,
    greendlinger_condition,
    k_alpha_check,
    max_piece,
)
from .verdict import Verdict
from .words import (
    Alphabet,
    GroupWord,
    SymmetrizedSet,
    Word,
    cyclic_permutations,
    cyclic_reduce,
    free_reduce,
    inverse,
    symmetrize,
    text_to_group_word,
    text_to_word,
    word_to_text,
)

__version__ = "0.1.0"

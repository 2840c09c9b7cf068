"""Word and conjugacy problems in surface groups of genus g >= 2."""

from .conjugacy import (
    ConjugacyCertificate,
    abelianization,
    conjugator,
    is_conjugate,
    lower_bound_witness,
    parity_check,
)
from .cyclic import (
    CyclicReductionResult,
    align_rotation,
    cyclic_normal_form,
    is_cyclically_irreducible,
    rotations,
)
from .errors import (
    ContractError,
    IncompatibleWordsError,
    InvalidGenusError,
    InvalidLetterError,
    InvalidParameterError,
    InvalidRuleError,
    InvariantError,
    NonTerminationError,
    ParseError,
    ResourceError,
    SurfGroupError,
)
from .llfr import (
    ConjugationForm,
    Llfr,
    decompose_freely_reduced,
    eliminate_4g1_general,
    eliminate_4g1_special,
    find_llfrs,
    prepare_conjugation_form,
)
from .oracle import (
    ConjGraphSearch,
    cayley_ball,
    dehn_equal,
    dehn_trivial,
    exact_cl,
    minimality_check,
)
from .presentation import (
    RelatorFamily,
    Word,
    compare_lenlex,
    format_word,
    fractional_relator_extent,
    letter_rank,
    parse_word,
    relator_cyclic_words,
    word,
)
from .rewrite import (
    RewriteRule,
    RewriteStep,
    Trace,
    apply_rule,
    find_redexes,
    free_reduce,
    is_freely_reduced,
    is_irreducible,
    nf,
    normal_form,
)

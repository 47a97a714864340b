"""Fixed-content necklaces, Lyndon words, and a Pascal-like bound on their counts."""

from ._accel import JIT_ENABLED
from .core import (
    InputError,
    InvariantError,
    content_of,
    format_word,
    is_lyndon,
    is_necklace,
    is_prenecklace,
    lex_compare,
    lyn,
    parse_word,
    rotate,
)
from .counting import (
    bound_rhs,
    count_lyndon,
    count_necklaces,
    divisors_of_gcd,
    euler_phi,
    lyndon_binary,
    mobius,
    multinomial,
    necklaces_binary,
)
from .generation import GenKind, Stability, classify, generate, partition_necklaces
from .mapping import (
    EqualityStatus,
    UnstableDecomposition,
    apply_f,
    decompose,
    equality_status,
    image_of_f,
    nonsurjectivity_witness,
    strict_witness,
)

__version__ = "0.1.0"

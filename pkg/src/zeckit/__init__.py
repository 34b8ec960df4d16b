"""Exact linear recurrences, Zeckendorf codecs and Zeckendorf-style identities."""

from .identities import (
    IdentityPattern,
    LinearForm,
    Verdict,
    diophantine_check,
    discover,
    family_generate,
    reduce_to_linear_form,
    verify_numeric,
    verify_symbolic,
)
from .quadring import PHI, SILVER, QuadInt, RingTag, binet_check, lucas_power_sum, ring_pow
from .recurrence import (
    FIBONACCI,
    LUCAS,
    PELL,
    PELL_LUCAS,
    RecurrenceSpec,
    SequenceFamily,
    add_formula,
    eval_at,
    eval_general,
    get_family,
    tiling_of,
)
from .tiling import Tiling, break_at, enumerate_tilings, six_pell_bijection
from .zeckendorf import Representation, decode, is_zeckendorf_form, nega_encode, zeck_decode, zeck_encode

__version__ = "0.1.0"

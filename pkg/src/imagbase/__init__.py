"""Exact conversion and digit arithmetic in positive, negative and imaginary bases."""

from .alphabet import STANDARD, DigitAlphabet
from .arithmetic import (
    DivisionResult,
    add,
    conjugate,
    div,
    div_inline,
    long_divide_neg,
    mul,
    negate,
    normalize,
    sub,
)
from .bases import BaseSpec, Family, effective_base, parse_base
from .beta import (
    BetaRange,
    ExpansionResult,
    beta_expand_neg,
    beta_expand_pos,
    beta_range,
    expand_real,
    transform_neg,
    transform_pos,
)
from .codec import CodecConfig, decode, encode
from .complexnum import ExactComplex, format_complex, parse_complex
from .errors import *  # noqa: F401,F403
from .imaginary import (
    ComplexInput,
    PartSplit,
    compare_parts,
    complex_to_imaginary,
    expand_complex,
    imaginary_to_complex,
    split_parts,
    unity_i,
    unity_minus_i,
    unity_minus_one,
    unity_one,
)
from .integer import base_to_int, int_to_base
from .numeral import Numeral, eval_numeral, format_numeral, parse_numeral
from .reals import DEFAULT_CONTEXT, PI, Irrational, PrecisionContext

__version__ = "0.1.0"

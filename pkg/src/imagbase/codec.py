"""Text as a numeral: read a message in one base, rewrite it in another.

A message over 0-9A-Z is a numeral in any base with enough digits (A-Z
needs 36, or 33 if the text stops at W).  Converting its value to another
base gives the cipher text; converting back recovers it, provided the reader
knows both bases and the digit order.  This is a toy, not cryptography.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alphabet import STANDARD, DigitAlphabet
from .bases import BaseSpec, Family
from .complexnum import ExactComplex
from .errors import DigitOutOfRange, InexactConversion, InvalidCharacter, InvalidDigit
from .beta import expand_real
from .imaginary import expand_complex
from .integer import int_to_base
from .numeral import Numeral, eval_numeral, format_numeral, parse_numeral
from .reals import DEFAULT_CONTEXT, PrecisionContext


@dataclass(frozen=True)
class CodecConfig:
    source_base: BaseSpec
    target_base: BaseSpec
    alphabet: DigitAlphabet = STANDARD
    ctx: PrecisionContext = field(default=DEFAULT_CONTEXT)


def _to_base(value: ExactComplex, base: BaseSpec, ctx: PrecisionContext) -> Numeral:
    if base.family is Family.IMAGINARY:
        res = expand_complex(value, base, ctx)
    else:
        if value.im:
            raise InexactConversion(f"{value} has an imaginary part; base {base} is real")
        if value.re.denominator == 1 and base.family in (Family.POS_INT, Family.NEG_INT):
            return int_to_base(int(value.re), base)
        res = expand_real(value.re, base, ctx)
    if not res.terminated:
        raise InexactConversion(f"{value} does not terminate in base {base}")
    return res.numeral


def _read(text: str, base: BaseSpec, alphabet: DigitAlphabet) -> Numeral:
    for ch in text:
        try:
            value = alphabet.value_of(ch)
        except InvalidCharacter:
            raise InvalidCharacter(f"{ch!r} is not in the alphabet") from None
        if value >= base.digit_count:
            raise DigitOutOfRange(f"{ch!r} (value {value}) is not a digit of base {base}")
    try:
        return parse_numeral(text, base, alphabet)
    except InvalidDigit as exc:
        raise DigitOutOfRange(str(exc)) from None


def _convert(text: str, src: BaseSpec, dst: BaseSpec, cfg: CodecConfig) -> str:
    if text == "":
        return ""
    numeral = _read(text, src, cfg.alphabet)
    value = eval_numeral(numeral, cfg.ctx)
    return format_numeral(_to_base(value, dst, cfg.ctx), cfg.alphabet)


def encode(text: str, cfg: CodecConfig) -> str:
    """Cipher text for ``text``.

    Text starting with the zero symbol is rejected, since leading zeros do
    not survive the trip through a value.  So is text whose value cannot be
    written exactly in the target base.
    """
    text = text.upper()
    if len(text) > 1 and cfg.alphabet.value_of(text[0]) == 0:
        raise InvalidCharacter(f"message starts with the zero digit {text[0]!r}; it would be lost")
    cipher = _convert(text, cfg.source_base, cfg.target_base, cfg)
    if not _integral(cfg.source_base):
        # non-integer bases admit several digit strings per value
        if decode(cipher, cfg) != text:
            raise InexactConversion(f"{text!r} is not the greedy expansion of its value in base {cfg.source_base}")
    return cipher


def decode(cipher: str, cfg: CodecConfig) -> str:
    return _convert(cipher.upper(), cfg.target_base, cfg.source_base, cfg)


def _integral(base: BaseSpec) -> bool:
    return (base.family in (Family.POS_INT, Family.NEG_INT)) or base.is_integer_imaginary

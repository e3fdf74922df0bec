"""Skew BCH convolutional codes over F_q(t) with a Sugiyama-style decoder."""

from .code import CodeSpec, Word, build_code, encode, is_codeword, parse_code_spec, parse_word
from .decode import DecodeOutcome, Status, decode
from .errors import KeyEquationFailure, SkewBCHError, UndecodableWord
from .funcfield import FiniteSigmaField, RationalFunctionField, RationalSigmaField
from .galois import GaloisField
from .skew import SkewPoly, SkewPolyRing

__all__ = [
    "CodeSpec",
    "DecodeOutcome",
    "FiniteSigmaField",
    "GaloisField",
    "KeyEquationFailure",
    "RationalFunctionField",
    "RationalSigmaField",
    "SkewBCHError",
    "SkewPoly",
    "SkewPolyRing",
    "Status",
    "UndecodableWord",
    "Word",
    "build_code",
    "decode",
    "encode",
    "is_codeword",
    "parse_code_spec",
    "parse_word",
]
__version__ = "0.1.0"

"""Reed-Solomon codes of length 3n from three nested RS codes, with a cascade decoder."""
from ._backend import BACKEND
from .cascade import CascadeOutcome, CascadeStatus, analyze_ground_truth, combine_step1, decode
from .construction import (CodeParams, MessageTriple, NestedTriple, encode, extract_components,
                           is_codeword, params, triple_new)
from .field import FieldElement, FieldSpec, field_new
from .rs import RSCode, RSDecodeOutcome, RSStatus, rs_new

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CascadeOutcome", "CascadeStatus", "CodeParams", "FieldElement", "FieldSpec",
    "MessageTriple", "NestedTriple", "RSCode", "RSDecodeOutcome", "RSStatus",
    "analyze_ground_truth", "combine_step1", "decode", "encode", "extract_components",
    "field_new", "is_codeword", "params", "rs_new", "triple_new",
]

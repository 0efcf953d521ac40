"""Extend a de Bruijn sequence over k symbols into one over k+1 symbols.

The result contains the input as a circular subsequence, and every n+2k-1
consecutive symbols of it contain the new symbol k.
"""

from .extender import ExtensionResult, extend, insertion_trace
from .graph import GraphParams, generate_de_bruijn, is_de_bruijn, sequence_to_cycle
from .verifier import verify_extension, verify_subsequence, verify_window

__all__ = [
    "ExtensionResult",
    "GraphParams",
    "extend",
    "generate_de_bruijn",
    "insertion_trace",
    "is_de_bruijn",
    "sequence_to_cycle",
    "verify_extension",
    "verify_subsequence",
    "verify_window",
]

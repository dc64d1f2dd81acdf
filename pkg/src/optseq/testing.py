"""
Testing support for L{optseq}.

Hypothesis strategies for every object the library works with, exhaustive
iterators for small lengths, and a few known optimal quaternary sequences.
"""

from ._testing import (
    KNOWN_OQS,
    allNormalizedArrays,
    allQuaternary,
    binarySequences,
    cocycles,
    quaternarySequences,
    subsetPairs,
)


__all__ = [
    "KNOWN_OQS",
    "allNormalizedArrays",
    "allQuaternary",
    "binarySequences",
    "cocycles",
    "quaternarySequences",
    "subsetPairs",
]

"""
Optimal quaternary sequences of odd length, and the binary arrays,
quasi-orthogonal cocycles and almost supplementary difference sets they are
equivalent to.
"""

from .arrays import BinaryArray, expand, isGOBA, isGOBS, isGPBA
from .asds import (
    AsdsParams,
    SubsetPair,
    asdsFromCocycle,
    asdsFromOQS,
    classify,
    cocycleFromASDS,
    oqsFromASDS,
)
from .cocycles import (
    Cocycle,
    GroupZ2m,
    cocycleFromArray,
    cocycleMatrix,
    isQuasiOrthogonal,
    rowExcess,
)
from .search import searchASDS, searchOQS
from .seqcore import (
    Alphabet,
    BinarySeq,
    GaussianInt,
    QuaternarySeq,
    autocorrelationSpectrum,
    isOQS,
)
from .transforms import (
    GrayPair,
    arrayToQuat,
    arrayToSequence,
    quatToArray,
    sequenceToArray,
)


__version__ = "0.1.0"


__all__ = [
    "Alphabet",
    "BinarySeq",
    "QuaternarySeq",
    "GaussianInt",
    "autocorrelationSpectrum",
    "isOQS",
    "BinaryArray",
    "expand",
    "isGPBA",
    "isGOBA",
    "isGOBS",
    "GrayPair",
    "quatToArray",
    "arrayToQuat",
    "sequenceToArray",
    "arrayToSequence",
    "GroupZ2m",
    "Cocycle",
    "cocycleMatrix",
    "cocycleFromArray",
    "rowExcess",
    "isQuasiOrthogonal",
    "SubsetPair",
    "AsdsParams",
    "classify",
    "asdsFromOQS",
    "oqsFromASDS",
    "asdsFromCocycle",
    "cocycleFromASDS",
    "searchOQS",
    "searchASDS",
]

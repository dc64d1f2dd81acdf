# -*- test-case-name: optseq.test.test_testing -*-
from __future__ import annotations

from itertools import product
from typing import Dict, Iterator, Optional

from hypothesis import strategies as st

from .asds import SubsetPair
from .cocycles import Cocycle, GroupZ2m
from .seqcore import BinarySeq, QuaternarySeq
from .transforms import GrayPair


KNOWN_OQS: Dict[int, QuaternarySeq] = {
    3: QuaternarySeq.of([0, 1, 0]),
    5: QuaternarySeq.of([0, 2, 0, 0, 0]),
    9: QuaternarySeq.of([2, 0, 1, 0, 3, 0, 1, 0, 2]),
}


def allQuaternary(m: int) -> Iterator[QuaternarySeq]:
    """
    Every quaternary sequence of length C{m}, in code order.
    """
    for exponents in product(range(4), repeat=m):
        yield QuaternarySeq(exponents)


def allNormalizedArrays(m: int) -> Iterator[GrayPair]:
    """
    Every C{(2, m)}-array with C{phi(0, 0) = 1}.
    """
    for signs in product((1, -1), repeat=2 * m - 1):
        values = (1,) + signs
        yield GrayPair(BinarySeq(values[:m]), BinarySeq(values[m:]))


@st.composite
def quaternarySequences(
    draw: st.DrawFn,
    minLength: int = 1,
    maxLength: int = 15,
    odd: bool = False,
) -> QuaternarySeq:
    length = draw(st.integers(minLength, maxLength))
    if odd and length % 2 == 0:
        length = length + 1 if length < maxLength else length - 1
    return QuaternarySeq.of(
        draw(st.lists(st.integers(0, 3), min_size=length, max_size=length))
    )


@st.composite
def binarySequences(
    draw: st.DrawFn, minLength: int = 1, maxLength: int = 30
) -> BinarySeq:
    return BinarySeq.of(
        draw(
            st.lists(
                st.sampled_from([1, -1]),
                min_size=minLength,
                max_size=maxLength,
            )
        )
    )


@st.composite
def subsetPairs(
    draw: st.DrawFn,
    minModulus: int = 2,
    maxModulus: int = 21,
    m: Optional[int] = None,
    nonempty: bool = False,
) -> SubsetPair:
    """
    Two subsets of C{Z_m}, with C{m} drawn from the given range unless it
    is fixed.
    """
    if m is None:
        m = draw(st.integers(minModulus, maxModulus))
    minSize = 1 if nonempty else 0
    residues = st.integers(0, m - 1)
    B = draw(st.sets(residues, min_size=minSize, max_size=m))
    D = draw(st.sets(residues, min_size=minSize, max_size=m))
    return SubsetPair.of(m, B, D)


@st.composite
def cocycles(
    draw: st.DrawFn, maxModulus: int = 9, withLambda: Optional[bool] = None
) -> Cocycle:
    m = draw(st.sampled_from([n for n in range(3, maxModulus + 1, 2)]))
    flag = draw(st.booleans()) if withLambda is None else withLambda
    bits = draw(
        st.lists(
            st.integers(0, 1),
            min_size=2 * m - 2,
            max_size=2 * m - 2,
        )
    )
    return Cocycle(GroupZ2m(m), int(flag), tuple(bits))

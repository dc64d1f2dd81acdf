# -*- test-case-name: optseq.test.test_transforms -*-
"""
Bijections between quaternary sequences of odd length C{m}, binary
C{(2, m)}-arrays, and binary sequences of length C{2m}.

A quaternary entry C{i**e} corresponds to the sign pair C{(row0, row1)}
through the inverse Gray mapping::

    e   row0  row1
    0    +1    +1
    1    -1    +1
    2    -1    -1
    3    +1    -1
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .arrays import BinaryArray
from .seqcore import BinarySeq, LengthMismatch, QuaternarySeq


class InvalidLength(ValueError):
    """
    A length-C{2m} binary sequence or C{(2, m)}-array was given with C{m}
    even or C{m = 1}.
    """


_ROWS_FOR_EXPONENT: Dict[int, Tuple[int, int]] = {
    0: (1, 1),
    1: (-1, 1),
    2: (-1, -1),
    3: (1, -1),
}
_EXPONENT_FOR_ROWS = {rows: e for e, rows in _ROWS_FOR_EXPONENT.items()}


@dataclass(frozen=True)
class GrayPair:
    """
    A binary C{(2, m)}-array, given as its two rows C{phi(0, -)} and
    C{phi(1, -)}.
    """

    row0: BinarySeq
    row1: BinarySeq

    def __post_init__(self) -> None:
        if len(self.row0) != len(self.row1):
            raise LengthMismatch(
                f"rows of length {len(self.row0)} and {len(self.row1)}"
            )

    @property
    def m(self) -> int:
        return len(self.row0)

    @classmethod
    def fromRows(cls, row0: List[int], row1: List[int]) -> GrayPair:
        return cls(BinarySeq.of(row0), BinarySeq.of(row1))

    @classmethod
    def fromArray(cls, array: BinaryArray) -> GrayPair:
        rows = array.asNumpy()
        if rows.ndim != 2 or rows.shape[0] != 2:
            raise InvalidLength(f"{array.sizes} is not a (2, m) shape")
        return cls(BinarySeq.of(rows[0]), BinarySeq.of(rows[1]))

    def asArray(self) -> BinaryArray:
        return BinaryArray.fromRows([self.row0.values, self.row1.values])

    def flattened(self) -> Tuple[int, ...]:
        """
        The values in the element order C{(0,0), ..., (0,m-1), (1,0), ...,
        (1,m-1)}.
        """
        return self.row0.values + self.row1.values

    def isNormalized(self) -> bool:
        return self.row0.values[0] == 1


def quatToArray(f: QuaternarySeq) -> GrayPair:
    """
    Split C{f} into the two binary rows C{Re f - Im f} and C{Re f + Im f}.
    """
    rows = [_ROWS_FOR_EXPONENT[e] for e in f.exponents]
    return GrayPair(
        BinarySeq(tuple(row0 for row0, _ in rows)),
        BinarySeq(tuple(row1 for _, row1 in rows)),
    )


def arrayToQuat(pair: GrayPair) -> QuaternarySeq:
    """
    Recombine two binary rows into C{f(k) = (1-i)/2 (row0(k) + i row1(k))}.
    """
    return QuaternarySeq(
        tuple(
            _EXPONENT_FOR_ROWS[rows]
            for rows in zip(pair.row0.values, pair.row1.values)
        )
    )


def _caseTable(m: int) -> List[List[Tuple[int, int]]]:
    """
    For each C{(a, k)}, the index into the length-C{2m} sequence and the
    sign relating the two, selecting the case by C{k mod 4} on the integer
    representative C{0 <= k < m}.
    """
    table: List[List[Tuple[int, int]]] = [[], []]
    for a in (0, 1):
        for k in range(m):
            same = k + a * m
            other = k + (1 - a) * m
            if m % 4 == 1:
                entry = {
                    0: (same, 1),
                    1: (other, (-1) ** (1 - a)),
                    2: (same, -1),
                    3: (other, (-1) ** a),
                }[k % 4]
            else:
                entry = {
                    0: (same, (-1) ** a),
                    1: (other, 1),
                    2: (same, (-1) ** (1 - a)),
                    3: (other, -1),
                }[k % 4]
            table[a].append(entry)
    return table


def _checkHalfLength(m: int) -> None:
    if m % 2 == 0 or m == 1:
        raise InvalidLength(f"m must be odd and greater than 1, not {m}")


def sequenceToArray(varphi: BinarySeq) -> GrayPair:
    """
    Fold a binary sequence of length C{2m} into the C{(2, m)}-array that is
    a GOBA of type C{(1, 0)} exactly when the sequence is a GOBS.

    @raise InvalidLength: unless the length is twice an odd C{m > 1}.
    """
    if len(varphi) % 2:
        raise InvalidLength(f"length {len(varphi)} is odd")
    m = len(varphi) // 2
    _checkHalfLength(m)
    rows = [
        [sign * varphi.values[index] for index, sign in row]
        for row in _caseTable(m)
    ]
    return GrayPair.fromRows(rows[0], rows[1])


def arrayToSequence(pair: GrayPair) -> BinarySeq:
    """
    Unfold a C{(2, m)}-array into the binary sequence of length C{2m}; the
    inverse of L{sequenceToArray}.
    """
    m = pair.m
    _checkHalfLength(m)
    result = [0] * (2 * m)
    for row, entries in zip((pair.row0, pair.row1), _caseTable(m)):
        for k, (index, sign) in enumerate(entries):
            result[index] = sign * row.values[k]
    return BinarySeq(tuple(result))


def negateSecondRow(pair: GrayPair) -> GrayPair:
    return GrayPair(pair.row0, pair.row1.negated())


def arrayEquivalent(left: GrayPair, right: GrayPair) -> bool:
    """
    Are the two arrays related by keeping the first row and negating the
    second?  (Every array is related to itself.)
    """
    return left == right or left == negateSecondRow(right)

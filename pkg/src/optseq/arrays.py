# -*- test-case-name: optseq.test.test_arrays -*-
"""
Binary arrays over products of cyclic groups C{Z_s1 x ... x Z_sr}, their
expansions with respect to a type vector, and the generalized perfect and
optimal array predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import FrozenSet, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from .seqcore import BinarySeq


Element = Tuple[int, ...]


class DimensionMismatch(ValueError):
    """
    A type vector did not have one bit per array dimension.
    """


class UnsupportedShape(ValueError):
    """
    The array's index group does not have order 2 modulo 4 in the form the
    optimal-array predicate assumes: C{s_1/2, s_2, ..., s_r} all odd.
    """


class InvalidArray(ValueError):
    """
    An array had a dimension of size 1 or less, or a value other than ±1.
    """


@dataclass(frozen=True)
class Shape:
    """
    Sizes of the cyclic factors together with a type vector.

    @ivar s: the sizes C{s_1..s_r}, each greater than 1.
    @ivar z: the type vector, one bit per factor.
    """

    s: Tuple[int, ...]
    z: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.s:
            raise InvalidArray("an array needs at least one dimension")
        if any(size <= 1 for size in self.s):
            raise InvalidArray(f"every size must exceed 1: {self.s}")
        if len(self.z) != len(self.s):
            raise DimensionMismatch(
                f"type vector {self.z} does not match sizes {self.s}"
            )
        if any(bit not in (0, 1) for bit in self.z):
            raise DimensionMismatch(f"type vector {self.z} is not binary")

    @property
    def expandedSizes(self) -> Tuple[int, ...]:
        return tuple((bit + 1) * size for bit, size in zip(self.z, self.s))

    def requireOrderTwoModFour(self) -> None:
        """
        @raise UnsupportedShape: unless C{s_1} is twice an odd number and
            every other size is odd.
        """
        first, *rest = self.s
        if first % 2 or (first // 2) % 2 == 0 or any(s % 2 == 0 for s in rest):
            raise UnsupportedShape(
                f"sizes {self.s} need s_1/2, s_2, ..., s_r odd"
            )


@dataclass(frozen=True)
class BinaryArray:
    """
    A ±1-valued map on C{Z_s1 x ... x Z_sr}, stored densely in row-major
    order of the mixed-radix index.
    """

    sizes: Tuple[int, ...]
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes or any(size <= 1 for size in self.sizes):
            raise InvalidArray(f"every size must exceed 1: {self.sizes}")
        if len(self.values) != prod(self.sizes):
            raise InvalidArray(
                f"{len(self.values)} values cannot fill sizes {self.sizes}"
            )
        if any(value not in (1, -1) for value in self.values):
            raise InvalidArray("array values must be 1 or -1")

    @classmethod
    def fromNumpy(cls, values: NDArray[np.int64]) -> BinaryArray:
        return cls(
            tuple(int(size) for size in values.shape),
            tuple(int(value) for value in values.ravel()),
        )

    @classmethod
    def fromRows(cls, rows: Sequence[Sequence[int]]) -> BinaryArray:
        return cls.fromNumpy(np.array(rows, dtype=np.int64))

    @classmethod
    def fromSequence(cls, seq: BinarySeq) -> BinaryArray:
        return cls((len(seq),), seq.values)

    def asNumpy(self) -> NDArray[np.int64]:
        return np.array(self.values, dtype=np.int64).reshape(self.sizes)


@dataclass(frozen=True)
class ExpandedArray:
    """
    The expansion of a binary array with respect to a type vector.

    @ivar array: the expanded values, indexed by C{E}.
    @ivar H: the elementary abelian 2-subgroup of C{E} whose quotient is the
        original index group.
    @ivar K: the even-weight elements of C{H}.
    """

    array: BinaryArray
    H: FrozenSet[Element]
    K: FrozenSet[Element]


def arrayAutocorrelation(values: NDArray[np.int64]) -> NDArray[np.int64]:
    """
    Compute C{R(x) = sum_b v(b) v(b + x)} for every C{x} of the index
    group, returned with the same shape as C{values}.
    """
    axes = tuple(range(values.ndim))
    result = np.empty(values.shape, dtype=np.int64)
    for x in np.ndindex(*values.shape):
        shifted = np.roll(values, tuple(-offset for offset in x), axis=axes)
        result[x] = np.sum(values * shifted)
    return result


def expand(phi: BinaryArray, z: Sequence[int]) -> ExpandedArray:
    """
    Lift C{phi} to C{E = Z_{(z_1+1)s_1} x ... x Z_{(z_r+1)s_r}}.

    The value at C{x} is C{phi(x~)} when C{x - x~} lies in C{K} and
    C{-phi(x~)} otherwise, where C{x~} reduces each coordinate modulo its
    original size.

    @raise DimensionMismatch: if C{z} does not match C{phi}'s dimensions.
    """
    shape = Shape(phi.sizes, tuple(z))
    values = phi.asNumpy()
    coordinates = np.indices(shape.expandedSizes)
    reduced = tuple(
        coordinate % size for coordinate, size in zip(coordinates, shape.s)
    )
    # x - x~ has weight equal to the number of coordinates past s_i
    weight = sum(
        (coordinate >= size).astype(np.int64)
        for coordinate, size in zip(coordinates, shape.s)
    )
    expanded = values[reduced] * np.where(weight % 2, -1, 1)
    choices = [
        (0, size) if bit else (0,) for bit, size in zip(shape.z, shape.s)
    ]
    H = frozenset(product(*choices))
    K = frozenset(
        h for h in H if sum(1 for coordinate in h if coordinate) % 2 == 0
    )
    return ExpandedArray(BinaryArray.fromNumpy(expanded), H, K)


def _offSubgroupValues(
    expansion: ExpandedArray, correlation: NDArray[np.int64]
) -> NDArray[np.int64]:
    mask = np.ones(correlation.shape, dtype=bool)
    for h in expansion.H:
        mask[h] = False
    return correlation[mask]


def isGPBA(phi: BinaryArray, z: Sequence[int]) -> bool:
    """
    Is C{phi} a generalized perfect binary array of type C{z}: does its
    expansion have zero autocorrelation everywhere off C{H}?
    """
    expansion = expand(phi, z)
    correlation = arrayAutocorrelation(expansion.array.asNumpy())
    return not np.any(_offSubgroupValues(expansion, correlation))


def isPerfect(phi: BinaryArray) -> bool:
    """
    Is C{phi} a perfect binary array (a GPBA of type zero)?
    """
    return isGPBA(phi, (0,) * len(phi.sizes))


def isGOBA(phi: BinaryArray, z: Sequence[int]) -> bool:
    """
    Is C{phi} a generalized optimal binary array of type C{z}?

    Off C{H} the expansion's autocorrelation must lie in C{{0, ±2|H|}}, and
    when C{z_1 = 1} exactly half of all of C{E} must have autocorrelation
    zero.  With C{z_1 = 0} only the first condition is imposed.

    @raise UnsupportedShape: if the index group's order is not 2 mod 4 in
        the assumed form.
    """
    Shape(phi.sizes, tuple(z)).requireOrderTwoModFour()
    expansion = expand(phi, z)
    correlation = arrayAutocorrelation(expansion.array.asNumpy())
    peak = 2 * len(expansion.H)
    offH = _offSubgroupValues(expansion, correlation)
    if not np.all((offH == 0) | (offH == peak) | (offH == -peak)):
        return False
    if z[0] == 1:
        zeros = int(np.count_nonzero(correlation == 0))
        return 2 * zeros == correlation.size
    return True


def isGOBS(varphi: BinarySeq) -> bool:
    """
    Is C{varphi} a generalized optimal binary sequence, the one-dimensional
    GOBA of type C{(1)}?
    """
    return isGOBA(BinaryArray.fromSequence(varphi), (1,))

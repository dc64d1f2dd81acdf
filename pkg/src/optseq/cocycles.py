# -*- test-case-name: optseq.test.test_cocycles -*-
"""
Cocycles over C{G = Z_2 x Z_m} (C{m} odd) with values in C{{1, -1}}.

Elements of C{G} are ordered C{g_1 = (0,0), g_2 = (0,1), ..., g_m =
(0,m-1), g_{m+1} = (1,0), ..., g_{2m} = (1,m-1)}; the 1-based index C{i} of
C{g_i} is the position C{i - 1} in every matrix here.  A cocycle is held in
the basis C{{lambda, d_2, ..., d_{2m-1}}}, where C{d_i} is the coboundary of
the map that is C{-1} exactly at C{g_i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from .transforms import GrayPair


CocyclicMatrix = NDArray[np.int64]


class InvalidModulus(ValueError):
    """
    C{m} must be odd and at least 3.
    """


class NotNormalized(ValueError):
    """
    A map on C{G}, or an array, was not C{+1} at the identity.
    """


class BasisIndexOutOfRange(ValueError):
    """
    A coboundary basis index fell outside C{2..2m}.
    """


@dataclass(frozen=True)
class GroupZ2m:
    """
    The group C{Z_2 x Z_m} with its fixed element order.
    """

    m: int

    def __post_init__(self) -> None:
        if self.m < 3 or self.m % 2 == 0:
            raise InvalidModulus(f"m must be odd and at least 3, not {self.m}")

    @property
    def order(self) -> int:
        return 2 * self.m

    def element(self, i: int) -> Tuple[int, int]:
        """
        The element C{g_i} for a 1-based index C{i}.
        """
        return divmod(i - 1, self.m)

    def index(self, g: Tuple[int, int]) -> int:
        a, u = g
        return (a % 2) * self.m + (u % self.m) + 1

    def additionTable(self) -> NDArray[np.int64]:
        """
        Positions (0-based) of C{g + h}, indexed by the positions of C{g}
        and C{h}.
        """
        return _additionTable(self.m)

    def upperHalf(self) -> NDArray[np.bool_]:
        """
        Which positions have first coordinate 1.
        """
        return np.arange(self.order) >= self.m


@lru_cache(maxsize=None)
def _additionTable(m: int) -> NDArray[np.int64]:
    positions = np.arange(2 * m)
    a, u = np.divmod(positions, m)
    sumA = (a[:, None] + a[None, :]) % 2
    sumU = (u[:, None] + u[None, :]) % m
    table = sumA * m + sumU
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class Cocycle:
    """
    The cocycle C{lambda**lambdaFlag * d_2**k_2 * ... * d_{2m-1}**k_{2m-1}}.

    @ivar exponents: the bits C{k_2..k_{2m-1}}, so C{exponents[0]} is
        C{k_2}.
    """

    group: GroupZ2m
    lambdaFlag: int
    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.lambdaFlag not in (0, 1):
            raise ValueError(f"lambda flag must be 0 or 1: {self.lambdaFlag}")
        if len(self.exponents) != self.group.order - 2:
            raise ValueError(
                f"need {self.group.order - 2} exponents for m={self.group.m}"
            )
        if any(bit not in (0, 1) for bit in self.exponents):
            raise ValueError("exponents must be bits")

    @classmethod
    def fromDeltas(
        cls, m: int, deltas: Iterable[int], withLambda: bool = True
    ) -> Cocycle:
        """
        Build a cocycle from the 1-based indices of its coboundary factors,
        as in C{lambda d_2 d_5 d_6}.
        """
        group = GroupZ2m(m)
        bits = [0] * (group.order - 2)
        for i in deltas:
            if not 2 <= i <= group.order - 1:
                raise BasisIndexOutOfRange(
                    f"basis index {i} is outside 2..{group.order - 1}"
                )
            bits[i - 2] ^= 1
        return cls(group, int(withLambda), tuple(bits))

    @property
    def deltas(self) -> List[int]:
        """
        The 1-based indices C{i} with C{k_i = 1}.
        """
        return [i + 2 for i, bit in enumerate(self.exponents) if bit]


def _coboundaryTable(
    group: GroupZ2m, phi: NDArray[np.int64]
) -> NDArray[np.int64]:
    # phi is self-inverse, so d(phi)(g, h) = phi(g) phi(h) phi(g + h)
    return phi[:, None] * phi[None, :] * phi[group.additionTable()]


def _basisExponents(
    group: GroupZ2m, phi: NDArray[np.int64]
) -> Tuple[int, ...]:
    # (a, u) -> (-1)**a has trivial coboundary; use the representative that
    # is +1 at g_{2m} so that the coboundary lies in the span of d_2..d_{2m-1}
    if phi[-1] == -1:
        phi = np.where(group.upperHalf(), -phi, phi)
    return tuple(int(value == -1) for value in phi[1:-1])


def coboundaryOf(
    group: GroupZ2m, phi: Sequence[int]
) -> Tuple[CocyclicMatrix, Cocycle]:
    """
    Compute the coboundary of a normalized map C{phi} on C{G}, given as its
    values on C{g_1..g_{2m}}.

    @return: the function table C{[d(phi)(g, h)]} and the same coboundary
        expressed in the basis, with exponents C{e_i = [phi(g_i) = -1]}
        taken after the second half is negated when C{phi(g_{2m}) = -1}.

    @raise NotNormalized: if C{phi(g_1) != 1}.
    """
    values = np.array(phi, dtype=np.int64)
    if values.shape != (group.order,):
        raise ValueError(f"need {group.order} values, got {len(values)}")
    if values[0] != 1:
        raise NotNormalized("a coboundary needs phi(identity) = 1")
    table = _coboundaryTable(group, values)
    return table, Cocycle(group, 0, _basisExponents(group, values))


@lru_cache(maxsize=None)
def _partialTable(m: int, i: int) -> CocyclicMatrix:
    group = GroupZ2m(m)
    delta = np.ones(group.order, dtype=np.int64)
    delta[i - 1] = -1
    table = _coboundaryTable(group, delta)
    table.setflags(write=False)
    return table


def _normalize(matrix: NDArray[np.int64]) -> NDArray[np.int64]:
    rowsFixed = matrix * matrix[:, :1]
    return rowsFixed * rowsFixed[:1, :]


def _backCirculant(m: int, position: int) -> NDArray[np.int64]:
    first = np.ones(m, dtype=np.int64)
    first[position - 1] = -1
    indices = np.arange(m)
    return first[(indices[:, None] + indices[None, :]) % m]


def basisMatrix(group: GroupZ2m, i: int) -> CocyclicMatrix:
    """
    Build C{M_{d_i}} from its block form: the normalization of C{[[C, J],
    [J, C]]} for C{2 <= i <= m} and of C{[[J, C], [C, J]]} for C{m < i <=
    2m}, where C{C} is the back circulant whose first row is all C{1}
    except at position C{i} (or C{i - m}).

    @raise BasisIndexOutOfRange: unless C{2 <= i <= 2m}.
    """
    m = group.m
    if not 2 <= i <= group.order:
        raise BasisIndexOutOfRange(f"basis index {i} is outside 2..{2 * m}")
    J = np.ones((m, m), dtype=np.int64)
    if i <= m:
        C = _backCirculant(m, i)
        blocks = [[C, J], [J, C]]
    else:
        C = _backCirculant(m, i - m)
        blocks = [[J, C], [C, J]]
    return _normalize(np.block(blocks))


def partialMatrix(group: GroupZ2m, i: int) -> CocyclicMatrix:
    """
    Build C{M_{d_i}} as the coboundary of the map that is C{-1} only at
    C{g_i}.

    @raise BasisIndexOutOfRange: unless C{2 <= i <= 2m}.
    """
    if not 2 <= i <= group.order:
        raise BasisIndexOutOfRange(
            f"basis index {i} is outside 2..{group.order}"
        )
    return _partialTable(group.m, i).copy()


def lambdaMatrix(group: GroupZ2m) -> CocyclicMatrix:
    """
    The matrix of C{lambda((a, u), (b, w)) = -1} iff C{a = b = 1}: in block
    form C{[[J, J], [J, -J]]}.
    """
    upper = group.upperHalf()
    return np.where(upper[:, None] & upper[None, :], -1, 1).astype(np.int64)


def cocycleMatrix(psi: Cocycle) -> CocyclicMatrix:
    """
    The cocyclic matrix C{M_psi = [psi(g, h)]}, the entrywise product of the
    matrices of its basis factors.
    """
    group = psi.group
    matrix = (
        lambdaMatrix(group)
        if psi.lambdaFlag
        else np.ones((group.order, group.order), dtype=np.int64)
    )
    for i in psi.deltas:
        matrix = matrix * _partialTable(group.m, i)
    return matrix


def satisfiesCocycleIdentity(group: GroupZ2m, table: CocyclicMatrix) -> bool:
    """
    Check C{psi(g, h) psi(g + h, k) = psi(g, h + k) psi(h, k)} for every
    triple, and C{psi(1, 1) = 1}.
    """
    add = group.additionTable()
    # table[add][g, h, k] is psi(g + h, k); table[:, add][g, h, k] is
    # psi(g, h + k)
    left = table[:, :, None] * table[add]
    right = table[:, add] * table[None, :, :]
    return bool(table[0, 0] == 1 and np.array_equal(left, right))


def rowExcess(matrix: CocyclicMatrix) -> int:
    """
    The sum of the absolute row sums of every row except the first (the row
    of the identity).
    """
    return int(np.sum(np.abs(np.sum(matrix[1:], axis=1))))


def isQuasiOrthogonal(psi: Cocycle) -> bool:
    """
    Is the row excess of C{M_psi} as small as it can be?  The minimum is
    C{2m - 2} off the coboundaries and C{4m - 2} on them; C{psi} is a
    coboundary exactly when it has no C{lambda} factor.
    """
    m = psi.group.m
    excess = rowExcess(cocycleMatrix(psi))
    return excess == (2 * m - 2 if psi.lambdaFlag else 4 * m - 2)


def cocycleFromArray(pair: GrayPair) -> Cocycle:
    """
    The cocycle C{lambda d(phi)} of a normalized C{(2, m)}-array C{phi}.

    @raise NotNormalized: if C{phi(0, 0) = -1}.
    """
    group = GroupZ2m(pair.m)
    values = np.array(pair.flattened(), dtype=np.int64)
    if values[0] != 1:
        raise NotNormalized("the array must have phi(0, 0) = 1")
    return Cocycle(group, 1, _basisExponents(group, values))


def _gf2Rank(rows: NDArray[np.uint8]) -> int:
    rows = rows.copy()
    rank = 0
    for column in range(rows.shape[1]):
        pivots = np.nonzero(rows[rank:, column])[0]
        if len(pivots) == 0:
            continue
        pivot = rank + pivots[0]
        rows[[rank, pivot]] = rows[[pivot, rank]]
        others = np.nonzero(rows[:, column])[0]
        others = others[others != rank]
        rows[others] ^= rows[rank]
        rank += 1
        if rank == rows.shape[0]:
            break
    return rank


def basisRank(group: GroupZ2m) -> int:
    """
    The rank over GF(2) of C{lambda, d_2, ..., d_{2m-1}}, each matrix read
    as a bit vector with C{-1 -> 1}.
    """
    tables = [lambdaMatrix(group)] + [
        _partialTable(group.m, i) for i in range(2, group.order)
    ]
    bits = np.array(
        [((1 - table) // 2).ravel() for table in tables], dtype=np.uint8
    )
    return _gf2Rank(bits)

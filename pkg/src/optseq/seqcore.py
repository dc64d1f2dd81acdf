# -*- test-case-name: optseq.test.test_seqcore -*-
"""
Exact periodic correlation arithmetic for binary and quaternary sequences.

Quaternary entries are stored as exponents: the exponent C{e} stands for
C{i**e}.  Products and conjugates are then exponent sums and differences
modulo 4, and every correlation value is an exact L{GaussianInt}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from constantly import NamedConstant, Names
from numpy.typing import NDArray


MAX_LENGTH = 2**20


class InvalidSequence(ValueError):
    """
    A sequence was empty, too long, or contained a value outside its
    alphabet.
    """


class LengthMismatch(ValueError):
    """
    Two sequences that must have the same length did not.
    """


class EvenLength(ValueError):
    """
    An operation defined only for odd lengths was given an even-length
    sequence.
    """


class Alphabet(Names):
    """
    The two alphabets a sequence may be drawn from.
    """

    binary = NamedConstant()
    quaternary = NamedConstant()


@dataclass(frozen=True)
class GaussianInt:
    """
    An exact complex integer C{re + im*i}.
    """

    re: int
    im: int = 0

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """
        The squared modulus, C{re**2 + im**2}.
        """
        return self.re * self.re + self.im * self.im


def _checkLength(n: int) -> None:
    if n < 1:
        raise InvalidSequence("sequences must have at least one entry")
    if n > MAX_LENGTH:
        raise InvalidSequence(f"sequences are capped at {MAX_LENGTH} entries")


@dataclass(frozen=True)
class BinarySeq:
    """
    A sequence of signs.

    @ivar values: the entries, each C{1} or C{-1}.
    """

    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        _checkLength(len(self.values))
        for value in self.values:
            if value not in (1, -1):
                raise InvalidSequence(f"{value!r} is not a sign")

    @classmethod
    def of(cls, values: Iterable[int]) -> BinarySeq:
        return cls(tuple(int(value) for value in values))

    def __len__(self) -> int:
        return len(self.values)

    def asArray(self) -> NDArray[np.int64]:
        return np.array(self.values, dtype=np.int64)

    def exponents(self) -> NDArray[np.int64]:
        """
        The same sequence in exponent form: C{1 -> 0}, C{-1 -> 2}.
        """
        return (1 - self.asArray()) & 3

    def negated(self) -> BinarySeq:
        return BinarySeq(tuple(-value for value in self.values))


@dataclass(frozen=True)
class QuaternarySeq:
    """
    A sequence over C{{1, i, -1, -i}}.

    @ivar exponents: the entries in exponent form, each in C{0..3}; the
        entry C{e} has value C{i**e}.
    """

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        _checkLength(len(self.exponents))
        for exponent in self.exponents:
            if exponent not in (0, 1, 2, 3):
                raise InvalidSequence(f"{exponent!r} is not in 0..3")

    @classmethod
    def of(cls, exponents: Iterable[int]) -> QuaternarySeq:
        return cls(tuple(int(exponent) for exponent in exponents))

    @classmethod
    def fromBinary(cls, seq: BinarySeq) -> QuaternarySeq:
        return cls.of(seq.exponents())

    def __len__(self) -> int:
        return len(self.exponents)

    def asArray(self) -> NDArray[np.int64]:
        return np.array(self.exponents, dtype=np.int64)

    def times(self, unit: int) -> QuaternarySeq:
        """
        Multiply every entry by C{i**unit}.
        """
        return QuaternarySeq.of((self.asArray() + unit) & 3)

    def conjugate(self) -> QuaternarySeq:
        return QuaternarySeq.of((-self.asArray()) & 3)

    def shifted(self, amount: int) -> QuaternarySeq:
        """
        The cyclic shift C{k -> f(k + amount)}.
        """
        return QuaternarySeq.of(np.roll(self.asArray(), -amount))


AnySeq = Union[BinarySeq, QuaternarySeq]


def _exponentsOf(seq: AnySeq) -> NDArray[np.int64]:
    if isinstance(seq, BinarySeq):
        return seq.exponents()
    return seq.asArray()


def _correlationAt(exponents: NDArray[np.int64], w: int) -> GaussianInt:
    # each term is i**(e(k) - e(k+w)); count the four possible powers
    differences = (exponents - np.roll(exponents, -w)) & 3
    counts = np.bincount(differences, minlength=4)
    return GaussianInt(
        int(counts[0]) - int(counts[2]), int(counts[1]) - int(counts[3])
    )


def autocorrelationSpectrum(seq: AnySeq) -> List[GaussianInt]:
    """
    Compute the periodic autocorrelation C{R(w) = sum_k s(k) conj(s(k+w))}
    for every shift C{w} in C{0..n-1}, reading indices modulo C{n}.

    Binary sequences always produce values with a zero imaginary part.
    """
    exponents = _exponentsOf(seq)
    return [_correlationAt(exponents, w) for w in range(len(exponents))]


def crossCorrelationSpectrum(a: BinarySeq, b: BinarySeq) -> List[int]:
    """
    Compute C{R_{a,b}(w) = sum_k a(k) b(k+w)} for every shift C{w}.

    @raise LengthMismatch: if C{a} and C{b} differ in length.
    """
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    left = a.asArray()
    right = b.asArray()
    return [int(np.dot(left, np.roll(right, -w))) for w in range(len(a))]


def oddAutocorrelationSpectrum(seq: BinarySeq) -> List[int]:
    """
    Compute the negaperiodic ("odd") autocorrelation: every term that wraps
    past the end of the sequence changes sign.

    This is half of the periodic autocorrelation of C{(s, -s)}.
    """
    values = seq.asArray()
    n = len(values)
    positions = np.arange(n)
    result = []
    for w in range(n):
        signs = np.where(positions + w >= n, -1, 1)
        result.append(int(np.sum(signs * values * np.roll(values, -w))))
    return result


def isOQS(f: QuaternarySeq) -> bool:
    """
    Is C{f} an optimal quaternary sequence, that is, does every off-peak
    autocorrelation value have modulus 1?

    Off-peak values of such a sequence are always real, C{+1} or C{-1}.

    @raise EvenLength: if C{f} has even length.
    """
    m = len(f)
    if m % 2 == 0:
        raise EvenLength(f"an OQS must have odd length, not {m}")
    exponents = f.asArray()
    for w in range(1, m):
        value = _correlationAt(exponents, w)
        if value.norm() != 1:
            return False
        assert value.im == 0, f"off-peak value {value} of an OQS is not real"
    return True


_OPTIMAL_BINARY_VALUES = {
    0: frozenset([0, 4, -4]),
    1: frozenset([1, -3]),
    2: frozenset([2, -2]),
    3: frozenset([-1]),
}


def isOptimalBinary(seq: BinarySeq) -> bool:
    """
    Does C{seq} attain the optimal off-peak autocorrelation values for its
    length modulo 4?
    """
    allowed = _OPTIMAL_BINARY_VALUES[len(seq) % 4]
    return all(
        value.re in allowed for value in autocorrelationSpectrum(seq)[1:]
    )


def isOptimalQuaternary(f: QuaternarySeq) -> bool:
    """
    Does C{f} have optimal autocorrelation for its length: an OQS when the
    length is odd, and a peak off-peak modulus of exactly 2 when it is even?
    """
    if len(f) % 2:
        return isOQS(f)
    return peakSidelobeSquared(f) == 4


def peakSidelobeSquared(seq: AnySeq) -> int:
    """
    The largest squared modulus C{|R(w)|**2} over C{0 < w < n}; 0 for a
    sequence of length 1.
    """
    return max(
        (value.norm() for value in autocorrelationSpectrum(seq)[1:]),
        default=0,
    )


def lowerBound(n: int, alphabet: NamedConstant) -> int:
    """
    The lower bound on C{max_{0<w<n} |R(w)|} for every sequence of length
    C{n} over C{alphabet}.
    """
    if alphabet is Alphabet.quaternary:
        return n % 2
    return {0: 0, 1: 1, 2: 2, 3: 1}[n % 4]


def differenceCountsOfSupport(
    values: Union[BinarySeq, NDArray[np.int64]],
    x: Union[int, Sequence[int]],
) -> int:
    """
    Compute C{d(x) = |N ∩ (x + N)|} where C{N} is the set of positions at
    which the ±1 array C{values} is C{-1}.

    C{values} may be a L{BinarySeq} or an array of any dimension, indexed by
    the corresponding product of cyclic groups; C{x} is an element of that
    group.
    """
    if isinstance(values, BinarySeq):
        values = values.asArray()
    support = np.asarray(values) == -1
    offsets = (x,) if isinstance(x, int) else tuple(x)
    translated = np.roll(support, offsets, axis=tuple(range(support.ndim)))
    return int(np.count_nonzero(support & translated))

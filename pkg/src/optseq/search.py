# -*- test-case-name: optseq.test.test_search -*-
"""
Exhaustive enumeration: every optimal quaternary sequence of an odd length,
every ASDS with given parameters, and the brute-force optimum that the
autocorrelation lower bounds are measured against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb, isqrt
from multiprocessing import Pool
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np
from constantly import NamedConstant, Names
from numpy.typing import NDArray
from twisted.logger import Logger

from ._config import Budgets
from .asds import (
    AsdsParams,
    SubsetPair,
    classify,
    differenceCounts,
    symmetricDifferenceCheck,
)
from .cocycles import cocycleFromArray, isQuasiOrthogonal
from .seqcore import Alphabet, QuaternarySeq, autocorrelationSpectrum, isOQS
from .transforms import GrayPair


log = Logger()

MAX_OQS_LENGTH = 13

# candidates per worker task; 4**8
_PARTITION_SIZE = 65536
_CENSUS_LIMIT = 2**13
# subsets per side in one ASDS search block
_SUBSET_CHUNK = 256


class BudgetExceeded(ValueError):
    """
    An enumeration would visit more candidates than its budget allows.
    """


class SearchRangeError(ValueError):
    """
    A search parameter lies outside the range the engine supports.
    """


class SearchKind(Names):
    """
    The three enumeration engines.
    """

    oqs = NamedConstant()
    asds = NamedConstant()
    optimum = NamedConstant()


@dataclass(frozen=True)
class FoundRecord:
    """
    One object found by a search, with the evidence that it qualifies.

    @ivar value: the sequence or the subset pair.
    @ivar params: the ASDS parameters, for subset pairs.
    @ivar evidence: the real autocorrelation spectrum of a sequence, or the
        difference counts C{Delta(1..m-1)} of a pair.
    @ivar canonical: whether C{value} is the representative of its class.
        Subset pairs are never canonicalized, so it is always C{False} for
        them.
    """

    value: Union[QuaternarySeq, SubsetPair]
    params: Optional[AsdsParams]
    evidence: Tuple[int, ...]
    canonical: bool

    def verify(self) -> bool:
        """
        Recompute the predicate and the evidence from scratch.
        """
        if isinstance(self.value, QuaternarySeq):
            spectrum = autocorrelationSpectrum(self.value)
            return isOQS(self.value) and self.evidence == tuple(
                value.re for value in spectrum
            )
        return classify(self.value) == self.params and self.evidence == tuple(
            differenceCounts(self.value)
        )


def encodeSequence(f: QuaternarySeq) -> int:
    """
    Read the exponents of C{f} as base-4 digits, most significant first.
    """
    code = 0
    for exponent in f.exponents:
        code = 4 * code + exponent
    return code


def decodeSequence(code: int, m: int) -> QuaternarySeq:
    return QuaternarySeq.of(_digits(np.array([code]), m, 4)[0])


def _digits(
    codes: NDArray[np.int64], length: int, base: int
) -> NDArray[np.int8]:
    powers = base ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] // powers[None, :]) % base).astype(np.int8)


def _sidelobesSquared(
    exponents: NDArray[np.int8], w: int
) -> NDArray[np.int64]:
    # int8 wraps, and & 3 still gives the difference modulo 4
    differences = (exponents - np.roll(exponents, -w, axis=1)) & 3
    re = np.count_nonzero(differences == 0, axis=1) - np.count_nonzero(
        differences == 2, axis=1
    )
    im = np.count_nonzero(differences == 1, axis=1) - np.count_nonzero(
        differences == 3, axis=1
    )
    return (re * re + im * im).astype(np.int64)


def _oqsPartition(task: Tuple[int, int, int]) -> List[int]:
    """
    Test the candidates C{start..stop-1} of length C{m}, returning the codes
    of the optimal ones.
    """
    m, start, stop = task
    codes = np.arange(start, stop, dtype=np.int64)
    exponents = _digits(codes, m, 4)
    # R(m - w) is the conjugate of R(w)
    for w in range(1, (m - 1) // 2 + 1):
        keep = _sidelobesSquared(exponents, w) == 1
        codes = codes[keep]
        exponents = exponents[keep]
        if not len(codes):
            break
    return [int(code) for code in codes]


def canonicalCode(f: QuaternarySeq) -> int:
    """
    The least code over the class of C{f} under cyclic shifts,
    multiplication by a unit, and conjugation.  Negating the second Gray row
    sends C{f} to C{i**3 conj(f)}, so it adds nothing to this class.
    """
    m = len(f)
    base = f.asArray()
    shifts = np.stack([np.roll(base, -s) for s in range(m)])
    both = np.concatenate([shifts, (-shifts) & 3])
    orbit = ((both[None, :, :] + np.arange(4)[:, None, None]) & 3).reshape(
        -1, m
    )
    powers = 4 ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return int((orbit @ powers).min())


def _workers(jobs: Optional[int]) -> int:
    if jobs is None:
        return os.cpu_count() or 1
    if jobs < 1:
        raise SearchRangeError(f"need at least one worker, not {jobs}")
    return jobs


def _runPartitions(
    tasks: List[Tuple[int, int, int]], jobs: Optional[int]
) -> List[int]:
    workers = min(_workers(jobs), len(tasks))
    found: List[int] = []
    if workers <= 1:
        results: Iterator[List[int]] = map(_oqsPartition, tasks)
        for codes in results:
            found.extend(codes)
        return found
    with Pool(workers) as pool:
        for done, codes in enumerate(
            pool.imap_unordered(_oqsPartition, tasks), 1
        ):
            log.debug(
                "partition {done}/{total} found {count}",
                done=done,
                total=len(tasks),
                count=len(codes),
            )
            found.extend(codes)
    return found


def _budgets(budgets: Optional[Budgets]) -> Budgets:
    if budgets is None:
        return Budgets.fromEnvironment(os.environ)
    return budgets


def searchOQS(
    m: int,
    canonicalize: bool = False,
    jobs: Optional[int] = None,
    budgets: Optional[Budgets] = None,
) -> List[FoundRecord]:
    """
    Find every optimal quaternary sequence of odd length C{m}.

    @param canonicalize: keep one representative (the least code) per class
        under shifts, unit multiples, and conjugation.
    @param jobs: worker processes; L{None} means one per CPU.  The result
        does not depend on it.

    @return: records sorted by code.

    @raise SearchRangeError: unless C{m} is odd and in C{1..13}.
    @raise BudgetExceeded: if C{4**m} exceeds the OQS budget.
    """
    if m < 1 or m > MAX_OQS_LENGTH or m % 2 == 0:
        raise SearchRangeError(f"m must be odd and in 1..13, not {m}")
    total = 4**m
    limit = _budgets(budgets).oqsCandidates
    if total > limit:
        raise BudgetExceeded(f"4**{m} candidates exceed the budget {limit}")
    log.info("searching {total} sequences of length {m}", total=total, m=m)
    tasks = [
        (m, start, min(start + _PARTITION_SIZE, total))
        for start in range(0, total, _PARTITION_SIZE)
    ]
    codes = sorted(_runPartitions(tasks, jobs))
    records = []
    seen = set()
    for code in codes:
        f = decodeSequence(code, m)
        canonical = canonicalCode(f)
        if canonicalize:
            if canonical in seen:
                continue
            seen.add(canonical)
            f = decodeSequence(canonical, m)
        records.append(
            FoundRecord(
                value=f,
                params=None,
                evidence=tuple(v.re for v in autocorrelationSpectrum(f)),
                canonical=canonicalize or canonical == code,
            )
        )
    records.sort(key=lambda record: encodeSequence(record.value))
    log.info(
        "found {count} sequences of length {m}", count=len(records), m=m
    )
    return records


def _subsetChunks(
    m: int, k: int
) -> Iterator[Tuple[List[Tuple[int, ...]], NDArray[np.int64]]]:
    """
    Yield the C{k}-subsets of C{Z_m} in lexicographic order, at most
    C{_SUBSET_CHUNK} at a time, each chunk with its table of difference
    counts C{|S & (S + w)|} for C{w = 1..m-1}.
    """
    subsets = combinations(range(m), k)
    while True:
        chunk = list(islice(subsets, _SUBSET_CHUNK))
        if not chunk:
            return
        members = np.zeros((len(chunk), m), dtype=bool)
        for row, subset in enumerate(chunk):
            members[row, list(subset)] = True
        table = np.stack(
            [
                np.count_nonzero(members & np.roll(members, w, axis=1), axis=1)
                for w in range(1, m)
            ],
            axis=1,
        ).astype(np.int64)
        yield chunk, table


def searchASDS(
    m: int,
    k1: int,
    k2: int,
    mu: Optional[int] = None,
    symmetricOnly: bool = False,
    budgets: Optional[Budgets] = None,
) -> List[FoundRecord]:
    """
    Find every pair C{B, D} with C{|B| = k1} and C{|D| = k2} that classifies
    as an ASDS (or SDS) with the given C{mu}.

    Both sides are enumerated in chunks, so memory stays bounded however
    many pairs the budget admits.

    @param mu: L{None} accepts any C{mu}.
    @param symmetricOnly: keep only pairs whose C{B - D} is symmetric.

    @return: records sorted by C{(B, D)}.

    @raise SearchRangeError: unless C{m >= 2} and C{0 <= k1, k2 <= m}.
    @raise BudgetExceeded: if C{binomial(m, k1) * binomial(m, k2)} exceeds
        the ASDS budget.
    """
    if m < 2 or not (0 <= k1 <= m and 0 <= k2 <= m):
        raise SearchRangeError(f"no subsets of sizes {k1}, {k2} in Z_{m}")
    total = comb(m, k1) * comb(m, k2)
    limit = _budgets(budgets).asdsCandidates
    if total > limit:
        raise BudgetExceeded(f"{total} pairs exceed the budget {limit}")
    log.info("searching {total} pairs in Z_{m}", total=total, m=m)
    records = []
    for firsts, firstTable in _subsetChunks(m, k1):
        for seconds, secondTable in _subsetChunks(m, k2):
            counts = firstTable[:, None, :] + secondTable[None, :, :]
            low = counts.min(axis=2)
            matches = counts.max(axis=2) - low <= 1
            if mu is not None:
                matches &= low == mu
            for row, column in zip(*np.nonzero(matches)):
                pair = SubsetPair(m, firsts[row], seconds[column])
                if symmetricOnly and not symmetricDifferenceCheck(pair):
                    continue
                records.append(
                    FoundRecord(
                        value=pair,
                        params=classify(pair),
                        evidence=tuple(int(c) for c in counts[row, column]),
                        canonical=False,
                    )
                )
    records.sort(key=lambda record: _pairKey(record.value))
    log.info("found {count} pairs in Z_{m}", count=len(records), m=m)
    return records


def _pairKey(
    value: Union[QuaternarySeq, SubsetPair]
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    assert isinstance(value, SubsetPair)
    return value.B, value.D


def bruteForceOptimumSquared(
    n: int, alphabet: NamedConstant, budgets: Optional[Budgets] = None
) -> int:
    """
    The least squared peak sidelobe C{max_{0<w<n} |R(w)|**2} over every
    sequence of length C{n} over C{alphabet}; 0 when C{n = 1}.

    @raise SearchRangeError: if C{n < 1}.
    @raise BudgetExceeded: if C{2**n} or C{4**n} exceeds the optimum budget.
    """
    if n < 1:
        raise SearchRangeError(f"length must be positive, not {n}")
    base = 4 if alphabet is Alphabet.quaternary else 2
    limit = _budgets(budgets).optimumCandidates
    if base**n > limit:
        raise BudgetExceeded(f"{base}**{n} sequences exceed budget {limit}")
    if n == 1:
        return 0
    # a unit multiple has the same spectrum, so fix the first entry
    total = base ** (n - 1)
    best: Optional[int] = None
    for start in range(0, total, _PARTITION_SIZE):
        codes = np.arange(
            start, min(start + _PARTITION_SIZE, total), dtype=np.int64
        )
        digits = _digits(codes, n, base)
        exponents = digits if base == 4 else (2 * digits).astype(np.int8)
        peaks = np.max(
            np.stack(
                [_sidelobesSquared(exponents, w) for w in range(1, n)]
            ),
            axis=0,
        )
        lowest = int(peaks.min())
        best = lowest if best is None else min(best, lowest)
    assert best is not None
    return best


def bruteForceOptimum(
    n: int, alphabet: NamedConstant, budgets: Optional[Budgets] = None
) -> int:
    """
    The least peak sidelobe C{max_{0<w<n} |R(w)|} over every sequence of
    length C{n} over C{alphabet}, comparable with
    L{optseq.seqcore.lowerBound}.

    Binary values are integers, so the result is exact for binary
    sequences.  A quaternary peak can be irrational (C{|1 + i| = sqrt(2)});
    the result is then rounded up to the next integer, and
    L{bruteForceOptimumSquared} gives the exact value.

    @raise SearchRangeError: if C{n < 1}.
    @raise BudgetExceeded: if C{2**n} or C{4**n} exceeds the optimum budget.
    """
    squared = bruteForceOptimumSquared(n, alphabet, budgets)
    root = isqrt(squared)
    return root if root * root == squared else root + 1


def isPrime(n: int) -> bool:
    if n < 2:
        return False
    for divisor in range(2, int(n**0.5) + 1):
        if n % divisor == 0:
            return False
    return True


def isPrimePower(n: int) -> bool:
    """
    Is C{n = p**a} for a prime C{p} and C{a >= 1}?
    """
    if n < 2:
        return False
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return True


def predictedExistence(m: int) -> bool:
    """
    Is an optimal quaternary sequence of odd length C{m} known to exist
    from the infinite families: C{m} a prime congruent to 1 mod 4, or
    C{2m - 1} a prime power?
    """
    return (isPrime(m) and m % 4 == 1) or isPrimePower(2 * m - 1)


def quasiOrthogonalCensus(m: int) -> int:
    """
    Count the normalized C{(2, m)}-arrays C{phi} whose cocycle C{lambda
    d(phi)} is quasi-orthogonal.  Twice this count is the number of
    optimal quaternary sequences of length C{m}.

    @raise BudgetExceeded: if there are more than C{2**13} normalized
        arrays.
    """
    total = 2 ** (2 * m - 1)
    if total > _CENSUS_LIMIT:
        raise BudgetExceeded(f"{total} arrays exceed the census limit")
    count = 0
    for code in range(total):
        bits = [(code >> shift) & 1 for shift in range(2 * m - 2, -1, -1)]
        signs = [1] + [1 - 2 * bit for bit in bits]
        pair = GrayPair.fromRows(signs[:m], signs[m:])
        if isQuasiOrthogonal(cocycleFromArray(pair)):
            count += 1
    return count


@dataclass(frozen=True)
class SearchTask:
    """
    A search request, as the command line assembles it.

    @ivar kind: a L{SearchKind}.
    @ivar m: the length or modulus.
    @ivar k1: for ASDS searches, the size of C{B}.
    @ivar k2: for ASDS searches, the size of C{D}.
    @ivar mu: for ASDS searches, the required C{mu}, or L{None}.
    @ivar alphabet: for optimum searches, an L{Alphabet}.
    """

    kind: NamedConstant
    m: int
    k1: int = 0
    k2: int = 0
    mu: Optional[int] = None
    canonicalize: bool = False
    symmetricOnly: bool = False
    jobs: Optional[int] = None
    alphabet: NamedConstant = Alphabet.quaternary

    def execute(
        self, budgets: Optional[Budgets] = None
    ) -> Union[List[FoundRecord], int]:
        if self.kind is SearchKind.oqs:
            return searchOQS(self.m, self.canonicalize, self.jobs, budgets)
        if self.kind is SearchKind.asds:
            return searchASDS(
                self.m,
                self.k1,
                self.k2,
                self.mu,
                self.symmetricOnly,
                budgets,
            )
        return bruteForceOptimum(self.m, self.alphabet, budgets)

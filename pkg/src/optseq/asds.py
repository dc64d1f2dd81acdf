# -*- test-case-name: optseq.test.test_asds -*-
"""
Almost supplementary difference sets: classification, the circulant Gram
characterization, complements, and the bridges to optimal quaternary
sequences and quasi-orthogonal cocycles.

A pair C{B, D} of subsets of C{Z_m} is a C{2-{m; k1, k2; mu; t}} ASDS when
the combined difference counts C{Delta(a)} over the nonzero residues take
the value C{mu} on exactly C{t} of them and C{mu + 1} on the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

import numpy as np
from constantly import NamedConstant, Names
from numpy.typing import NDArray
from twisted.logger import Logger

from .cocycles import Cocycle
from .seqcore import EvenLength, QuaternarySeq, isOQS
from .transforms import GrayPair, arrayToQuat, quatToArray


log = Logger()

CirculantPM = NDArray[np.int64]


class InvalidSubset(ValueError):
    """
    A subset had an element outside C{0..m-1}, a repeated element, or a
    modulus below 1; or a matrix did not match the subsets it was checked
    against.
    """


class NotASDS(ValueError):
    """
    An operation that needs an ASDS (or an SDS) was given a pair whose
    difference counts take more than two values.
    """


class EmptySubset(ValueError):
    """
    The amicability criterion needs both subsets to be nonempty.
    """


class PerturbationError(ValueError):
    """
    An SDS perturbation was asked of a pair that is not an SDS, or with an
    element that cannot be removed or added.
    """


class BridgeConditionFailed(ValueError):
    """
    A bridge between ASDS and another object could not be crossed.

    @ivar condition: a short name for the hypothesis that failed:
        C{"oqs"}, C{"parameters"}, C{"symmetry"}, C{"lambda"} or
        C{"normalization"}.
    """

    def __init__(self, condition: str, message: str) -> None:
        super().__init__(message)
        self.condition = condition


class Perturbation(Names):
    """
    The two ways of perturbing an SDS into an ASDS.
    """

    remove = NamedConstant()
    add = NamedConstant()


def _checkSubset(m: int, elements: Tuple[int, ...]) -> None:
    for element in elements:
        if not 0 <= element < m:
            raise InvalidSubset(f"{element} is not a residue modulo {m}")
    if list(elements) != sorted(set(elements)):
        raise InvalidSubset(f"{elements} is not sorted without repeats")


@dataclass(frozen=True)
class SubsetPair:
    """
    Two subsets of C{Z_m}, each held as a sorted tuple of residues.
    """

    m: int
    B: Tuple[int, ...]
    D: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidSubset(f"modulus must be positive, not {self.m}")
        _checkSubset(self.m, self.B)
        _checkSubset(self.m, self.D)

    @classmethod
    def of(cls, m: int, B: Iterable[int], D: Iterable[int]) -> SubsetPair:
        """
        Reduce both subsets modulo C{m} and sort them.

        @raise InvalidSubset: if two elements of one subset coincide modulo
            C{m}.
        """
        if m < 1:
            raise InvalidSubset(f"modulus must be positive, not {m}")
        return cls(m, _reduced(m, B), _reduced(m, D))

    @property
    def k1(self) -> int:
        return len(self.B)

    @property
    def k2(self) -> int:
        return len(self.D)

    def complemented(self, first: bool, second: bool) -> SubsetPair:
        """
        Replace C{B} and/or C{D} by its complement in C{Z_m}.
        """
        return SubsetPair(
            self.m,
            _complement(self.m, self.B) if first else self.B,
            _complement(self.m, self.D) if second else self.D,
        )


def _reduced(m: int, elements: Iterable[int]) -> Tuple[int, ...]:
    residues = [int(element) % m for element in elements]
    if len(set(residues)) != len(residues):
        raise InvalidSubset(f"repeated residue modulo {m} in {residues}")
    return tuple(sorted(residues))


def _complement(m: int, elements: Tuple[int, ...]) -> Tuple[int, ...]:
    present = set(elements)
    return tuple(u for u in range(m) if u not in present)


@dataclass(frozen=True)
class AsdsParams:
    """
    The parameters C{2-{m; k1, k2; mu; t}}; C{t = m - 1} is an SDS.
    """

    m: int
    k1: int
    k2: int
    mu: int
    t: int

    @property
    def isSDS(self) -> bool:
        return self.t == self.m - 1

    def satisfiesIdentity(self) -> bool:
        """
        Check the counting identity C{k1(k1-1) + k2(k2-1) = t mu +
        (m-1-t)(mu+1)}.
        """
        left = self.k1 * (self.k1 - 1) + self.k2 * (self.k2 - 1)
        right = self.t * self.mu + (self.m - 1 - self.t) * (self.mu + 1)
        return left == right


def _differenceTable(pair: SubsetPair) -> NDArray[np.int64]:
    m = pair.m
    table = np.zeros(m, dtype=np.int64)
    for subset in (pair.B, pair.D):
        elements = np.array(subset, dtype=np.int64)
        differences = (elements[:, None] - elements[None, :]) % m
        table += np.bincount(differences.ravel(), minlength=m)
    return table[1:]


def differenceCounts(pair: SubsetPair) -> List[int]:
    """
    Compute C{Delta(a)} for C{a = 1..m-1}: the number of ordered pairs
    C{(x, x')} from C{B} with C{x - x' = a}, plus the same count for C{D}.

    @return: a list whose entry C{a - 1} is C{Delta(a)}.
    """
    return [int(count) for count in _differenceTable(pair)]


def classify(pair: SubsetPair) -> Optional[AsdsParams]:
    """
    Classify C{pair} as an ASDS, or as an SDS when its difference counts
    are constant.

    @return: the parameters, or L{None} if the counts take more than two
        values or two values that are not consecutive.
    """
    counts = _differenceTable(pair)
    if len(counts) == 0:
        return AsdsParams(pair.m, pair.k1, pair.k2, 0, 0)
    values = np.unique(counts)
    if len(values) == 1:
        return AsdsParams(pair.m, pair.k1, pair.k2, int(values[0]), pair.m - 1)
    if len(values) == 2 and values[1] == values[0] + 1:
        t = int(np.count_nonzero(counts == values[0]))
        return AsdsParams(pair.m, pair.k1, pair.k2, int(values[0]), t)
    return None


def asdsParameters(pair: SubsetPair, mu: int) -> Optional[AsdsParams]:
    """
    Read C{pair} as a C{2-{m; k1, k2; mu; t}} ASDS for a prescribed C{mu}:
    every difference count must be C{mu} or C{mu + 1}, and C{t} counts the
    residues that attain C{mu}.  Unlike L{classify} this admits C{t = 0}.
    """
    counts = _differenceTable(pair)
    if not np.all((counts == mu) | (counts == mu + 1)):
        return None
    t = int(np.count_nonzero(counts == mu))
    return AsdsParams(pair.m, pair.k1, pair.k2, mu, t)


def requireASDS(pair: SubsetPair) -> AsdsParams:
    """
    @raise NotASDS: if L{classify} rejects C{pair}.
    """
    params = classify(pair)
    if params is None:
        raise NotASDS(f"{pair} is not an ASDS or SDS")
    return params


def _crossDifferences(pair: SubsetPair) -> NDArray[np.int64]:
    B = np.array(pair.B, dtype=np.int64)
    D = np.array(pair.D, dtype=np.int64)
    differences = (B[:, None] - D[None, :]) % pair.m
    return np.bincount(differences.ravel(), minlength=pair.m)


def symmetricDifferenceCheck(pair: SubsetPair) -> bool:
    """
    Is the multiset C{{x - y : x in B, y in D}} closed under negation?
    """
    counts = _crossDifferences(pair)
    negated = counts[(-np.arange(pair.m)) % pair.m]
    return bool(np.array_equal(counts, negated))


def circulant(m: int, S: Iterable[int]) -> CirculantPM:
    """
    The C{m x m} matrix whose entry C{(i, j)} is C{-1} when C{j - i} lies in
    C{S} and C{1} otherwise.
    """
    first = np.ones(m, dtype=np.int64)
    for element in S:
        first[element % m] = -1
    indices = np.arange(m)
    return first[(indices[None, :] - indices[:, None]) % m]


def _isCirculant(matrix: NDArray[np.int64]) -> bool:
    m = matrix.shape[0]
    indices = np.arange(m)
    return bool(
        np.array_equal(
            matrix, matrix[0][(indices[None, :] - indices[:, None]) % m]
        )
    )


def gramMatrix(pair: SubsetPair) -> NDArray[np.int64]:
    """
    C{B^c (B^c)^T + D^c (D^c)^T} for the circulants of C{B} and C{D}.
    """
    Bc = circulant(pair.m, pair.B)
    Dc = circulant(pair.m, pair.D)
    return Bc @ Bc.T + Dc @ Dc.T


def gramCheck(
    pair: SubsetPair,
    params: AsdsParams,
    gram: Optional[NDArray[np.int64]] = None,
) -> bool:
    """
    Does the Gram sum of C{pair}'s circulants (or C{gram}, if given) have
    the shape that characterizes a C{2-{m; k, r; mu; t}} ASDS?

    The diagonal must be C{2m}.  Off the diagonal the matrix must be
    circulant, with C{2m - 4(k + r - mu)} on exactly C{t} nonzero residues
    C{j - i} and C{2m - 4(k + r - mu - 1)} on the others.

    @raise InvalidSubset: if C{params} or C{gram} do not match C{pair}.
    """
    m = pair.m
    if (params.m, params.k1, params.k2) != (m, pair.k1, pair.k2):
        raise InvalidSubset(f"{params} do not describe {pair}")
    if gram is None:
        gram = gramMatrix(pair)
    if gram.shape != (m, m):
        raise InvalidSubset(f"a {gram.shape} Gram matrix does not fit m={m}")
    if not _isCirculant(gram) or not np.all(np.diag(gram) == 2 * m):
        return False
    size = params.k1 + params.k2
    low = 2 * m - 4 * (size - params.mu)
    high = 2 * m - 4 * (size - params.mu - 1)
    offDiagonal = gram[0][1:]
    if not np.all((offDiagonal == low) | (offDiagonal == high)):
        return False
    return int(np.count_nonzero(offDiagonal == low)) == params.t


def gramToASDS(Bc: CirculantPM, Dc: CirculantPM) -> SubsetPair:
    """
    Read the subsets back from the first rows of two circulants.

    @raise InvalidSubset: unless both are circulant ±1 matrices of one
        size.
    """
    if Bc.shape != Dc.shape or Bc.ndim != 2 or Bc.shape[0] != Bc.shape[1]:
        raise InvalidSubset("need two square matrices of the same size")
    for matrix in (Bc, Dc):
        if not np.all(np.abs(matrix) == 1) or not _isCirculant(matrix):
            raise InvalidSubset("not a circulant ±1 matrix")
    m = Bc.shape[0]
    return SubsetPair(
        m,
        tuple(int(u) for u in np.nonzero(Bc[0] == -1)[0]),
        tuple(int(u) for u in np.nonzero(Dc[0] == -1)[0]),
    )


def complementVariants(
    pair: SubsetPair,
) -> List[Tuple[SubsetPair, AsdsParams]]:
    """
    The three pairs obtained by complementing C{B}, C{D}, or both, with the
    parameters they must have: C{{m; m-k, r; m-2k+mu; t}}, C{{m; k, m-r;
    m-2r+mu; t}} and C{{m; m-k, m-r; 2m-2k-2r+mu; t}}.

    @raise NotASDS: if C{pair} does not classify.
    """
    params = requireASDS(pair)
    m, k, r, mu, t = params.m, params.k1, params.k2, params.mu, params.t
    return [
        (
            pair.complemented(True, False),
            AsdsParams(m, m - k, r, m - 2 * k + mu, t),
        ),
        (
            pair.complemented(False, True),
            AsdsParams(m, k, m - r, m - 2 * r + mu, t),
        ),
        (
            pair.complemented(True, True),
            AsdsParams(m, m - k, m - r, 2 * m - 2 * k - 2 * r + mu, t),
        ),
    ]


def bridgeMu(pair: SubsetPair) -> int:
    """
    The C{mu} both bridges require: C{|B| + |D| - (m + 1) / 2}.
    """
    return pair.k1 + pair.k2 - (pair.m + 1) // 2


def isBridgePair(pair: SubsetPair) -> bool:
    """
    Is C{pair} an ASDS with C{mu = |B| + |D| - (m + 1) / 2} whose
    difference multiset C{B - D} is symmetric?  Both conditions survive
    complementing either subset.
    """
    return (
        asdsParameters(pair, bridgeMu(pair)) is not None
        and symmetricDifferenceCheck(pair)
    )


@dataclass(frozen=True)
class BridgeResult:
    """
    The ASDS read off an optimal quaternary sequence.

    @ivar rawPair: the supports of the two Gray rows.
    @ivar pair: C{rawPair} after complementing, when needed, so that
        C{|B| + |D| >= (m + 1) / 2}.
    @ivar params: the parameters of C{pair}.
    @ivar rawSymmetric: whether C{rawPair} has a symmetric C{B - D}.
    @ivar symmetric: whether C{pair} has a symmetric C{B - D}.
    """

    rawPair: SubsetPair
    pair: SubsetPair
    params: AsdsParams
    rawSymmetric: bool
    symmetric: bool


# unchanged, then D alone, then B alone, then both
_COMPLEMENT_POLICY = (
    (False, False),
    (False, True),
    (True, False),
    (True, True),
)


def _applyPolicy(pair: SubsetPair) -> SubsetPair:
    half = (pair.m + 1) // 2
    for first, second in _COMPLEMENT_POLICY:
        candidate = pair.complemented(first, second)
        if candidate.k1 + candidate.k2 >= half:
            if first or second:
                log.debug(
                    "complemented B={first} D={second} to reach {half}",
                    first=first,
                    second=second,
                    half=half,
                )
            return candidate
    raise AssertionError("complementing both subsets always reaches m + 1")


def _supports(pair: GrayPair) -> SubsetPair:
    return SubsetPair(
        pair.m,
        tuple(j for j, value in enumerate(pair.row0.values) if value == -1),
        tuple(j for j, value in enumerate(pair.row1.values) if value == -1),
    )


def asdsFromOQS(f: QuaternarySeq) -> BridgeResult:
    """
    The ASDS C{B = {j : phi(0, j) = -1}}, C{D = {j : phi(1, j) = -1}} of an
    optimal quaternary sequence, complemented when C{|B| + |D|} is too
    small to give a non-negative C{mu}.

    @raise EvenLength: if C{f} has even length.
    @raise BridgeConditionFailed: if C{f} is not an OQS.
    """
    if not isOQS(f):
        raise BridgeConditionFailed("oqs", f"{f} is not an OQS")
    raw = _supports(quatToArray(f))
    pair = _applyPolicy(raw)
    params = asdsParameters(pair, bridgeMu(pair))
    if params is None:
        raise BridgeConditionFailed(
            "parameters", f"{pair} does not have mu = {bridgeMu(pair)}"
        )
    return BridgeResult(
        rawPair=raw,
        pair=pair,
        params=params,
        rawSymmetric=symmetricDifferenceCheck(raw),
        symmetric=symmetricDifferenceCheck(pair),
    )


def oqsFromASDS(pair: SubsetPair) -> QuaternarySeq:
    """
    Rebuild the quaternary sequence whose Gray rows are C{-1} exactly on C{B}
    and on C{D}.

    @raise EvenLength: if C{m} is even.
    @raise BridgeConditionFailed: naming the condition that fails, if the
        pair is not an ASDS with C{mu = |B| + |D| - (m + 1) / 2} or its
        C{B - D} is not symmetric.
    """
    m = pair.m
    if m % 2 == 0:
        raise EvenLength(f"the bridge needs odd m, not {m}")
    if asdsParameters(pair, bridgeMu(pair)) is None:
        raise BridgeConditionFailed(
            "parameters",
            f"{pair} is not an ASDS with mu = {bridgeMu(pair)}",
        )
    if not symmetricDifferenceCheck(pair):
        raise BridgeConditionFailed("symmetry", "B - D is not symmetric")
    row0 = [-1 if j in pair.B else 1 for j in range(m)]
    row1 = [-1 if j in pair.D else 1 for j in range(m)]
    return arrayToQuat(GrayPair.fromRows(row0, row1))


def asdsFromCocycle(psi: Cocycle) -> SubsetPair:
    """
    Read C{B = {j - 1 : 2 <= j <= m, k_j = 1}} and C{D = {j - m - 1 : m + 1
    <= j <= 2m - 1, k_j = 1}} off C{psi = lambda prod d_j**k_j}.  The
    cocycle is quasi-orthogonal exactly when L{isBridgePair} holds for the
    result.

    @raise BridgeConditionFailed: if C{psi} has no C{lambda} factor.
    """
    if not psi.lambdaFlag:
        raise BridgeConditionFailed("lambda", "the cocycle lacks lambda")
    m = psi.group.m
    deltas = psi.deltas
    return SubsetPair(
        m,
        tuple(j - 1 for j in deltas if j <= m),
        tuple(j - m - 1 for j in deltas if j > m),
    )


def cocycleFromASDS(pair: SubsetPair) -> Cocycle:
    """
    The cocycle C{lambda prod_{b in B} d_{b+1} prod_{y in D} d_{y+m+1}}.

    @raise BridgeConditionFailed: if C{0} is in C{B} or C{m - 1} is in
        C{D}, which the basis cannot express.
    """
    m = pair.m
    if 0 in pair.B or m - 1 in pair.D:
        raise BridgeConditionFailed(
            "normalization", "need 0 outside B and m - 1 outside D"
        )
    return Cocycle.fromDeltas(
        m, [b + 1 for b in pair.B] + [y + m + 1 for y in pair.D]
    )


def amicableCheck(pair: SubsetPair) -> bool:
    """
    Are the circulants C{B^c} and C{D^c} amicable, that is, is C{B^c
    (D^c)^T} symmetric?

    @raise EmptySubset: if C{B} or C{D} is empty.
    """
    if not pair.B or not pair.D:
        raise EmptySubset("amicability needs nonempty B and D")
    product = circulant(pair.m, pair.B) @ circulant(pair.m, pair.D).T
    return bool(np.array_equal(product, product.T))


def sizeBoundsCheck(params: AsdsParams) -> bool:
    """
    Check C{(m-1)**2 / 2 <= (k+r)m - (k**2 + r**2) <= (m**2 - 1) / 2}.
    """
    m, k, r = params.m, params.k1, params.k2
    doubled = 2 * ((k + r) * m - k * k - r * r)
    return (m - 1) ** 2 <= doubled <= m * m - 1


@dataclass(frozen=True)
class PerturbationReport:
    """
    What became of an SDS after removing an element from, or adding one to,
    its first subset.

    @ivar pair: the perturbed pair.
    @ivar params: its classification, if any.
    @ivar halfASDS: whether it is an ASDS with C{t = (m - 1) / 2}.
    @ivar formulasHold: whether the SDS satisfies the size and C{mu}
        formulas that any perturbation into an ASDS with C{t = (m - 1) / 2}
        forces: C{k1 = (m + 3) / 4} for a removal, C{k1 = (m - 1) / 4} for
        an addition.
    @ivar predicted: the parameters such a perturbation would have, when
        the formulas hold.
    """

    pair: SubsetPair
    params: Optional[AsdsParams]
    halfASDS: bool
    formulasHold: bool
    predicted: Optional[AsdsParams]


def _perturbationFormulas(
    params: AsdsParams, mode: NamedConstant
) -> Optional[AsdsParams]:
    m, k1, k2, mu = params.m, params.k1, params.k2, params.mu
    tail = Fraction(k2 * k2 - k2, m - 1)
    if mode is Perturbation.remove:
        if k1 == Fraction(m + 3, 4) and mu == Fraction(m + 3, 16) + tail:
            return AsdsParams(m, k1 - 1, k2, mu - 1, (m - 1) // 2)
    elif k1 == Fraction(m - 1, 4) and mu == Fraction(m - 5, 16) + tail:
        return AsdsParams(m, k1 + 1, k2, mu, (m - 1) // 2)
    return None


def sdsPerturbationCheck(
    pair: SubsetPair, mode: NamedConstant, element: int
) -> PerturbationReport:
    """
    Remove C{element} from C{B}, or add it to C{B}, and reclassify.

    @param mode: L{Perturbation.remove} or L{Perturbation.add}.

    @raise PerturbationError: if C{pair} is not an SDS, if C{element} is not
        in C{B} for a removal, or if it is already in C{B} or C{D} for an
        addition.
    """
    params = classify(pair)
    if params is None or not params.isSDS:
        raise PerturbationError(f"{pair} is not an SDS")
    element %= pair.m
    if mode is Perturbation.remove:
        if element not in pair.B:
            raise PerturbationError(f"{element} is not in B")
        B = [b for b in pair.B if b != element]
    else:
        if element in pair.B or element in pair.D:
            raise PerturbationError(f"{element} is already in B or D")
        B = list(pair.B) + [element]
    perturbed = SubsetPair.of(pair.m, B, pair.D)
    result = classify(perturbed)
    predicted = _perturbationFormulas(params, mode)
    return PerturbationReport(
        pair=perturbed,
        params=result,
        halfASDS=result is not None and result.t == (pair.m - 1) // 2,
        formulasHold=predicted is not None,
        predicted=predicted,
    )

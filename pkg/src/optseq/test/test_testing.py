from __future__ import annotations

from hypothesis import given

from twisted.trial.unittest import SynchronousTestCase

from ..asds import SubsetPair
from ..cocycles import Cocycle
from ..seqcore import QuaternarySeq, isOQS
from ..testing import (
    KNOWN_OQS,
    allNormalizedArrays,
    allQuaternary,
    cocycles,
    quaternarySequences,
    subsetPairs,
)


class FixtureTests(SynchronousTestCase):
    """
    The helpers in L{optseq.testing} produce what they promise.
    """

    def test_knownOQS(self) -> None:
        for m, f in KNOWN_OQS.items():
            self.assertEqual(len(f), m)
            self.assertTrue(isOQS(f))

    def test_allQuaternary(self) -> None:
        sequences = list(allQuaternary(2))
        self.assertEqual(len(sequences), 16)
        self.assertEqual(sequences[1], QuaternarySeq((0, 1)))

    def test_allNormalizedArrays(self) -> None:
        arrays = list(allNormalizedArrays(3))
        self.assertEqual(len(arrays), 32)
        self.assertTrue(all(pair.isNormalized() for pair in arrays))
        self.assertEqual(len(set(arrays)), 32)

    @given(quaternarySequences(maxLength=8, odd=True))
    def test_oddLengths(self, f: QuaternarySeq) -> None:
        self.assertEqual(len(f) % 2, 1)
        self.assertLessEqual(len(f), 8)

    @given(subsetPairs(m=7, nonempty=True))
    def test_nonempty(self, pair: SubsetPair) -> None:
        self.assertEqual(pair.m, 7)
        self.assertTrue(pair.k1 > 0 and pair.k2 > 0)

    @given(cocycles(maxModulus=5, withLambda=True))
    def test_lambdaCocycles(self, psi: Cocycle) -> None:
        self.assertEqual(psi.lambdaFlag, 1)
        self.assertIn(psi.group.m, (3, 5))

from __future__ import annotations

import numpy as np
from hypothesis import given

from twisted.trial.unittest import SynchronousTestCase

from ..seqcore import BinarySeq, GaussianInt, QuaternarySeq
from ..testing import quaternarySequences
from ..textformat import (
    HEADER,
    ParseError,
    parseBinary,
    parseIntegers,
    parseRecord,
    parseSequence,
    renderBinary,
    renderGaussian,
    renderIntegers,
    renderMatrix,
    renderRecord,
    renderSequence,
    renderVerdict,
)


class SequenceTextTests(SynchronousTestCase):
    """
    Tests for the C{+ i - j} sequence form.
    """

    def test_parse(self) -> None:
        self.assertEqual(parseSequence("+i-j"), QuaternarySeq((0, 1, 2, 3)))
        self.assertEqual(parseSequence("+i+"), QuaternarySeq((0, 1, 0)))

    @given(quaternarySequences())
    def test_render(self, f: QuaternarySeq) -> None:
        """
        Rendering writes one symbol per entry and reads back unchanged.
        """
        text = renderSequence(f)
        self.assertEqual(len(text), len(f))
        self.assertEqual(parseSequence(text), f)

    def test_badSymbol(self) -> None:
        with self.assertRaises(ParseError) as raised:
            parseSequence("+x-")
        self.assertIn("'x'", str(raised.exception))

    def test_empty(self) -> None:
        self.assertRaises(ParseError, parseSequence, "")

    def test_parseErrorIsValueError(self) -> None:
        """
        The command line maps L{ValueError} to its usage exit status.
        """
        self.assertTrue(issubclass(ParseError, ValueError))


class BinaryTextTests(SynchronousTestCase):
    def test_parse(self) -> None:
        self.assertEqual(parseBinary("+--+"), BinarySeq((1, -1, -1, 1)))
        self.assertRaises(ParseError, parseBinary, "+i")
        self.assertRaises(ParseError, parseBinary, "")

    def test_render(self) -> None:
        self.assertEqual(renderBinary([1, -1, -1, 1]), "+--+")
        self.assertEqual(renderBinary([]), "")


class IntegerListTests(SynchronousTestCase):
    """
    Tests for L{parseIntegers} and L{renderIntegers}.
    """

    def test_parse(self) -> None:
        self.assertEqual(parseIntegers("1,4,5"), [1, 4, 5])
        self.assertEqual(parseIntegers("-1, 2"), [-1, 2])

    def test_empty(self) -> None:
        """
        An empty (or blank) list is an empty subset.
        """
        self.assertEqual(parseIntegers(""), [])
        self.assertEqual(parseIntegers("  "), [])

    def test_bad(self) -> None:
        self.assertRaises(ParseError, parseIntegers, "1,,2")
        self.assertRaises(ParseError, parseIntegers, "a")

    def test_render(self) -> None:
        self.assertEqual(renderIntegers([0, 2]), "0,2")
        self.assertEqual(renderIntegers([]), "")


class ValueTextTests(SynchronousTestCase):
    def test_gaussian(self) -> None:
        self.assertEqual(renderGaussian(GaussianInt(3)), "3")
        self.assertEqual(renderGaussian(GaussianInt(-1, -2)), "-1-2i")
        self.assertEqual(renderGaussian(GaussianInt(0, 1)), "0+1i")

    def test_matrix(self) -> None:
        """
        Rows are joined with C{/}.
        """
        matrix = np.array([[1, 1], [1, -1]], dtype=np.int64)
        self.assertEqual(renderMatrix(matrix), "++/+-")

    def test_verdict(self) -> None:
        self.assertEqual(renderVerdict(True), "true")
        self.assertEqual(renderVerdict(False), "false")


class RecordTests(SynchronousTestCase):
    """
    Tests for output records.
    """

    def test_render(self) -> None:
        line = renderRecord("oqs", [("seq", "+i+"), ("oqs", "true")])
        self.assertEqual(line, "kind=oqs seq=+i+ oqs=true")

    def test_parse(self) -> None:
        """
        Parsing a rendered record gives back its fields, the kind
        included.
        """
        line = renderRecord("asds", [("m", "9"), ("B", "1,4,5,6,7")])
        self.assertEqual(
            parseRecord(line), {"kind": "asds", "m": "9", "B": "1,4,5,6,7"}
        )

    def test_emptyValue(self) -> None:
        line = renderRecord("asds", [("D", "")])
        self.assertEqual(parseRecord(line), {"kind": "asds", "D": ""})

    def test_unrenderable(self) -> None:
        self.assertRaises(ValueError, renderRecord, "x", [("a", "b c")])
        self.assertRaises(ValueError, renderRecord, "x", [("a=b", "c")])

    def test_notARecord(self) -> None:
        self.assertRaises(ParseError, parseRecord, "kind=oqs stray")

    def test_header(self) -> None:
        self.assertEqual(HEADER, "optseq-v1")

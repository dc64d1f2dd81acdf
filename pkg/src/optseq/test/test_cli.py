from __future__ import annotations

from typing import Dict, List

from click.testing import CliRunner, Result

from twisted.trial.unittest import SynchronousTestCase

from ..cli import catalog, main
from ..search import SearchRangeError
from ..seqcore import isOQS
from ..textformat import HEADER, parseRecord, parseSequence


def invoke(*args: str) -> Result:
    return CliRunner().invoke(main, list(args))


def records(result: Result) -> List[Dict[str, str]]:
    """
    The records among the lines C{result} wrote.
    """
    return [
        parseRecord(line)
        for line in result.output.splitlines()
        if line.startswith("kind=")
    ]


class HeaderTests(SynchronousTestCase):
    def test_headerFirst(self) -> None:
        """
        The header line comes before anything else, whatever the outcome.
        """
        for args in [("verify", "oqs", "+i+"), ("verify", "oqs", "+x+")]:
            result = invoke(*args)
            self.assertEqual(result.output.splitlines()[0], HEADER)


class AutocorrTests(SynchronousTestCase):
    def test_spectrum(self) -> None:
        result = invoke("autocorr", "+i-")
        self.assertEqual(result.exit_code, 0)
        [record] = records(result)
        self.assertEqual(record["spectrum"], "3,-1-2i,-1+2i")

    def test_binary(self) -> None:
        result = invoke("autocorr", "--binary", "+++-")
        self.assertEqual(records(result)[0]["spectrum"], "4,0,0,0")
        result = invoke("autocorr", "--binary", "-++")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(records(result)[0]["spectrum"], "3,-1,-1")


class VerifyTests(SynchronousTestCase):
    """
    Tests for C{optseq verify}.
    """

    def test_oqs(self) -> None:
        result = invoke("verify", "oqs", "+i+")
        self.assertEqual(result.exit_code, 0)
        [record] = records(result)
        self.assertEqual(record["kind"], "oqs")
        self.assertEqual(record["verdict"], "true")
        self.assertEqual(record["spectrum"], "3,1,1")

    def test_leadingMinus(self) -> None:
        """
        A sequence that starts with C{-} is read as the argument, not as an
        option.
        """
        result = invoke("verify", "oqs", "-+i+j+i+-")
        self.assertEqual(result.exit_code, 0)
        [record] = records(result)
        self.assertEqual(record["spectrum"], "9,-1,-1,-1,1,1,-1,-1,-1")

    def test_gobsLeadingMinus(self) -> None:
        result = invoke("verify", "gobs", "-++-+++-----+---+-")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(records(result)[0]["verdict"], "true")

    def test_notOQS(self) -> None:
        result = invoke("verify", "oqs", "+++")
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(records(result)[0]["verdict"], "false")

    def test_evenLength(self) -> None:
        """
        The odd-length predicate refuses even lengths as unusable input.
        """
        self.assertEqual(invoke("verify", "oqs", "+i").exit_code, 2)

    def test_badSymbol(self) -> None:
        result = invoke("verify", "oqs", "+x+")
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(records(result), [])

    def test_gobs(self) -> None:
        self.assertEqual(invoke("verify", "gobs", "+---+++-++").exit_code, 0)
        self.assertEqual(invoke("verify", "gobs", "++++++++++").exit_code, 1)

    def test_goba(self) -> None:
        result = invoke("verify", "goba", "--row0", "+-+", "--row1", "+++")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(records(result)[0]["verdict"], "true")

    def test_asds(self) -> None:
        result = invoke(
            "verify", "asds", "-m", "9", "--b", "1,4,5,6,7", "--d", "0,2"
        )
        self.assertEqual(result.exit_code, 0)
        [record] = records(result)
        self.assertEqual(record["params"], "9;5,2;2;2")
        self.assertEqual(record["symmetric"], "true")

    def test_asymmetric(self) -> None:
        """
        A valid ASDS fails verification when symmetry is also required.
        """
        args = ["verify", "asds", "-m", "7", "--b", "1,2", "--d", "0,2"]
        self.assertEqual(invoke(*args).exit_code, 0)
        result = invoke(*args, "--symmetric")
        self.assertEqual(result.exit_code, 1)
        [record] = records(result)
        self.assertEqual(record["symmetric"], "false")
        self.assertEqual(record["params"], "7;2,2;0;2")

    def test_repeatedElement(self) -> None:
        result = invoke("verify", "asds", "-m", "7", "--b", "1,8")
        self.assertEqual(result.exit_code, 2)

    def test_cocycle(self) -> None:
        result = invoke("verify", "cocycle", "-m", "3", "--deltas", "2")
        self.assertEqual(result.exit_code, 0)
        [record] = records(result)
        self.assertEqual(record["re"], "4")
        self.assertEqual(record["deltas"], "2")
        self.assertEqual(len(record["matrix"].split("/")), 6)

    def test_cocycleIndexOutOfRange(self) -> None:
        result = invoke("verify", "cocycle", "-m", "3", "--deltas", "6,7")
        self.assertEqual(result.exit_code, 2)


class ConvertTests(SynchronousTestCase):
    """
    Tests for C{optseq convert}.
    """

    def test_oqsToGOBS(self) -> None:
        result = invoke("convert", "oqs-to-gobs", "+-+++")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(records(result)[0]["output"], "+---+++-++")
        negated = invoke("convert", "oqs-to-gobs", "-++++")
        self.assertEqual(negated.exit_code, 0)

    def test_gobsToOQS(self) -> None:
        result = invoke("convert", "gobs-to-oqs", "+---+++-++")
        self.assertEqual(records(result)[0]["output"], "+-+++")

    def test_lengthEighteen(self) -> None:
        """
        Both directions accept text that starts with C{-}.
        """
        result = invoke("convert", "gobs-to-oqs", "-++-+++-----+---+-")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(records(result)[0]["output"], "-+i+j+i+-")
        result = invoke("convert", "oqs-to-gobs", "-+i+j+i+-")
        self.assertEqual(records(result)[0]["output"], "-++-+++-----+---+-")

    def test_leadingMinusBridges(self) -> None:
        result = invoke("convert", "oqs-to-asds", "-+i+j+i+-")
        self.assertEqual(result.exit_code, 0)
        result = invoke("convert", "oqs-to-cocycle", "-+i+j+i+-")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(records(result)[0]["verdict"], "true")

    def test_gobsOddLength(self) -> None:
        self.assertEqual(invoke("convert", "gobs-to-oqs", "+-+").exit_code, 2)

    def test_oqsToASDS(self) -> None:
        """
        The ASDS of an OQS converts back to a sequence that is again
        optimal.
        """
        result = invoke("convert", "oqs-to-asds", "+i+")
        self.assertEqual(result.exit_code, 0)
        [record] = records(result)
        self.assertEqual(record["from"], "oqs")
        self.assertEqual(record["to"], "asds")
        back = invoke(
            "convert",
            "asds-to-oqs",
            "-m",
            record["m"],
            "--b",
            record["b"],
            "--d",
            record["d"],
        )
        self.assertEqual(back.exit_code, 0)
        self.assertTrue(isOQS(parseSequence(records(back)[0]["output"])))

    def test_bridgeFailure(self) -> None:
        """
        A failed bridge condition is reported as a false record naming the
        condition, with exit status 1.
        """
        result = invoke("convert", "oqs-to-asds", "+++")
        self.assertEqual(result.exit_code, 1)
        [record] = records(result)
        self.assertEqual(record["verdict"], "false")
        self.assertEqual(record["failed"], "oqs")

    def test_asdsSymmetryFailure(self) -> None:
        result = invoke(
            "convert", "asds-to-oqs", "-m", "7", "--b", "1,2", "--d", "0,2"
        )
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(records(result)[0]["failed"], "symmetry")

    def test_cocycleRoundTrip(self) -> None:
        result = invoke("convert", "oqs-to-cocycle", "+i+")
        self.assertEqual(result.exit_code, 0)
        [record] = records(result)
        self.assertEqual(record["lambda"], "1")
        self.assertEqual(record["verdict"], "true")
        back = invoke(
            "convert",
            "cocycle-to-asds",
            "-m",
            "3",
            "--deltas",
            record["deltas"],
        )
        self.assertEqual(back.exit_code, 0)
        self.assertEqual(records(back)[0]["bridge"], "true")

    def test_cocycleWithoutLambda(self) -> None:
        result = invoke(
            "convert", "cocycle-to-asds", "-m", "3", "--no-lambda"
        )
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(records(result)[0]["failed"], "lambda")

    def test_asdsToCocycle(self) -> None:
        result = invoke(
            "convert",
            "asds-to-cocycle",
            "-m",
            "9",
            "--b",
            "1,4,5,6,7",
            "--d",
            "0,2",
        )
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(records(result)[0]["verdict"], "true")


class SearchCommandTests(SynchronousTestCase):
    """
    Tests for C{optseq search}.
    """

    def test_oqs(self) -> None:
        result = invoke("search", "oqs", "-m", "3", "--jobs", "1")
        self.assertEqual(result.exit_code, 0)
        found = records(result)
        summary = found.pop()
        self.assertEqual(summary["kind"], "summary")
        self.assertEqual(summary["count"], str(len(found)))
        self.assertIn("+i+", [record["sequence"] for record in found])

    def test_deterministic(self) -> None:
        """
        The output does not depend on the number of workers.
        """
        serial = invoke("search", "oqs", "-m", "7", "--jobs", "1")
        parallel = invoke("search", "oqs", "-m", "7", "--jobs", "4")
        self.assertEqual(serial.output, parallel.output)

    def test_outOfRange(self) -> None:
        self.assertEqual(invoke("search", "oqs", "-m", "4").exit_code, 2)

    def test_asds(self) -> None:
        result = invoke(
            "search", "asds", "-m", "9", "--k1", "5", "--k2", "2", "--mu", "2"
        )
        self.assertEqual(result.exit_code, 0)
        found = records(result)[:-1]
        self.assertIn(
            ("1,4,5,6,7", "0,2"),
            [(record["b"], record["d"]) for record in found],
        )

    def test_asdsNothingFound(self) -> None:
        """
        No pair of one-element subsets of C{Z_9} has all counts 1.
        """
        result = invoke(
            "search", "asds", "-m", "9", "--k1", "1", "--k2", "1", "--mu", "1"
        )
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(
            records(result), [{"kind": "summary", "m": "9", "count": "0"}]
        )


class CatalogTests(SynchronousTestCase):
    """
    Tests for the existence catalog.
    """

    def test_rows(self) -> None:
        rows = [dict(row) for row in catalog(5, jobs=1)]
        self.assertEqual(rows[0], {"m": "1", "trivial": "true"})
        self.assertEqual([row["m"] for row in rows], ["1", "3", "5"])
        for row in rows[1:]:
            self.assertEqual(row["predicted"], "true")
            self.assertTrue(isOQS(parseSequence(row["witness"])))
            self.assertEqual(int(row["census"]) * 2, int(row["raw"]))

    def test_tooLong(self) -> None:
        self.assertRaises(SearchRangeError, list, catalog(15))

    def test_command(self) -> None:
        result = invoke("catalog", "--max-m", "3", "--jobs", "1")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(
            [record["m"] for record in records(result)], ["1", "3"]
        )

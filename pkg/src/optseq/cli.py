# -*- test-case-name: optseq.test.test_cli -*-
"""
The C{optseq} command: verify, convert, search, and catalog.

Every invocation writes the header line C{optseq-v1} and then one record
per line.  The exit status is 0 for a true verdict, 1 for a false verdict
or an empty search, and 2 for unusable input.
"""

from __future__ import annotations

import sys
from typing import Any, Iterator, List, Optional, Sequence

import click
from twisted.logger import Logger, globalLogBeginner, textFileLogObserver

from .arrays import isGOBA, isGOBS
from .asds import (
    AsdsParams,
    BridgeConditionFailed,
    SubsetPair,
    asdsFromCocycle,
    asdsFromOQS,
    classify,
    cocycleFromASDS,
    isBridgePair,
    oqsFromASDS,
    symmetricDifferenceCheck,
)
from .cocycles import (
    Cocycle,
    cocycleFromArray,
    cocycleMatrix,
    isQuasiOrthogonal,
    rowExcess,
)
from .search import (
    MAX_OQS_LENGTH,
    BudgetExceeded,
    SearchRangeError,
    predictedExistence,
    quasiOrthogonalCensus,
    searchASDS,
    searchOQS,
)
from .seqcore import autocorrelationSpectrum, isOQS
from .textformat import (
    HEADER,
    Field,
    parseBinary,
    parseIntegers,
    parseSequence,
    renderBinary,
    renderGaussian,
    renderIntegers,
    renderMatrix,
    renderRecord,
    renderSequence,
    renderVerdict,
)
from .transforms import (
    GrayPair,
    arrayToQuat,
    arrayToSequence,
    quatToArray,
    sequenceToArray,
)


log = Logger()

# sequences such as -+i+ start with a dash; pass unknown options through as
# arguments
_SEQUENCE_ARGUMENT = {"ignore_unknown_options": True}


class _Group(click.Group):
    """
    A command group that reports library input errors with exit status 2.
    """

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except ValueError as e:
            click.echo(f"optseq: {e}", err=True)
            ctx.exit(2)


def _emit(kind: str, fields: Sequence[Field]) -> None:
    click.echo(renderRecord(kind, fields))


def _finish(verdict: bool) -> None:
    click.get_current_context().exit(0 if verdict else 1)


def _spectrum(values: Sequence[Any]) -> str:
    return ",".join(renderGaussian(value) for value in values)


def _params(params: Optional[AsdsParams]) -> str:
    if params is None:
        return "-"
    return f"{params.m};{params.k1},{params.k2};{params.mu};{params.t}"


def _pair(m: int, b: str, d: str) -> SubsetPair:
    return SubsetPair.of(m, parseIntegers(b), parseIntegers(d))


def _cocycle(m: int, withLambda: bool, deltas: str) -> Cocycle:
    return Cocycle.fromDeltas(m, parseIntegers(deltas), withLambda)


@click.group(cls=_Group)
@click.option("--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool) -> None:
    """
    Optimal quaternary sequences and their equivalent objects.
    """
    if verbose:
        globalLogBeginner.beginLoggingTo(
            [textFileLogObserver(sys.stderr)], redirectStandardIO=False
        )
    click.echo(HEADER)


@main.command(context_settings=_SEQUENCE_ARGUMENT)
@click.argument("sequence")
@click.option("--binary", is_flag=True, help="Read a +/- sequence.")
def autocorr(sequence: str, binary: bool) -> None:
    """
    Print the periodic autocorrelation spectrum of SEQUENCE.
    """
    seq = parseBinary(sequence) if binary else parseSequence(sequence)
    _emit(
        "autocorr",
        [
            ("input", sequence),
            ("spectrum", _spectrum(autocorrelationSpectrum(seq))),
        ],
    )


@main.group(cls=_Group)
def verify() -> None:
    """
    Decide whether an object has the property its name claims.
    """


@verify.command("oqs", context_settings=_SEQUENCE_ARGUMENT)
@click.argument("sequence")
def verifyOQS(sequence: str) -> None:
    f = parseSequence(sequence)
    verdict = isOQS(f)
    _emit(
        "oqs",
        [
            ("input", sequence),
            ("verdict", renderVerdict(verdict)),
            ("spectrum", _spectrum(autocorrelationSpectrum(f))),
        ],
    )
    _finish(verdict)


@verify.command("gobs", context_settings=_SEQUENCE_ARGUMENT)
@click.argument("sequence")
def verifyGOBS(sequence: str) -> None:
    varphi = parseBinary(sequence)
    verdict = isGOBS(varphi)
    _emit("gobs", [("input", sequence), ("verdict", renderVerdict(verdict))])
    _finish(verdict)


@verify.command("goba")
@click.option("--row0", required=True, help="First row, as +/-.")
@click.option("--row1", required=True, help="Second row, as +/-.")
def verifyGOBA(row0: str, row1: str) -> None:
    """
    Decide whether a (2, m)-array is a GOBA of type (1, 0).
    """
    pair = GrayPair(parseBinary(row0), parseBinary(row1))
    verdict = isGOBA(pair.asArray(), (1, 0))
    _emit(
        "goba",
        [("row0", row0), ("row1", row1), ("verdict", renderVerdict(verdict))],
    )
    _finish(verdict)


@verify.command("asds")
@click.option("-m", "m", type=int, required=True, help="The modulus.")
@click.option("--b", "b", default="", help="B, as comma-separated residues.")
@click.option("--d", "d", default="", help="D, as comma-separated residues.")
@click.option("--symmetric", is_flag=True, help="Also require B - D = D - B.")
def verifyASDS(m: int, b: str, d: str, symmetric: bool) -> None:
    pair = _pair(m, b, d)
    params = classify(pair)
    isSymmetric = symmetricDifferenceCheck(pair)
    verdict = params is not None and (isSymmetric or not symmetric)
    _emit(
        "asds",
        [
            ("m", str(m)),
            ("b", renderIntegers(pair.B)),
            ("d", renderIntegers(pair.D)),
            ("params", _params(params)),
            ("symmetric", renderVerdict(isSymmetric)),
            ("verdict", renderVerdict(verdict)),
        ],
    )
    _finish(verdict)


def _cocycleFields(psi: Cocycle) -> List[Field]:
    matrix = cocycleMatrix(psi)
    return [
        ("m", str(psi.group.m)),
        ("lambda", str(psi.lambdaFlag)),
        ("deltas", renderIntegers(psi.deltas)),
        ("re", str(rowExcess(matrix))),
        ("verdict", renderVerdict(isQuasiOrthogonal(psi))),
        ("matrix", renderMatrix(matrix)),
    ]


@verify.command("cocycle")
@click.option("-m", "m", type=int, required=True, help="The odd modulus.")
@click.option("--lambda/--no-lambda", "withLambda", default=True)
@click.option("--deltas", default="", help="Basis indices, e.g. 2,5,6.")
def verifyCocycle(m: int, withLambda: bool, deltas: str) -> None:
    """
    Decide whether a cocycle over Z_2 x Z_m is quasi-orthogonal.
    """
    psi = _cocycle(m, withLambda, deltas)
    _emit("cocycle", _cocycleFields(psi))
    _finish(isQuasiOrthogonal(psi))


@main.group(cls=_Group)
def convert() -> None:
    """
    Carry an object across one of the equivalences.
    """


def _converted(source: str, target: str, fields: Sequence[Field]) -> None:
    _emit("convert", [("from", source), ("to", target)] + list(fields))


def _bridgeFailed(source: str, target: str, e: BridgeConditionFailed) -> None:
    _converted(
        source, target, [("verdict", "false"), ("failed", e.condition)]
    )
    click.echo(f"optseq: {e}", err=True)
    _finish(False)


@convert.command("oqs-to-gobs", context_settings=_SEQUENCE_ARGUMENT)
@click.argument("sequence")
def oqsToGOBS(sequence: str) -> None:
    varphi = arrayToSequence(quatToArray(parseSequence(sequence)))
    _converted("oqs", "gobs", [("output", renderBinary(varphi.values))])


@convert.command("gobs-to-oqs", context_settings=_SEQUENCE_ARGUMENT)
@click.argument("sequence")
def gobsToOQS(sequence: str) -> None:
    f = arrayToQuat(sequenceToArray(parseBinary(sequence)))
    _converted("gobs", "oqs", [("output", renderSequence(f))])


@convert.command("oqs-to-asds", context_settings=_SEQUENCE_ARGUMENT)
@click.argument("sequence")
def oqsToASDS(sequence: str) -> None:
    try:
        result = asdsFromOQS(parseSequence(sequence))
    except BridgeConditionFailed as e:
        _bridgeFailed("oqs", "asds", e)
        return
    _converted(
        "oqs",
        "asds",
        [
            ("m", str(result.pair.m)),
            ("b", renderIntegers(result.pair.B)),
            ("d", renderIntegers(result.pair.D)),
            ("params", _params(result.params)),
            ("symmetric", renderVerdict(result.symmetric)),
            ("raw_b", renderIntegers(result.rawPair.B)),
            ("raw_d", renderIntegers(result.rawPair.D)),
            ("raw_symmetric", renderVerdict(result.rawSymmetric)),
        ],
    )


@convert.command("asds-to-oqs")
@click.option("-m", "m", type=int, required=True, help="The odd modulus.")
@click.option("--b", "b", default="", help="B, as comma-separated residues.")
@click.option("--d", "d", default="", help="D, as comma-separated residues.")
def asdsToOQS(m: int, b: str, d: str) -> None:
    try:
        f = oqsFromASDS(_pair(m, b, d))
    except BridgeConditionFailed as e:
        _bridgeFailed("asds", "oqs", e)
        return
    _converted("asds", "oqs", [("output", renderSequence(f))])


@convert.command("oqs-to-cocycle", context_settings=_SEQUENCE_ARGUMENT)
@click.argument("sequence")
def oqsToCocycle(sequence: str) -> None:
    """
    Print the cocycle of the normalized array of SEQUENCE, negating the
    sequence first when its array is not normalized.
    """
    f = parseSequence(sequence)
    pair = quatToArray(f)
    if not pair.isNormalized():
        pair = quatToArray(f.times(2))
    _converted("oqs", "cocycle", _cocycleFields(cocycleFromArray(pair)))


@convert.command("cocycle-to-asds")
@click.option("-m", "m", type=int, required=True, help="The odd modulus.")
@click.option("--lambda/--no-lambda", "withLambda", default=True)
@click.option("--deltas", default="", help="Basis indices, e.g. 2,5,6.")
def cocycleToASDS(m: int, withLambda: bool, deltas: str) -> None:
    try:
        pair = asdsFromCocycle(_cocycle(m, withLambda, deltas))
    except BridgeConditionFailed as e:
        _bridgeFailed("cocycle", "asds", e)
        return
    _converted(
        "cocycle",
        "asds",
        [
            ("m", str(m)),
            ("b", renderIntegers(pair.B)),
            ("d", renderIntegers(pair.D)),
            ("params", _params(classify(pair))),
            ("bridge", renderVerdict(isBridgePair(pair))),
        ],
    )


@convert.command("asds-to-cocycle")
@click.option("-m", "m", type=int, required=True, help="The odd modulus.")
@click.option("--b", "b", default="", help="B, as comma-separated residues.")
@click.option("--d", "d", default="", help="D, as comma-separated residues.")
def asdsToCocycle(m: int, b: str, d: str) -> None:
    try:
        psi = cocycleFromASDS(_pair(m, b, d))
    except BridgeConditionFailed as e:
        _bridgeFailed("asds", "cocycle", e)
        return
    _converted("asds", "cocycle", _cocycleFields(psi))


@main.group(cls=_Group)
def search() -> None:
    """
    Enumerate every object of a kind.
    """


@search.command("oqs")
@click.option("-m", "m", type=int, required=True, help="The odd length.")
@click.option("--canonical", is_flag=True, help="One sequence per class.")
@click.option("--jobs", type=int, default=None, help="Worker processes.")
def searchOQSCommand(m: int, canonical: bool, jobs: Optional[int]) -> None:
    records = searchOQS(m, canonicalize=canonical, jobs=jobs)
    for record in records:
        assert not isinstance(record.value, SubsetPair)
        _emit(
            "oqs",
            [
                ("m", str(m)),
                ("sequence", renderSequence(record.value)),
                ("spectrum", renderIntegers(record.evidence)),
                ("canonical", renderVerdict(record.canonical)),
            ],
        )
    _emit("summary", [("m", str(m)), ("count", str(len(records)))])
    _finish(bool(records))


@search.command("asds")
@click.option("-m", "m", type=int, required=True, help="The modulus.")
@click.option("--k1", type=int, required=True, help="The size of B.")
@click.option("--k2", type=int, required=True, help="The size of D.")
@click.option("--mu", type=int, default=None, help="The required mu.")
@click.option("--symmetric", is_flag=True, help="Require B - D = D - B.")
def searchASDSCommand(
    m: int, k1: int, k2: int, mu: Optional[int], symmetric: bool
) -> None:
    records = searchASDS(m, k1, k2, mu, symmetricOnly=symmetric)
    for record in records:
        assert isinstance(record.value, SubsetPair)
        _emit(
            "asds",
            [
                ("m", str(m)),
                ("b", renderIntegers(record.value.B)),
                ("d", renderIntegers(record.value.D)),
                ("params", _params(record.params)),
                ("counts", renderIntegers(record.evidence)),
            ],
        )
    _emit("summary", [("m", str(m)), ("count", str(len(records)))])
    _finish(bool(records))


def catalog(maxM: int, jobs: Optional[int] = None) -> Iterator[List[Field]]:
    """
    Yield one row per odd C{m <= maxM}: the OQS counts (raw and
    canonical), the least-coded witness and its ASDS parameters, whether
    the known families predict existence, and the quasi-orthogonal census
    when it is small enough to take.

    @raise SearchRangeError: if C{maxM} exceeds 13.
    """
    if maxM > MAX_OQS_LENGTH:
        raise SearchRangeError(f"the catalog stops at {MAX_OQS_LENGTH}")
    for m in range(1, maxM + 1, 2):
        if m == 1:
            yield [("m", "1"), ("trivial", "true")]
            continue
        records = searchOQS(m, jobs=jobs)
        log.info("catalogued m={m}", m=m)
        witness = "-"
        params = "-"
        if records:
            first = records[0].value
            assert not isinstance(first, SubsetPair)
            witness = renderSequence(first)
            params = _params(asdsFromOQS(first).params)
        try:
            census = str(quasiOrthogonalCensus(m))
        except BudgetExceeded:
            census = "-"
        yield [
            ("m", str(m)),
            ("raw", str(len(records))),
            ("canonical", str(sum(record.canonical for record in records))),
            ("witness", witness),
            ("asds", params),
            ("predicted", renderVerdict(predictedExistence(m))),
            ("census", census),
        ]


@main.command("catalog")
@click.option("--max-m", "maxM", type=int, default=9, help="Largest m.")
@click.option("--jobs", type=int, default=None, help="Worker processes.")
def catalogCommand(maxM: int, jobs: Optional[int]) -> None:
    """
    Tabulate existence of optimal quaternary sequences by odd length.
    """
    for row in catalog(maxM, jobs):
        _emit("catalog", row)


# -*- test-case-name: optseq.test.test_textformat -*-
"""
The text forms used on the command line and in its output records.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from .seqcore import BinarySeq, GaussianInt, InvalidSequence, QuaternarySeq


HEADER = "optseq-v1"

_EXPONENT_FOR_SYMBOL = {"+": 0, "i": 1, "-": 2, "j": 3}
_SYMBOL_FOR_EXPONENT = "+i-j"


class ParseError(ValueError):
    """
    Text could not be read as the requested kind of value.
    """


def parseSequence(text: str) -> QuaternarySeq:
    """
    Read a quaternary sequence written with C{+}, C{-}, C{i} and C{j} (for
    C{-i}).
    """
    try:
        return QuaternarySeq(
            tuple(_EXPONENT_FOR_SYMBOL[symbol] for symbol in text)
        )
    except KeyError as e:
        raise ParseError(f"{e.args[0]!r} is not one of + - i j") from None
    except InvalidSequence as e:
        raise ParseError(str(e)) from None


def renderSequence(f: QuaternarySeq) -> str:
    return "".join(_SYMBOL_FOR_EXPONENT[e] for e in f.exponents)


def parseBinary(text: str) -> BinarySeq:
    """
    Read a binary sequence written with C{+} and C{-}.
    """
    values = []
    for symbol in text:
        if symbol not in "+-":
            raise ParseError(f"{symbol!r} is not one of + -")
        values.append(1 if symbol == "+" else -1)
    try:
        return BinarySeq(tuple(values))
    except InvalidSequence as e:
        raise ParseError(str(e)) from None


def renderBinary(values: Sequence[int]) -> str:
    return "".join("+" if value == 1 else "-" for value in values)


def parseIntegers(text: str) -> List[int]:
    """
    Read a comma-separated list of integers; the empty string is the empty
    list.
    """
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ParseError(f"{text!r} is not a comma-separated list") from None


def renderIntegers(values: Sequence[int]) -> str:
    return ",".join(str(value) for value in values)


def renderGaussian(value: GaussianInt) -> str:
    if value.im == 0:
        return str(value.re)
    sign = "+" if value.im > 0 else "-"
    return f"{value.re}{sign}{abs(value.im)}i"


def renderMatrix(matrix: NDArray[np.int64]) -> str:
    return "/".join(renderBinary(row) for row in matrix.tolist())


Field = Tuple[str, str]


def renderRecord(kind: str, fields: Sequence[Field]) -> str:
    """
    One output line: C{kind=...} followed by C{key=value} pairs in the
    given order.
    """
    for key, value in fields:
        if " " in value or "=" in key:
            raise ValueError(f"field {key}={value!r} cannot be rendered")
    return " ".join(
        [f"kind={kind}"] + [f"{key}={value}" for key, value in fields]
    )


def parseRecord(line: str) -> Dict[str, str]:
    record = {}
    for part in line.split(" "):
        key, equals, value = part.partition("=")
        if not equals:
            raise ParseError(f"{part!r} is not a key=value pair")
        record[key] = value
    return record


def renderVerdict(verdict: bool) -> str:
    return "true" if verdict else "false"

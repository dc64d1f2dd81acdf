# -*- test-case-name: optseq.test.test_config -*-
"""
Enumeration budgets, and the environment variable that overrides them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from twisted.logger import Logger


log = Logger()

BUDGET_VARIABLE = "OPTSEQ_BUDGET"


@dataclass(frozen=True)
class Budgets:
    """
    Upper bounds on the number of candidates an exhaustive enumeration may
    visit before it refuses to start.

    @ivar oqsCandidates: cap on C{4**m} for L{optseq.search.searchOQS}.
    @ivar asdsCandidates: cap on C{binomial(m, k1) * binomial(m, k2)} for
        L{optseq.search.searchASDS}.
    @ivar optimumCandidates: cap on C{2**n} or C{4**n} for
        L{optseq.search.bruteForceOptimum}.
    """

    oqsCandidates: int = 4**13
    asdsCandidates: int = 10**9
    optimumCandidates: int = 10**8

    @classmethod
    def fromEnvironment(cls, environ: Mapping[str, str]) -> Budgets:
        """
        Load the default budgets, replacing every cap with the value of
        C{OPTSEQ_BUDGET} when it is set.

        @raise ValueError: if the variable is set but is not a positive
            integer.
        """
        budgets = cls()
        text = environ.get(BUDGET_VARIABLE)
        if text is None or not text.strip():
            return budgets
        try:
            value = int(text)
        except ValueError:
            raise ValueError(
                f"{BUDGET_VARIABLE} must be a positive integer, not {text!r}"
            ) from None
        if value < 1:
            raise ValueError(
                f"{BUDGET_VARIABLE} must be a positive integer, not {value}"
            )
        log.warn(
            "enumeration budgets overridden to {budget} by {variable}",
            budget=value,
            variable=BUDGET_VARIABLE,
        )
        return replace(
            budgets,
            oqsCandidates=value,
            asdsCandidates=value,
            optimumCandidates=value,
        )

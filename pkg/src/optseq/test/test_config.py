from __future__ import annotations

from typing import List

from twisted.logger import ILogObserver, LogEvent, Logger, LogLevel
from twisted.trial.unittest import SynchronousTestCase
from zope.interface import implementer

from .. import _config
from .._config import BUDGET_VARIABLE, Budgets


@implementer(ILogObserver)
class EventList:
    def __init__(self) -> None:
        self.events: List[LogEvent] = []

    def __call__(self, event: LogEvent) -> None:
        self.events.append(event)


class BudgetTests(SynchronousTestCase):
    """
    Tests for L{Budgets.fromEnvironment}.
    """

    def setUp(self) -> None:
        self.observed = EventList()
        self.patch(_config, "log", Logger(observer=self.observed))

    def test_defaults(self) -> None:
        """
        Without the variable, the default caps apply and nothing is logged.
        """
        budgets = Budgets.fromEnvironment({})
        self.assertEqual(budgets, Budgets())
        self.assertEqual(budgets.oqsCandidates, 4**13)
        self.assertEqual(self.observed.events, [])

    def test_blank(self) -> None:
        self.assertEqual(
            Budgets.fromEnvironment({BUDGET_VARIABLE: " "}), Budgets()
        )

    def test_override(self) -> None:
        """
        The variable replaces every cap, with a warning.
        """
        budgets = Budgets.fromEnvironment({BUDGET_VARIABLE: "1000"})
        self.assertEqual(budgets, Budgets(1000, 1000, 1000))
        [event] = self.observed.events
        self.assertEqual(event["log_level"], LogLevel.warn)
        self.assertEqual(event["budget"], 1000)

    def test_invalid(self) -> None:
        for text in ["lots", "0", "-5", "1.5"]:
            with self.assertRaises(ValueError) as raised:
                Budgets.fromEnvironment({BUDGET_VARIABLE: text})
            self.assertIn(BUDGET_VARIABLE, str(raised.exception))

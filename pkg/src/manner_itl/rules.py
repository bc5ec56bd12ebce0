"""Beta-parameterised beliefs over candidate rules.

A rule's belief is alpha / (alpha + beta); confirmation pins it to 1
permanently. Weighted evidence accumulates additively, so the order of
updates never matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .domain import RgbValue, Rule, Situation
from .errors import InvalidWeight

PRIOR_ALPHA = 1.0
PRIOR_BETA = 1.0


@dataclass
class RuleBelief:
    rule: Rule
    alpha: float = PRIOR_ALPHA
    beta: float = PRIOR_BETA
    confirmed: bool = False

    def belief(self) -> float:
        if self.confirmed:
            return 1.0
        return self.alpha / (self.alpha + self.beta)


class RuleStore:
    """One belief per structurally distinct rule, in first-seen order."""

    def __init__(self) -> None:
        self._beliefs: dict[Rule, RuleBelief] = {}

    def __len__(self) -> int:
        return len(self._beliefs)

    def __iter__(self) -> Iterator[RuleBelief]:
        return iter(self._beliefs.values())

    def __contains__(self, rule: Rule) -> bool:
        return rule in self._beliefs

    def _entry(self, rule: Rule) -> RuleBelief:
        if rule not in self._beliefs:
            self._beliefs[rule] = RuleBelief(rule)
        return self._beliefs[rule]

    def confirm(self, rule: Rule) -> None:
        self._entry(rule).confirmed = True

    def add_positive(self, rule: Rule, weight: float) -> None:
        if not 0.0 < weight <= 1.0:
            raise InvalidWeight(f"evidence weight must lie in (0, 1]: {weight!r}")
        entry = self._entry(rule)
        if not entry.confirmed:
            entry.alpha += weight

    def add_negative(self, rule: Rule, weight: float) -> None:
        if not 0.0 < weight <= 1.0:
            raise InvalidWeight(f"evidence weight must lie in (0, 1]: {weight!r}")
        entry = self._entry(rule)
        if not entry.confirmed:
            entry.beta += weight

    def belief(self, rule: Rule) -> float:
        entry = self._beliefs.get(rule)
        if entry is None:
            return PRIOR_ALPHA / (PRIOR_ALPHA + PRIOR_BETA)
        return entry.belief()

    def is_confirmed(self, rule: Rule) -> bool:
        entry = self._beliefs.get(rule)
        return entry is not None and entry.confirmed

    def rules_matching(
        self,
        situation: Situation,
        colour_posterior: Callable[[str, RgbValue], float],
    ) -> list[tuple[Rule, float]]:
        """Each stored rule with the probability its body holds in ``situation``.

        Shapes are observed noiselessly, so a shape atom contributes 1 on a
        match and 0 otherwise; a colour atom contributes its posterior.
        """
        matches: list[tuple[Rule, float]] = []
        for rule in self._beliefs:
            probability = 1.0
            if rule.body.shape is not None and rule.body.shape != situation.shape:
                probability = 0.0
            elif rule.body.colour is not None:
                probability = colour_posterior(rule.body.colour, situation.rgb)
            matches.append((rule, probability))
        return matches

    def snapshot(self) -> list[tuple[Rule, float, float, bool]]:
        return [(b.rule, b.alpha, b.beta, b.confirmed) for b in self._beliefs.values()]

"""Exact inference over binary variables by variable elimination.

A factor is a table over a tuple of binary variables. Eliminating a
variable Y from a set of factors means multiplying every factor whose
scope contains Y and summing Y out of the product; after all non-query
variables are eliminated, the product of the remaining factors is the
(unnormalised) distribution over the query variables.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np


class Factor:
    """A table over binary variables; axis i indexes variables[i] in {0, 1}."""

    def __init__(self, variables: Sequence[str], table: np.ndarray):
        table = np.asarray(table, dtype=float)
        if table.shape != (2,) * len(variables):
            raise ValueError(f"table shape {table.shape} does not fit {variables}")
        self.variables = tuple(variables)
        self.table = table

    def __repr__(self) -> str:
        return f"Factor({self.variables})"

    def multiply(self, other: "Factor") -> "Factor":
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        a = self._expand(merged)
        b = other._expand(merged)
        return Factor(merged, a * b)

    def _expand(self, variables: tuple[str, ...]) -> np.ndarray:
        # Broadcast this table onto the axis order given by `variables`.
        table = self.table
        axes = [variables.index(v) for v in self.variables]
        expanded = np.moveaxis(
            table.reshape(table.shape + (1,) * (len(variables) - len(self.variables))),
            range(len(self.variables)),
            axes,
        )
        return np.broadcast_to(expanded, (2,) * len(variables))

    def sum_out(self, variable: str) -> "Factor":
        axis = self.variables.index(variable)
        remaining = tuple(v for v in self.variables if v != variable)
        return Factor(remaining, self.table.sum(axis=axis))

    def reduce(self, variable: str, value: int) -> "Factor":
        axis = self.variables.index(variable)
        remaining = tuple(v for v in self.variables if v != variable)
        return Factor(remaining, np.take(self.table, value, axis=axis))

    def value(self) -> float:
        if self.variables:
            raise ValueError("factor still has free variables")
        return float(self.table)


def reduce_evidence(factors: Iterable[Factor], evidence: Mapping[str, int]) -> list[Factor]:
    reduced = []
    for factor in factors:
        for variable, value in evidence.items():
            if variable in factor.variables:
                factor = factor.reduce(variable, value)
        reduced.append(factor)
    return reduced


def eliminate(factors: Sequence[Factor], keep: Sequence[str] = ()) -> Factor:
    """Sum out every variable not in ``keep``; returns one combined factor."""
    factors = list(factors)
    to_eliminate = sorted(
        {v for f in factors for v in f.variables if v not in keep}
    )
    for variable in to_eliminate:
        involved = [f for f in factors if variable in f.variables]
        if not involved:
            continue
        product = involved[0]
        for factor in involved[1:]:
            product = product.multiply(factor)
        factors = [f for f in factors if variable not in f.variables]
        factors.append(product.sum_out(variable))
    if not factors:
        return Factor((), np.array(1.0))
    result = factors[0]
    for factor in factors[1:]:
        result = result.multiply(factor)
    return result


def query_probability(
    factors: Sequence[Factor],
    target: Mapping[str, int],
    evidence: Mapping[str, int] | None = None,
) -> float:
    """P(target | evidence) by variable elimination."""
    evidence = dict(evidence or {})
    overlap = set(target) & set(evidence)
    if overlap:
        raise ValueError(f"variables both queried and observed: {sorted(overlap)}")
    reduced = reduce_evidence(factors, evidence)
    joint = eliminate(reduced, keep=tuple(target))
    numerator = joint
    for variable, value in target.items():
        numerator = numerator.reduce(variable, value)
    denominator = eliminate([joint]).value()
    if denominator == 0.0:
        raise ZeroDivisionError("evidence has probability zero")
    return numerator.value() / denominator

"""The dynamically growing decision network and manner-option selection.

Structure is a pure function of the vocabulary and the rule store: one
chance node per known colour (evidence-driven, via the grounding posterior),
one chance node per adverb that heads at least one stored rule (parents are
the colour atoms of its rules, plus the observed shape when any rule body
names a shape), and one behaviour node per dimension fed by that dimension's
manner nodes. Manner-node tables combine rule beliefs by noisy-OR: any
sufficiently believed rule whose body holds suffices to demand the manner.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import TYPE_CHECKING

import numpy as np

from .domain import DIMENSIONS, BehaviourPoint, Rule, Situation, Vocabulary
from .errors import UnsyncedStructure
from .factors import Factor, eliminate
from .grounding import GroundingModel
from .rules import RuleStore

if TYPE_CHECKING:
    from .behaviour import AdverbModel

DEFAULT_LEAK = 0.05

OBSERVED_RGB = "F(s)"
OBSERVED_SHAPE = "S"


@dataclass(frozen=True)
class MannerOption:
    """At most one adverb per behaviour dimension; None leaves it free."""

    speed: str | None = None
    energy: str | None = None
    direction: str | None = None

    def of(self, dimension: str) -> str | None:
        return getattr(self, dimension)

    @property
    def adverbs(self) -> tuple[str, ...]:
        return tuple(a for a in (self.speed, self.energy, self.direction) if a is not None)

    def label(self) -> str:
        return "{" + ", ".join(self.adverbs) + "}"


@dataclass
class NetStructure:
    colours: tuple[str, ...]
    manner_nodes: tuple[str, ...]
    # adverb -> (colour parents, has shape parent)
    manner_parents: dict[str, tuple[tuple[str, ...], bool]]
    rule_keys: frozenset[Rule]

    def nodes(self) -> list[dict]:
        items = [
            {"id": OBSERVED_RGB, "kind": "observed"},
            {"id": OBSERVED_SHAPE, "kind": "observed"},
        ]
        items += [{"id": c, "kind": "colour"} for c in self.colours]
        items += [{"id": m, "kind": "manner"} for m in self.manner_nodes]
        items += [{"id": d, "kind": "behaviour"} for d in DIMENSIONS]
        return items

    def edges(self) -> list[dict]:
        links = [{"from": OBSERVED_RGB, "to": c} for c in self.colours]
        for manner in self.manner_nodes:
            colour_parents, has_shape = self.manner_parents[manner]
            if has_shape:
                links.append({"from": OBSERVED_SHAPE, "to": manner})
            links += [{"from": c, "to": manner} for c in colour_parents]
        return links

    def behaviour_edges(self, vocab: Vocabulary) -> list[dict]:
        return [{"from": m, "to": vocab.dimension_of(m)} for m in self.manner_nodes]


def sync_structure(rule_store: RuleStore, vocab: Vocabulary) -> NetStructure:
    """Derive the network structure from the rule store and vocabulary."""
    manner_parents: dict[str, tuple[set[str], bool]] = {}
    for belief in rule_store:
        rule = belief.rule
        colours, has_shape = manner_parents.setdefault(rule.head, (set(), False))
        if rule.body.colour is not None:
            colours.add(rule.body.colour)
        if rule.body.shape is not None:
            has_shape = True
        manner_parents[rule.head] = (colours, has_shape)
    return NetStructure(
        colours=tuple(vocab.known_colours),
        manner_nodes=tuple(manner_parents),
        manner_parents={
            adverb: (tuple(sorted(colours)), has_shape)
            for adverb, (colours, has_shape) in manner_parents.items()
        },
        rule_keys=frozenset(b.rule for b in rule_store),
    )


def _check_synced(net: NetStructure, rule_store: RuleStore, vocab: Vocabulary) -> None:
    if net.rule_keys != frozenset(b.rule for b in rule_store) or set(net.colours) != set(
        vocab.known_colours
    ):
        raise UnsyncedStructure("structure is stale; call sync_structure first")


def _manner_cpd(
    net: NetStructure,
    adverb: str,
    situation: Situation,
    rule_store: RuleStore,
    leak: float,
) -> Factor:
    """Noisy-OR table for one manner node given its colour parents."""
    colour_parents, _ = net.manner_parents[adverb]
    rules = [b for b in rule_store if b.rule.head == adverb]
    table = np.empty((2,) * len(colour_parents) + (2,))
    for assignment in iter_product((0, 1), repeat=len(colour_parents)):
        truth = dict(zip(colour_parents, assignment))
        off = 1.0 - leak
        for belief in rules:
            body = belief.rule.body
            if body.shape is not None and body.shape != situation.shape:
                continue
            if body.colour is not None and not truth.get(body.colour):
                continue
            off *= 1.0 - belief.belief()
        table[assignment + (1,)] = 1.0 - off
        table[assignment + (0,)] = off
    return Factor(colour_parents + (adverb,), table)


def _net_factors(
    net: NetStructure,
    situation: Situation,
    rule_store: RuleStore,
    grounding: GroundingModel,
    leak: float,
) -> list[Factor]:
    factors = []
    for colour in net.colours:
        p = grounding.posterior(colour, situation.rgb)
        factors.append(Factor((colour,), np.array([1.0 - p, p])))
    for adverb in net.manner_nodes:
        factors.append(_manner_cpd(net, adverb, situation, rule_store, leak))
    return factors


def manner_joint(
    net: NetStructure,
    situation: Situation,
    rule_store: RuleStore,
    grounding: GroundingModel,
    leak: float = DEFAULT_LEAK,
) -> Factor:
    """Joint distribution over all manner nodes, colours eliminated."""
    factors = _net_factors(net, situation, rule_store, grounding, leak)
    return eliminate(factors, keep=net.manner_nodes)


def option_probability(
    net: NetStructure,
    option: MannerOption,
    situation: Situation,
    rule_store: RuleStore,
    grounding: GroundingModel,
    vocab: Vocabulary,
    leak: float = DEFAULT_LEAK,
) -> float:
    """Probability that exactly the option's adverbs hold, given the evidence."""
    _check_synced(net, rule_store, vocab)
    joint = manner_joint(net, situation, rule_store, grounding, leak)
    chosen = set(option.adverbs)
    for adverb in net.manner_nodes:
        joint = joint.reduce(adverb, 1 if adverb in chosen else 0)
    return joint.value()


def enumerate_options(net: NetStructure, vocab: Vocabulary) -> list[MannerOption]:
    """Every per-dimension choice of one adverb or none, in tie-break order."""
    per_dimension: dict[str, list[str | None]] = {d: [None] for d in DIMENSIONS}
    for adverb in net.manner_nodes:
        per_dimension[vocab.dimension_of(adverb)].append(adverb)
    options = [
        MannerOption(speed=s, energy=e, direction=d)
        for s in per_dimension["speed"]
        for e in per_dimension["energy"]
        for d in per_dimension["direction"]
    ]
    options.sort(key=lambda o: (len(o.adverbs), o.adverbs))
    return options


def argmax_option(scored: list[tuple[MannerOption, float]]) -> MannerOption:
    """Highest-probability option; ties go to fewer adverbs, then name order."""
    ordered = sorted(scored, key=lambda item: (len(item[0].adverbs), item[0].adverbs))
    best, best_score = ordered[0]
    for option, score in ordered[1:]:
        if score > best_score:
            best, best_score = option, score
    return best


def select_option(
    net: NetStructure,
    situation: Situation,
    rule_store: RuleStore,
    grounding: GroundingModel,
    vocab: Vocabulary,
    leak: float = DEFAULT_LEAK,
) -> MannerOption:
    """Most likely manner option for the current situation."""
    _check_synced(net, rule_store, vocab)
    joint = manner_joint(net, situation, rule_store, grounding, leak)
    scored = []
    for option in enumerate_options(net, vocab):
        factor = joint
        chosen = set(option.adverbs)
        for adverb in net.manner_nodes:
            factor = factor.reduce(adverb, 1 if adverb in chosen else 0)
        scored.append((option, factor.value()))
    return argmax_option(scored)


def select_point(
    option: MannerOption,
    behaviour_models: dict[str, "AdverbModel"],
    rng: np.random.Generator,
) -> BehaviourPoint:
    """Sample each constrained dimension from its adverb; the rest uniformly."""
    coordinates = {}
    for dimension in DIMENSIONS:
        adverb = option.of(dimension)
        if adverb is None:
            coordinates[dimension] = float(rng.uniform(0.0, 1.0))
        else:
            coordinates[dimension] = behaviour_models[adverb].sample(rng)
    return BehaviourPoint(**coordinates)

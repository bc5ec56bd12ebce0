"""The five agent strategies behind one act/ingest interface.

All strategies receive teacher feedback as a raw utterance string (the same
wire format the teaching service uses) and parse it with their own
vocabulary, so the simulated and human-taught code paths are identical.
"""

from __future__ import annotations

import numpy as np

from .behaviour import AdverbModel
from .domain import (
    Assent,
    BehaviourPoint,
    EvidenceBundle,
    Situation,
    Utterance,
    Vocabulary,
    interpret,
    parse_utterance,
)
from .grounding import GroundingModel
from .inference import (
    DEFAULT_LEAK,
    MannerOption,
    NetStructure,
    select_option,
    select_point,
    sync_structure,
)
from .rules import RuleStore

STRATEGY_KINDS = ("full", "no-assent", "no-negative", "just-no", "random")

# Confidence gate for harvesting a positive behaviour exemplar from assent.
POSITIVE_EXEMPLAR_THRESHOLD = 0.7

# A partial correction only posits rules whose context plausibly holds now.
# Without this floor, colours with negligible posterior enter the store at the
# uniform prior (belief 0.5) and the noisy-OR treats them as half-active
# causes, locking the agent into wrong manners it can never unlearn.
HYPOTHESIS_WEIGHT_FLOOR = 0.01

# Episodic matching constants for the just-no baseline.
JUST_NO_RGB_RADIUS = 30.0
JUST_NO_AVOID_RADIUS = 0.15
JUST_NO_MAX_ATTEMPTS = 100


def _uniform_point(rng: np.random.Generator) -> BehaviourPoint:
    speed, energy, direction = rng.uniform(0.0, 1.0, size=3)
    return BehaviourPoint(float(speed), float(energy), float(direction))


class Agent:
    """Base strategy: act on a situation, then ingest the teacher's feedback."""

    kind: str = "base"

    def __init__(self, vocab: Vocabulary):
        self.vocab = vocab
        self.last_option: MannerOption | None = None

    def act(self, situation: Situation, rng: np.random.Generator) -> BehaviourPoint:
        raise NotImplementedError

    def ingest(
        self,
        situation: Situation,
        point: BehaviourPoint,
        utterance: Utterance,
        chosen_option: MannerOption | None,
    ) -> EvidenceBundle | None:
        raise NotImplementedError

    def ingest_text(
        self, situation: Situation, point: BehaviourPoint, text: str
    ) -> EvidenceBundle | None:
        """Parse the teacher's words with this agent's vocabulary, then ingest."""
        result = parse_utterance(text, self.vocab)
        return self.ingest(situation, point, result.utterance, self.last_option)


class RandomAgent(Agent):
    """Uniform behaviour, no learning."""

    kind = "random"

    def act(self, situation: Situation, rng: np.random.Generator) -> BehaviourPoint:
        return _uniform_point(rng)

    def ingest(self, situation, point, utterance, chosen_option):
        return None


class JustNoAgent(Agent):
    """Learns only from the yes/no polarity via an episodic memory.

    A remembered "yes" for a matching situation is replayed verbatim;
    otherwise candidate points are rejection-sampled away from remembered
    "no" points of matching situations.
    """

    kind = "just-no"

    def __init__(self, vocab: Vocabulary):
        super().__init__(vocab)
        self.records: list[tuple[Situation, BehaviourPoint, bool]] = []

    @staticmethod
    def _matches(recorded: Situation, current: Situation) -> bool:
        return (
            recorded.shape == current.shape
            and recorded.rgb.distance(current.rgb) <= JUST_NO_RGB_RADIUS
        )

    @staticmethod
    def _behaviour_distance(a: BehaviourPoint, b: BehaviourPoint) -> float:
        return float(
            np.linalg.norm(np.array(a.as_tuple()) - np.array(b.as_tuple()))
        )

    def act(self, situation: Situation, rng: np.random.Generator) -> BehaviourPoint:
        for recorded, point, positive in self.records:
            if positive and self._matches(recorded, situation):
                return point
        avoid = [
            point
            for recorded, point, positive in self.records
            if not positive and self._matches(recorded, situation)
        ]
        candidate = _uniform_point(rng)
        for _ in range(JUST_NO_MAX_ATTEMPTS):
            candidate = _uniform_point(rng)
            if all(self._behaviour_distance(candidate, p) > JUST_NO_AVOID_RADIUS for p in avoid):
                return candidate
        return candidate

    def ingest(self, situation, point, utterance, chosen_option):
        self.records.append((situation, point, isinstance(utterance, Assent)))
        return None


class LearningAgent(Agent):
    """The full coherence-exploiting learner, with switchable ablations."""

    kind = "full"

    def __init__(
        self,
        vocab: Vocabulary,
        learn_from_assent: bool = True,
        learn_negatives: bool = True,
        leak: float = DEFAULT_LEAK,
        kind: str = "full",
    ):
        super().__init__(vocab)
        self.kind = kind
        self.learn_from_assent = learn_from_assent
        self.learn_negatives = learn_negatives
        self.leak = leak
        self.grounding = GroundingModel()
        self.rules = RuleStore()
        self.behaviour_models: dict[str, AdverbModel] = {}
        self.net: NetStructure | None = None

    def model_for(self, adverb: str) -> AdverbModel:
        if adverb not in self.behaviour_models:
            self.behaviour_models[adverb] = AdverbModel(adverb, self.vocab.dimension_of(adverb))
        return self.behaviour_models[adverb]

    def act(self, situation: Situation, rng: np.random.Generator) -> BehaviourPoint:
        self.net = sync_structure(self.rules, self.vocab)
        option = select_option(
            self.net, situation, self.rules, self.grounding, self.vocab, self.leak
        )
        self.last_option = option
        models = {adverb: self.model_for(adverb) for adverb in option.adverbs}
        return select_point(option, models, rng)

    def ingest(self, situation, point, utterance, chosen_option):
        if isinstance(utterance, Assent):
            if self.learn_from_assent:
                self._apply_assent(situation, point, chosen_option)
            return EvidenceBundle(assent=True)

        bundle = interpret(utterance, situation, point, self.vocab, self.grounding.posterior)
        for colour, weight, rgb in bundle.grounding_exemplars:
            self.vocab.add_colour(colour)
            self.grounding.add_exemplar(colour, weight, rgb)
        for rule in bundle.confirmed_rules:
            self.rules.confirm(rule)
            self.model_for(rule.head)
        for rule, weight in bundle.rule_hypotheses:
            if weight >= HYPOTHESIS_WEIGHT_FLOOR:
                self.rules.add_positive(rule, min(weight, 1.0))
                self.model_for(rule.head)
        if self.learn_negatives:
            for adverb, value in bundle.negative_adverb_exemplars:
                self.model_for(adverb).add_negative(value)
        return bundle

    def _apply_assent(
        self,
        situation: Situation,
        point: BehaviourPoint,
        chosen_option: MannerOption | None,
    ) -> None:
        """Assent tells us the action satisfied every applicable constraint."""
        snapshot = [
            (rule, match, self.rules.belief(rule))
            for rule, match in self.rules.rules_matching(situation, self.grounding.posterior)
        ]
        for rule, match, belief in snapshot:
            if belief * match > POSITIVE_EXEMPLAR_THRESHOLD:
                dimension = self.vocab.dimension_of(rule.head)
                self.model_for(rule.head).add_positive(point.coordinate(dimension))
        if chosen_option is None:
            return
        for rule, match, _ in snapshot:
            if match <= 0.0 or self.rules.is_confirmed(rule):
                continue
            performed = chosen_option.of(self.vocab.dimension_of(rule.head))
            if performed is not None and performed != rule.head:
                self.rules.add_negative(rule, min(match, 1.0))


def make_agent(kind: str, vocab: Vocabulary) -> Agent:
    """Build an agent by its strategy name."""
    if kind == "random":
        return RandomAgent(vocab)
    if kind == "just-no":
        return JustNoAgent(vocab)
    if kind == "full":
        return LearningAgent(vocab)
    if kind == "no-assent":
        return LearningAgent(vocab, learn_from_assent=False, kind=kind)
    if kind == "no-negative":
        return LearningAgent(vocab, learn_negatives=False, kind=kind)
    raise ValueError(f"unknown strategy kind: {kind!r} (expected one of {STRATEGY_KINDS})")

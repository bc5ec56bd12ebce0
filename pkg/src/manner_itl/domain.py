"""Core domain types, the teacher-utterance grammar, and utterance interpretation.

The teacher can say exactly three kinds of things:

    yes
    no, when you see red squares do it gently and slowly
    no, do it quickly

``parse_utterance`` and ``render_utterance`` are inverses over well-formed
utterances. ``interpret`` turns an utterance, heard in the context of a
situation and a performed behaviour point, into an :class:`EvidenceBundle`
that the learner's models consume.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import DimensionConflict, MalformedUtterance, UnknownAdverb

DIMENSIONS = ("speed", "energy", "direction")

DEFAULT_SHAPES = ("square", "circle", "triangle")

# Generic plural noun used when a rule body names a colour but no shape.
GENERIC_NOUN = "things"


@dataclass(frozen=True)
class RgbValue:
    """An observed raw colour value, one byte per channel."""

    r: int
    g: int
    b: int

    def __post_init__(self) -> None:
        for channel in (self.r, self.g, self.b):
            if not isinstance(channel, int) or not 0 <= channel <= 255:
                raise ValueError(f"RGB channel out of [0, 255]: {channel!r}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.g, self.b)

    def distance(self, other: "RgbValue") -> float:
        return math.sqrt(
            (self.r - other.r) ** 2 + (self.g - other.g) ** 2 + (self.b - other.b) ** 2
        )


@dataclass(frozen=True)
class Situation:
    """One observed context: a shape label plus its raw RGB value."""

    shape: str
    rgb: RgbValue


@dataclass(frozen=True)
class BehaviourPoint:
    """A point in the 3-D behaviour space, every coordinate in [0, 1]."""

    speed: float
    energy: float
    direction: float

    def __post_init__(self) -> None:
        for value in (self.speed, self.energy, self.direction):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"behaviour coordinate out of [0, 1]: {value!r}")

    def coordinate(self, dimension: str) -> float:
        if dimension not in DIMENSIONS:
            raise ValueError(f"unknown behaviour dimension: {dimension!r}")
        return getattr(self, dimension)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.speed, self.energy, self.direction)


@dataclass(frozen=True)
class RuleBody:
    """The context part of a rule: a colour, a shape, or both."""

    colour: str | None = None
    shape: str | None = None

    def __post_init__(self) -> None:
        if self.colour is None and self.shape is None:
            raise ValueError("a rule body needs at least one of colour/shape")

    def text(self) -> str:
        atoms = [a for a in (self.colour, self.shape) if a is not None]
        return " & ".join(atoms)


@dataclass(frozen=True)
class Rule:
    """A constraint body -> adverb, compared structurally."""

    body: RuleBody
    head: str

    def text(self) -> str:
        return f"{self.body.text()} -> {self.head}"


@dataclass(frozen=True)
class Assent:
    """The 'yes' response, licensed only by a violation-free action."""


@dataclass(frozen=True)
class FullCorrection:
    """A correction that states the triggering context and the required adverbs."""

    body: RuleBody
    adverbs: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.adverbs:
            raise ValueError("a correction must mention at least one adverb")


@dataclass(frozen=True)
class PartialCorrection:
    """A correction that states only adverbs, leaving the context to inference."""

    adverbs: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.adverbs:
            raise ValueError("a correction must mention at least one adverb")


Utterance = Union[Assent, FullCorrection, PartialCorrection]


@dataclass
class Vocabulary:
    """Session vocabulary: fixed shapes, declared adverbs, growing colours.

    Adverbs must be declared up front with their behaviour dimension; the
    colour vocabulary starts empty and grows as the teacher mentions new
    colour words. It never shrinks.
    """

    shapes: tuple[str, ...] = DEFAULT_SHAPES
    adverb_dimensions: dict[str, str] = field(default_factory=dict)
    known_colours: list[str] = field(default_factory=list)
    seen_adverbs: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        for adverb, dimension in self.adverb_dimensions.items():
            if dimension not in DIMENSIONS:
                raise ValueError(f"adverb {adverb!r} on unknown dimension {dimension!r}")

    def dimension_of(self, adverb: str) -> str:
        try:
            return self.adverb_dimensions[adverb]
        except KeyError:
            raise UnknownAdverb(f"adverb {adverb!r} has no dimension annotation") from None

    def add_colour(self, name: str) -> bool:
        """Add a colour word; returns True when it was previously unseen."""
        if name in self.known_colours:
            return False
        self.known_colours.append(name)
        return True

    def note_adverb(self, name: str) -> bool:
        """Record that an adverb has been used; returns True on first use."""
        if name not in self.adverb_dimensions:
            raise UnknownAdverb(f"adverb {name!r} has no dimension annotation")
        if name in self.seen_adverbs:
            return False
        self.seen_adverbs.append(name)
        return True


@dataclass(frozen=True)
class EvidenceBundle:
    """Everything the learner may extract from one teacher utterance."""

    grounding_exemplars: tuple[tuple[str, float, RgbValue], ...] = ()
    confirmed_rules: tuple[Rule, ...] = ()
    rule_hypotheses: tuple[tuple[Rule, float], ...] = ()
    negative_adverb_exemplars: tuple[tuple[str, float], ...] = ()
    assent: bool = False


@dataclass(frozen=True)
class ParseResult:
    """A parsed utterance plus any symbols it introduced into the vocabulary."""

    utterance: Utterance
    new_colours: tuple[str, ...] = ()
    new_adverbs: tuple[str, ...] = ()


_FULL_RE = re.compile(r"^no,\s*when you see\s+(?P<body>.+?)\s+do it\s+(?P<advs>.+)$")
_PARTIAL_RE = re.compile(r"^no,\s*do it\s+(?P<advs>.+)$")


def _normalise(text: str) -> str:
    return re.sub(r"\s+", " ", text.strip().lower()).rstrip(".!")


def _split_adverbs(phrase: str, vocab: Vocabulary) -> tuple[str, ...]:
    adverbs = tuple(a.strip() for a in phrase.split(" and "))
    if not adverbs or any(not a or " " in a for a in adverbs):
        raise MalformedUtterance(f"cannot read adverb list: {phrase!r}")
    for adverb in adverbs:
        if adverb not in vocab.adverb_dimensions:
            raise UnknownAdverb(f"adverb {adverb!r} has no dimension annotation")
    dims = [vocab.dimension_of(a) for a in adverbs]
    if len(set(dims)) != len(dims):
        raise DimensionConflict(f"adverbs {adverbs} share a behaviour dimension")
    return adverbs


def _parse_body(phrase: str, vocab: Vocabulary) -> RuleBody:
    tokens = phrase.split()

    def as_shape(token: str) -> str | None:
        if token.endswith("s") and token[:-1] in vocab.shapes:
            return token[:-1]
        return None

    if len(tokens) == 1:
        shape = as_shape(tokens[0])
        if shape is None:
            raise MalformedUtterance(f"expected a plural shape noun, got {tokens[0]!r}")
        return RuleBody(shape=shape)
    if len(tokens) == 2:
        colour, noun = tokens
        if noun == GENERIC_NOUN:
            return RuleBody(colour=colour)
        shape = as_shape(noun)
        if shape is None:
            raise MalformedUtterance(f"expected a plural shape noun, got {noun!r}")
        return RuleBody(colour=colour, shape=shape)
    raise MalformedUtterance(f"cannot read context description: {phrase!r}")


def parse_utterance(text: str, vocab: Vocabulary) -> ParseResult:
    """Parse a teacher utterance; unseen colour words join the vocabulary.

    Raises MalformedUtterance when no schema matches, UnknownAdverb when an
    adverb word was never declared with a dimension, and DimensionConflict
    when two adverbs in one utterance share a dimension.
    """
    norm = _normalise(text)
    if norm == "yes":
        return ParseResult(Assent())

    match = _FULL_RE.match(norm)
    if match:
        body = _parse_body(match.group("body"), vocab)
        adverbs = _split_adverbs(match.group("advs"), vocab)
        new_colours: tuple[str, ...] = ()
        if body.colour is not None and vocab.add_colour(body.colour):
            new_colours = (body.colour,)
        new_adverbs = tuple(a for a in adverbs if vocab.note_adverb(a))
        return ParseResult(FullCorrection(body, adverbs), new_colours, new_adverbs)

    match = _PARTIAL_RE.match(norm)
    if match:
        adverbs = _split_adverbs(match.group("advs"), vocab)
        new_adverbs = tuple(a for a in adverbs if vocab.note_adverb(a))
        return ParseResult(PartialCorrection(adverbs), (), new_adverbs)

    raise MalformedUtterance(f"utterance matches no known schema: {text!r}")


def render_utterance(utterance: Utterance) -> str:
    """Render an utterance to its canonical surface string."""
    if isinstance(utterance, Assent):
        return "yes"
    adverb_phrase = " and ".join(utterance.adverbs)
    if isinstance(utterance, PartialCorrection):
        return f"no, do it {adverb_phrase}"
    body = utterance.body
    if body.colour is not None and body.shape is not None:
        noun_phrase = f"{body.colour} {body.shape}s"
    elif body.colour is not None:
        noun_phrase = f"{body.colour} {GENERIC_NOUN}"
    else:
        noun_phrase = f"{body.shape}s"
    return f"no, when you see {noun_phrase} do it {adverb_phrase}"


def interpret(
    utterance: Utterance,
    situation: Situation,
    point: BehaviourPoint,
    vocab: Vocabulary,
    colour_posterior: Callable[[str, RgbValue], float],
) -> EvidenceBundle:
    """Turn an utterance heard in context into learning evidence.

    A full correction confirms one rule per mentioned adverb and, when the
    body names a colour, yields a weight-1 grounding exemplar at the observed
    RGB. A partial correction yields weighted rule hypotheses: the observed
    shape alone at weight 1, and each known colour (alone and with the shape)
    at that colour's current posterior for the observed RGB. Every correction
    marks the performed point as a negative exemplar of each mentioned
    adverb, on that adverb's dimension. Assent carries no exemplar or rule
    content; it is interpreted by the agent strategies.

    Pure: identical inputs produce identical bundles.
    """
    if isinstance(utterance, Assent):
        return EvidenceBundle(assent=True)

    negatives = tuple(
        (adverb, point.coordinate(vocab.dimension_of(adverb)))
        for adverb in utterance.adverbs
    )

    if isinstance(utterance, FullCorrection):
        grounding: tuple[tuple[str, float, RgbValue], ...] = ()
        if utterance.body.colour is not None:
            grounding = ((utterance.body.colour, 1.0, situation.rgb),)
        confirmed = tuple(Rule(utterance.body, adverb) for adverb in utterance.adverbs)
        return EvidenceBundle(
            grounding_exemplars=grounding,
            confirmed_rules=confirmed,
            negative_adverb_exemplars=negatives,
        )

    hypotheses: list[tuple[Rule, float]] = []
    for adverb in utterance.adverbs:
        hypotheses.append((Rule(RuleBody(shape=situation.shape), adverb), 1.0))
        for colour in vocab.known_colours:
            weight = colour_posterior(colour, situation.rgb)
            hypotheses.append((Rule(RuleBody(colour=colour), adverb), weight))
            hypotheses.append(
                (Rule(RuleBody(colour=colour, shape=situation.shape), adverb), weight)
            )
    return EvidenceBundle(
        rule_hypotheses=tuple(hypotheses),
        negative_adverb_exemplars=negatives,
    )

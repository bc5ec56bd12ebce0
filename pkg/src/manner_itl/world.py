"""Ground-truth environment and the simulated teacher.

The ground truth holds the real colour regions (axis-aligned RGB boxes), the
real adverb intervals, and the rule set with a per-rule expression policy
(full or partial). The teacher observes each action, finds the violated
rules, and responds coherently: assent when nothing is violated, otherwise a
correction that mentions exactly the violated adverbs of one rule body.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .domain import (
    DEFAULT_SHAPES,
    Assent,
    BehaviourPoint,
    FullCorrection,
    PartialCorrection,
    RgbValue,
    Rule,
    RuleBody,
    Situation,
    Utterance,
    Vocabulary,
)
from .errors import ConfigError

CONFIG_ENV_VAR = "MANNER_ITL_CONFIG"

FULL = "full"
PARTIAL = "partial"


@dataclass(frozen=True)
class ColourBox:
    """Axis-aligned RGB box: sampler and membership test for one colour."""

    r: tuple[int, int]
    g: tuple[int, int]
    b: tuple[int, int]

    def sample(self, rng: np.random.Generator) -> RgbValue:
        return RgbValue(
            int(rng.integers(self.r[0], self.r[1] + 1)),
            int(rng.integers(self.g[0], self.g[1] + 1)),
            int(rng.integers(self.b[0], self.b[1] + 1)),
        )

    def contains(self, rgb: RgbValue) -> bool:
        return (
            self.r[0] <= rgb.r <= self.r[1]
            and self.g[0] <= rgb.g <= self.g[1]
            and self.b[0] <= rgb.b <= self.b[1]
        )


@dataclass(frozen=True)
class AdverbRegion:
    """The closed interval of one behaviour dimension an adverb denotes."""

    dimension: str
    low: float
    high: float

    def contains(self, value: float) -> bool:
        return self.low <= value <= self.high


@dataclass
class GroundTruth:
    shapes: tuple[str, ...]
    colour_defs: dict[str, ColourBox]
    adverb_defs: dict[str, AdverbRegion]
    rules: tuple[Rule, ...]
    policy: dict[Rule, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for rule in self.rules:
            self.policy.setdefault(rule, FULL)
        self.validate()

    def validate(self) -> None:
        by_dimension: dict[str, list[tuple[str, AdverbRegion]]] = {}
        for name, region in self.adverb_defs.items():
            by_dimension.setdefault(region.dimension, []).append((name, region))
        for dimension, entries in by_dimension.items():
            entries.sort(key=lambda item: item[1].low)
            for (name_a, a), (name_b, b) in zip(entries, entries[1:]):
                if b.low <= a.high:
                    raise ConfigError(
                        f"adverb intervals overlap on {dimension}: {name_a}, {name_b}"
                    )
        partial_colours = set()
        full_colours = set()
        bodies: dict[RuleBody, list[Rule]] = {}
        for rule in self.rules:
            if rule.head not in self.adverb_defs:
                raise ConfigError(f"rule head {rule.head!r} is not a defined adverb")
            if rule.body.colour is not None and rule.body.colour not in self.colour_defs:
                raise ConfigError(f"rule colour {rule.body.colour!r} is not defined")
            if rule.body.shape is not None and rule.body.shape not in self.shapes:
                raise ConfigError(f"rule shape {rule.body.shape!r} is not defined")
            bodies.setdefault(rule.body, []).append(rule)
            if rule.body.colour is not None:
                if self.policy[rule] == PARTIAL:
                    partial_colours.add(rule.body.colour)
                else:
                    full_colours.add(rule.body.colour)
        for body, group in bodies.items():
            dims = [self.adverb_defs[r.head].dimension for r in group]
            if len(set(dims)) != len(dims):
                raise ConfigError(f"two rules for body {body.text()!r} share a dimension")
        unlearnable = partial_colours - full_colours
        if unlearnable:
            raise ConfigError(
                "colours only ever expressed partially are unlearnable: "
                + ", ".join(sorted(unlearnable))
            )

    def vocabulary(self) -> Vocabulary:
        """What a fresh learner starts with: shapes and adverb dimensions only."""
        return Vocabulary(
            shapes=self.shapes,
            adverb_dimensions={a: d.dimension for a, d in self.adverb_defs.items()},
        )


@dataclass(frozen=True)
class ScenarioConfig:
    constrained_fraction: float = 0.9
    situations_per_trial: int = 100
    trials: int = 5
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.constrained_fraction <= 1.0:
            raise ConfigError("constrained_fraction must lie in [0, 1]")


def generate_situation(
    gt: GroundTruth, cfg: ScenarioConfig, rng: np.random.Generator
) -> Situation:
    """Draw a situation; most satisfy the body of a uniformly chosen rule."""
    if not gt.rules:
        raise ConfigError("situation generation needs at least one rule")
    shapes = gt.shapes
    if rng.random() < cfg.constrained_fraction:
        rule = gt.rules[rng.integers(len(gt.rules))]
        shape = rule.body.shape or shapes[rng.integers(len(shapes))]
        if rule.body.colour is not None:
            rgb = gt.colour_defs[rule.body.colour].sample(rng)
        else:
            rgb = _uniform_rgb(rng)
        return Situation(shape, rgb)
    return Situation(shapes[rng.integers(len(shapes))], _uniform_rgb(rng))


def _uniform_rgb(rng: np.random.Generator) -> RgbValue:
    r, g, b = rng.integers(0, 256, size=3)
    return RgbValue(int(r), int(g), int(b))


def body_satisfied(gt: GroundTruth, body: RuleBody, situation: Situation) -> bool:
    if body.shape is not None and body.shape != situation.shape:
        return False
    if body.colour is not None and not gt.colour_defs[body.colour].contains(situation.rgb):
        return False
    return True


def violations(gt: GroundTruth, situation: Situation, point: BehaviourPoint) -> list[Rule]:
    """All rules whose body holds but whose adverb interval excludes the point."""
    violated = []
    for rule in gt.rules:
        if not body_satisfied(gt, rule.body, situation):
            continue
        region = gt.adverb_defs[rule.head]
        if not region.contains(point.coordinate(region.dimension)):
            violated.append(rule)
    return violated


def give_feedback(
    gt: GroundTruth,
    situation: Situation,
    point: BehaviourPoint,
    rng: np.random.Generator | None = None,
) -> Utterance:
    """Coherent teacher response to the action performed in the situation.

    Violated rules are grouped by body and the group of the first violated
    rule (in fixed rule order) is expressed, mentioning exactly its violated
    adverbs: as a full correction when every rule in the group carries the
    full policy, otherwise as a partial correction.
    """
    violated = violations(gt, situation, point)
    if not violated:
        return Assent()
    anchor = violated[0]
    group = [rule for rule in violated if rule.body == anchor.body]
    adverbs = tuple(rule.head for rule in group)
    if all(gt.policy[rule] == FULL for rule in group):
        return FullCorrection(anchor.body, adverbs)
    return PartialCorrection(adverbs)


def default_ground_truth() -> GroundTruth:
    """The fully expressed teaching world: every rule stated with its context."""
    return GroundTruth(
        shapes=DEFAULT_SHAPES,
        colour_defs={
            "red": ColourBox((170, 255), (0, 80), (0, 80)),
            "green": ColourBox((0, 80), (170, 255), (0, 80)),
            "blue": ColourBox((0, 80), (0, 80), (170, 255)),
        },
        adverb_defs={
            "slowly": AdverbRegion("speed", 0.0, 0.4),
            "quickly": AdverbRegion("speed", 0.6, 1.0),
            "gently": AdverbRegion("energy", 0.0, 0.4),
            "firmly": AdverbRegion("energy", 0.6, 1.0),
        },
        rules=(
            Rule(RuleBody(colour="red", shape="square"), "gently"),
            Rule(RuleBody(colour="red", shape="square"), "slowly"),
            Rule(RuleBody(colour="blue"), "quickly"),
            Rule(RuleBody(colour="green", shape="circle"), "firmly"),
        ),
    )


def partial_ground_truth() -> GroundTruth:
    """A world where one constraint is only ever expressed partially."""
    blue_quickly = Rule(RuleBody(colour="blue"), "quickly")
    gt = GroundTruth(
        shapes=DEFAULT_SHAPES,
        colour_defs={
            "red": ColourBox((170, 255), (0, 80), (0, 80)),
            "green": ColourBox((0, 80), (170, 255), (0, 80)),
            "blue": ColourBox((0, 80), (0, 80), (170, 255)),
        },
        adverb_defs={
            "slowly": AdverbRegion("speed", 0.0, 0.4),
            "quickly": AdverbRegion("speed", 0.6, 1.0),
            "gently": AdverbRegion("energy", 0.0, 0.4),
            "firmly": AdverbRegion("energy", 0.6, 1.0),
        },
        rules=(
            Rule(RuleBody(colour="red", shape="square"), "gently"),
            Rule(RuleBody(colour="red", shape="square"), "slowly"),
            Rule(RuleBody(colour="blue", shape="triangle"), "firmly"),
            blue_quickly,
        ),
        policy={blue_quickly: PARTIAL},
    )
    return gt


def load_config(path: str | Path) -> tuple[GroundTruth, ScenarioConfig]:
    """Load ground truth and scenario parameters from a JSON config file."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    try:
        colour_defs = {
            name: ColourBox(tuple(spec["r"]), tuple(spec["g"]), tuple(spec["b"]))
            for name, spec in raw["colours"].items()
        }
        adverb_defs = {
            name: AdverbRegion(spec["dimension"], *spec["interval"])
            for name, spec in raw["adverbs"].items()
        }
        rules = []
        policy = {}
        for entry in raw["rules"]:
            rule = Rule(
                RuleBody(colour=entry.get("colour"), shape=entry.get("shape")),
                entry["adverb"],
            )
            rules.append(rule)
            policy[rule] = entry.get("policy", FULL)
        gt = GroundTruth(
            shapes=tuple(raw.get("shapes", DEFAULT_SHAPES)),
            colour_defs=colour_defs,
            adverb_defs=adverb_defs,
            rules=tuple(rules),
            policy=policy,
        )
        scenario = ScenarioConfig(
            constrained_fraction=raw.get("constrainedFraction", 0.9),
            situations_per_trial=raw.get("situationsPerTrial", 100),
            trials=raw.get("trials", 5),
            seed=raw.get("seed", 0),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"config {path} is malformed: {exc}") from exc
    return gt, scenario


def resolve_config(path: str | None) -> tuple[GroundTruth, ScenarioConfig]:
    """Config from the given path, the environment, or built-in defaults."""
    path = path or os.environ.get(CONFIG_ENV_VAR)
    if path:
        return load_config(path)
    return default_ground_truth(), ScenarioConfig()

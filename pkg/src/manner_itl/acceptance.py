"""Acceptance criteria, runnable from pytest and from ``manner-itl check``.

Each criterion returns a pass/fail result with a human-readable detail line.
The statistical criteria share one set of seeded experiment runs; the math
criteria check against independently computed oracles (joint enumeration for
inference, hand arithmetic for the closed-form fixtures).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import product as iter_product

import numpy as np

from .agents import LearningAgent
from .behaviour import AdverbModel
from .domain import (
    Assent,
    BehaviourPoint,
    FullCorrection,
    PartialCorrection,
    RgbValue,
    Rule,
    RuleBody,
    Situation,
    parse_utterance,
    render_utterance,
)
from .errors import MannerItlError
from .experiment import TrialRecord, run_protocol, welch_t
from .factors import Factor, query_probability
from .grounding import GroundingModel
from .inference import MannerOption
from .rules import RuleStore
from .world import (
    GroundTruth,
    ScenarioConfig,
    default_ground_truth,
    generate_situation,
    give_feedback,
    partial_ground_truth,
    violations,
)


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name} {status} - {self.detail}"


def enumeration_probability(
    factors: list[Factor], target: dict[str, int], evidence: dict[str, int]
) -> float:
    """Brute-force P(target | evidence) by summing the full joint table."""
    variables = sorted({v for f in factors for v in f.variables})
    total = 0.0
    matched = 0.0
    for values in iter_product((0, 1), repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if any(assignment[v] != val for v, val in evidence.items()):
            continue
        weight = 1.0
        for factor in factors:
            weight *= float(factor.table[tuple(assignment[v] for v in factor.variables)])
        total += weight
        if all(assignment[v] == val for v, val in target.items()):
            matched += weight
    return matched / total


def random_network(rng: np.random.Generator, max_nodes: int = 8) -> list[Factor]:
    """A random binary Bayes net as CPD factors, probabilities kept off 0/1."""
    n = int(rng.integers(2, max_nodes + 1))
    names = [f"x{i}" for i in range(n)]
    factors = []
    for i, name in enumerate(names):
        k = int(rng.integers(0, min(i, 3) + 1))
        parents = list(rng.choice(names[:i], size=k, replace=False)) if k else []
        table = np.empty((2,) * len(parents) + (2,))
        for row in iter_product((0, 1), repeat=len(parents)):
            p = float(rng.uniform(0.05, 0.95))
            table[row + (1,)] = p
            table[row + (0,)] = 1.0 - p
        factors.append(Factor(tuple(parents) + (name,), table))
    return factors


class AcceptanceSuite:
    """Runs every criterion; experiment runs are computed once and shared."""

    def __init__(
        self,
        full_gt: GroundTruth | None = None,
        partial_gt: GroundTruth | None = None,
        cfg: ScenarioConfig | None = None,
        seeds: int = 10,
    ):
        self.full_gt = full_gt or default_ground_truth()
        self.partial_gt = partial_gt or partial_ground_truth()
        self.cfg = cfg or ScenarioConfig()
        self.seeds = list(range(seeds))
        self._full_runs: dict[str, list[TrialRecord]] | None = None
        self._full_runtime = 0.0
        self._partial_runs: dict[str, list[TrialRecord]] | None = None

    def full_runs(self) -> dict[str, list[TrialRecord]]:
        if self._full_runs is None:
            started = time.perf_counter()
            runs: dict[str, list[TrialRecord]] = {}
            for kind in ("full", "no-assent", "no-negative", "just-no", "random"):
                trials: list[TrialRecord] = []
                for seed in self.seeds:
                    trials.extend(run_protocol(kind, self.full_gt, self.cfg, seed))
                runs[kind] = trials
            self._full_runtime = time.perf_counter() - started
            self._full_runs = runs
        return self._full_runs

    def partial_runs(self) -> dict[str, list[TrialRecord]]:
        if self._partial_runs is None:
            runs = {}
            for kind in ("full", "just-no"):
                trials: list[TrialRecord] = []
                for seed in self.seeds:
                    trials.extend(run_protocol(kind, self.partial_gt, self.cfg, seed))
                runs[kind] = trials
            self._partial_runs = runs
        return self._partial_runs

    @staticmethod
    def _terminal(trials: list[TrialRecord]) -> list[float]:
        return [float(t.terminal_regret) for t in trials]

    def a1_strategy_ordering(self) -> CriterionResult:
        runs = self.full_runs()
        means = {kind: float(np.mean(self._terminal(trials))) for kind, trials in runs.items()}
        _, p_random = welch_t(self._terminal(runs["full"]), self._terminal(runs["random"]))
        _, p_justno = welch_t(self._terminal(runs["full"]), self._terminal(runs["just-no"]))
        ordering = (
            means["full"] < means["no-assent"]
            and means["full"] < means["no-negative"]
            and means["full"] < means["just-no"] < means["random"]
        )
        passed = ordering and p_random < 0.05 and p_justno < 0.05 and self._full_runtime < 60.0
        detail = (
            "means "
            + ", ".join(f"{kind}={means[kind]:.1f}" for kind in runs)
            + f"; p(full vs random)={p_random:.2e}, p(full vs just-no)={p_justno:.2e}"
            + f"; runtime {self._full_runtime:.1f}s"
        )
        return CriterionResult("A1", passed, detail)

    def a2_partial_learnability(self) -> CriterionResult:
        runs = self.partial_runs()
        full = self._terminal(runs["full"])
        justno = self._terminal(runs["just-no"])
        _, p = welch_t(full, justno)
        passed = float(np.mean(full)) < float(np.mean(justno)) and p < 0.1
        detail = (
            f"partial config: full={np.mean(full):.1f}, just-no={np.mean(justno):.1f}, p={p:.2e}"
        )
        return CriterionResult("A2", passed, detail)

    def a3_convergence(self) -> CriterionResult:
        trials = self.full_runs()["full"]
        window = 25
        # Per seed: correction rate pooled over the final window of each trial.
        late: dict[int, int] = {}
        steps: dict[int, int] = {}
        for trial in trials:
            seed = trial.seed[0]
            late[seed] = late.get(seed, 0) + sum(s.corrected for s in trial.steps[-window:])
            steps[seed] = steps.get(seed, 0) + window
        rates = {seed: late[seed] / steps[seed] for seed in late}
        good_seeds = sum(rate <= 0.10 for rate in rates.values())
        passed = good_seeds >= 8
        detail = (
            f"{good_seeds}/{len(rates)} seeds kept final-{window} correction rate <= 10% "
            f"(worst {max(rates.values()):.1%})"
        )
        return CriterionResult("A3", passed, detail)

    def a4_inference_oracle(self, networks: int = 200) -> CriterionResult:
        worst = 0.0
        for i in range(networks):
            rng = np.random.default_rng([424242, i])
            factors = random_network(rng)
            variables = sorted({v for f in factors for v in f.variables})
            rng.shuffle(variables)
            n_target = int(rng.integers(1, len(variables) + 1))
            target = {v: int(rng.integers(2)) for v in variables[:n_target]}
            rest = variables[n_target:]
            n_evidence = int(rng.integers(0, len(rest) + 1))
            evidence = {v: int(rng.integers(2)) for v in rest[:n_evidence]}
            exact = enumeration_probability(factors, target, evidence)
            computed = query_probability(factors, target, evidence)
            worst = max(worst, abs(exact - computed))
        passed = worst <= 1e-9
        return CriterionResult("A4", passed, f"max |VE - enumeration| = {worst:.2e} over {networks} nets")

    def a5_unit_math(self) -> CriterionResult:
        failures: list[str] = []

        def check(label: str, actual: float, expected: float, tolerance: float = 1e-12) -> None:
            if not abs(actual - expected) <= tolerance:
                failures.append(f"{label}: {actual!r} != {expected!r}")

        rule = Rule(RuleBody(colour="red"), "quickly")
        store = RuleStore()
        store.add_positive(rule, 1.0)
        check("belief after +1", store.belief(rule), 2.0 / 3.0)
        store = RuleStore()
        store.add_positive(rule, 0.6)
        check("belief after +0.6", store.belief(rule), 1.6 / 2.6)
        store = RuleStore()
        store.add_negative(rule, 1.0)
        check("belief after -1", store.belief(rule), 1.0 / 3.0)
        store.confirm(rule)
        store.add_negative(rule, 1.0)
        check("confirmed belief", store.belief(rule), 1.0, 0.0)

        model = GroundingModel()
        model.add_exemplar("red", 1.0, RgbValue(200, 30, 30))
        model.add_exemplar("red", 0.75, RgbValue(100, 150, 40))
        query = RgbValue(150, 90, 35)
        h = model.bandwidth

        def phi(a: RgbValue, b: RgbValue) -> float:
            d2 = (a.r - b.r) ** 2 + (a.g - b.g) ** 2 + (a.b - b.b) ** 2
            return math.exp(-d2 / (2 * h * h)) / ((2 * math.pi) ** 1.5 * h**3)

        expected = (
            1.0 * phi(query, RgbValue(200, 30, 30)) + 0.75 * phi(query, RgbValue(100, 150, 40))
        ) / 1.75
        check("weighted KDE", model.likelihood("red", query), expected)

        empty = GroundingModel()
        empty.ensure_colour("red")
        check("empty-dataset posterior", empty.posterior("red", query), 0.2, 0.0)

        for match, expect_gain in ((0.7, False), (0.7 + 1e-9, True)):
            agent = LearningAgent(default_ground_truth().vocabulary())
            gate_rule = Rule(RuleBody(colour="red"), "gently")
            agent.rules.confirm(gate_rule)
            agent.grounding.posterior = lambda colour, rgb, m=match: m  # type: ignore[assignment]
            situation = Situation("square", RgbValue(200, 30, 30))
            point = BehaviourPoint(0.5, 0.25, 0.5)
            agent.ingest(situation, point, Assent(), MannerOption())
            gained = len(agent.model_for("gently").positives) == 1
            if gained != expect_gain:
                failures.append(f"X+ gate at product {match}: gained={gained}")

        passed = not failures
        detail = "beta/KDE/posterior/threshold fixtures exact" if passed else "; ".join(failures)
        return CriterionResult("A5", passed, detail)

    def a6_teacher_soundness(self, episodes: int = 10_000) -> CriterionResult:
        rng = np.random.default_rng(606060)
        gt = self.full_gt
        cfg = self.cfg
        bad = 0
        for _ in range(episodes):
            situation = generate_situation(gt, cfg, rng)
            point = BehaviourPoint(*(float(x) for x in rng.uniform(0.0, 1.0, size=3)))
            utterance = give_feedback(gt, situation, point, rng)
            violated = violations(gt, situation, point)
            if isinstance(utterance, Assent):
                ok = not violated
            else:
                ok = bool(violated)
                for adverb in utterance.adverbs:
                    region = gt.adverb_defs[adverb]
                    if region.contains(point.coordinate(region.dimension)):
                        ok = False  # a satisfied adverb was mentioned
                if isinstance(utterance, FullCorrection):
                    body = utterance.body
                    if body.shape is not None and body.shape != situation.shape:
                        ok = False
                    if body.colour is not None and not gt.colour_defs[body.colour].contains(
                        situation.rgb
                    ):
                        ok = False
            bad += int(not ok)
        return CriterionResult(
            "A6", bad == 0, f"{bad} unsound teacher utterances in {episodes} episodes"
        )

    def a7_grammar_round_trip(self, count: int = 1000) -> CriterionResult:
        gt = self.full_gt
        vocab = gt.vocabulary()
        adverbs = list(vocab.adverb_dimensions)
        colour_pool = ["red", "green", "blue", "maroon", "teal", "ochre", "puce"]
        rng = np.random.default_rng(707070)
        failures = 0
        for _ in range(count):
            roll = rng.random()
            if roll < 0.2:
                utterance = Assent()
            else:
                count_adverbs = int(rng.integers(1, 3))
                picked: list[str] = []
                dims: set[str] = set()
                while len(picked) < count_adverbs:
                    adverb = adverbs[rng.integers(len(adverbs))]
                    dimension = vocab.adverb_dimensions[adverb]
                    if dimension not in dims:
                        picked.append(adverb)
                        dims.add(dimension)
                if roll < 0.55:
                    utterance = PartialCorrection(tuple(picked))
                else:
                    colour = (
                        colour_pool[rng.integers(len(colour_pool))] if rng.random() < 0.8 else None
                    )
                    shape = (
                        vocab.shapes[rng.integers(len(vocab.shapes))]
                        if colour is None or rng.random() < 0.7
                        else None
                    )
                    utterance = FullCorrection(RuleBody(colour=colour, shape=shape), tuple(picked))
            try:
                parsed = parse_utterance(render_utterance(utterance), vocab)
                if parsed.utterance != utterance:
                    failures += 1
            except MannerItlError:
                failures += 1

        pinned = [
            ("yes", Assent()),
            (
                "no, when you see red squares do it gently and slowly",
                FullCorrection(RuleBody(colour="red", shape="square"), ("gently", "slowly")),
            ),
            ("no, do it quickly", PartialCorrection(("quickly",))),
        ]
        for text, expected in pinned:
            if parse_utterance(text, vocab).utterance != expected:
                failures += 1
        return CriterionResult(
            "A7", failures == 0, f"{failures} round-trip failures over {count} utterances"
        )

    def a8_convergence_fixtures(self) -> CriterionResult:
        rng = np.random.default_rng(808080)
        model = GroundingModel()
        centre = RgbValue(200, 30, 30)
        for _ in range(20):
            jitter = rng.integers(-5, 6, size=3)
            model.add_exemplar(
                "red",
                1.0,
                RgbValue(
                    int(centre.r + jitter[0]), int(centre.g + jitter[1]), int(centre.b + jitter[2])
                ),
            )
        near = model.posterior("red", centre)
        far = model.posterior("red", RgbValue(0, 255, 255))

        adverb = AdverbModel("gently", "energy")
        for _ in range(10):
            adverb.add_positive(float(rng.uniform(0.1, 0.3)))
        samples = np.array([adverb.sample(rng) for _ in range(1000)])
        inside = float(np.mean((samples >= 0.0) & (samples <= 0.5)))

        passed = near >= 0.9 and far <= 0.25 and inside >= 0.95
        detail = f"posterior near={near:.3f}, far={far:.3f}; samples in [0,0.5]: {inside:.1%}"
        return CriterionResult("A8", passed, detail)

    def run_all(self) -> list[CriterionResult]:
        return [
            self.a1_strategy_ordering(),
            self.a2_partial_learnability(),
            self.a3_convergence(),
            self.a4_inference_oracle(),
            self.a5_unit_math(),
            self.a6_teacher_soundness(),
            self.a7_grammar_round_trip(),
            self.a8_convergence_fixtures(),
        ]

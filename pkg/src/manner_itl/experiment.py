"""Experiment harness: seeded trials, regret curves, and Welch t statistics."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy import stats

from .agents import STRATEGY_KINDS, make_agent
from .domain import Assent, BehaviourPoint, FullCorrection, Situation, render_utterance
from .errors import InsufficientData
from .world import GroundTruth, ScenarioConfig, generate_situation, give_feedback


@dataclass(frozen=True)
class StepRecord:
    index: int
    situation: Situation
    point: BehaviourPoint
    utterance_kind: str
    corrected: bool


@dataclass
class TrialRecord:
    strategy: str
    seed: tuple[int, ...]
    steps: list[StepRecord] = field(default_factory=list)
    cumulative_regret: list[int] = field(default_factory=list)

    @property
    def terminal_regret(self) -> int:
        return self.cumulative_regret[-1] if self.cumulative_regret else 0


@dataclass
class StrategyResult:
    strategy: str
    trials: list[TrialRecord]

    @property
    def terminal_regrets(self) -> np.ndarray:
        return np.array([t.terminal_regret for t in self.trials], dtype=float)

    @property
    def mean_terminal_regret(self) -> float:
        return float(self.terminal_regrets.mean())

    @property
    def std_terminal_regret(self) -> float:
        return float(self.terminal_regrets.std(ddof=1)) if len(self.trials) > 1 else 0.0

    def mean_curve(self) -> np.ndarray:
        return np.array([t.cumulative_regret for t in self.trials], dtype=float).mean(axis=0)


@dataclass
class ExperimentResult:
    strategies: dict[str, StrategyResult]
    welch: dict[tuple[str, str], tuple[float, float]]


def _utterance_kind(utterance) -> str:
    if isinstance(utterance, Assent):
        return "assent"
    if isinstance(utterance, FullCorrection):
        return "full"
    return "partial"


def run_trial(
    kind: str,
    gt: GroundTruth,
    cfg: ScenarioConfig,
    seed: int | tuple[int, ...],
) -> TrialRecord:
    """One seeded trial: situation, action, feedback, ingest, repeated.

    Feedback travels to the agent as the rendered utterance string, the same
    wire format a human teacher produces.
    """
    seed_key = seed if isinstance(seed, tuple) else (seed,)
    rng = np.random.default_rng(list(seed_key))
    agent = make_agent(kind, gt.vocabulary())
    record = TrialRecord(strategy=kind, seed=seed_key)
    regret = 0
    for index in range(cfg.situations_per_trial):
        situation = generate_situation(gt, cfg, rng)
        point = agent.act(situation, rng)
        utterance = give_feedback(gt, situation, point, rng)
        agent.ingest_text(situation, point, render_utterance(utterance))
        corrected = not isinstance(utterance, Assent)
        regret += int(corrected)
        record.steps.append(
            StepRecord(index, situation, point, _utterance_kind(utterance), corrected)
        )
        record.cumulative_regret.append(regret)
    return record


def run_protocol(
    kind: str, gt: GroundTruth, cfg: ScenarioConfig, base_seed: int
) -> list[TrialRecord]:
    """The per-seed protocol: cfg.trials independent trials."""
    return [run_trial(kind, gt, cfg, (base_seed, trial)) for trial in range(cfg.trials)]


def run_experiment(
    gt: GroundTruth,
    cfg: ScenarioConfig,
    strategies: list[str] | None = None,
    seeds: list[int] | None = None,
) -> ExperimentResult:
    """Run every strategy over every seed and compute pairwise Welch tests."""
    strategies = list(strategies or STRATEGY_KINDS)
    seeds = list(seeds) if seeds is not None else [cfg.seed]
    results: dict[str, StrategyResult] = {}
    for kind in strategies:
        trials: list[TrialRecord] = []
        for seed in seeds:
            trials.extend(run_protocol(kind, gt, cfg, seed))
        results[kind] = StrategyResult(kind, trials)
    welch: dict[tuple[str, str], tuple[float, float]] = {}
    for i, a in enumerate(strategies):
        for b in strategies[i + 1 :]:
            welch[(a, b)] = welch_t(
                results[a].terminal_regrets.tolist(), results[b].terminal_regrets.tolist()
            )
    return ExperimentResult(results, welch)


def welch_t(sample_a: list[float], sample_b: list[float]) -> tuple[float, float]:
    """Welch's unequal-variance t statistic and two-tailed p value.

    Degrees of freedom follow Welch-Satterthwaite:
        dof = (va/na + vb/nb)^2 / ((va/na)^2/(na-1) + (vb/nb)^2/(nb-1))
    and p comes from the t-distribution survival function.
    """
    if len(sample_a) < 2 or len(sample_b) < 2:
        raise InsufficientData("welch_t needs at least two samples per group")
    a = np.asarray(sample_a, dtype=float)
    b = np.asarray(sample_b, dtype=float)
    na, nb = len(a), len(b)
    va, vb = a.var(ddof=1), b.var(ddof=1)
    se2 = va / na + vb / nb
    if se2 == 0.0:
        # Both samples are constant; equal means carry no evidence at all.
        if a.mean() == b.mean():
            return 0.0, 1.0
        return math.copysign(math.inf, a.mean() - b.mean()), 0.0
    t = float((a.mean() - b.mean()) / math.sqrt(se2))
    dof = se2**2 / ((va / na) ** 2 / (na - 1) + (vb / nb) ** 2 / (nb - 1))
    p = float(2.0 * stats.t.sf(abs(t), dof))
    return t, p


CSV_HEADER = ["strategy", "trial", "step", "corrected", "cumulative_regret"]


def export_csv(result: ExperimentResult, path: str | Path) -> None:
    """Per-step records for every strategy and trial."""
    path = Path(path)
    try:
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_HEADER)
            for strategy in result.strategies.values():
                for trial_index, trial in enumerate(strategy.trials):
                    for step, cumulative in zip(trial.steps, trial.cumulative_regret):
                        writer.writerow(
                            [
                                strategy.strategy,
                                trial_index,
                                step.index,
                                int(step.corrected),
                                cumulative,
                            ]
                        )
    except OSError as exc:
        raise OSError(f"cannot write results CSV to {path}: {exc}") from exc


def export_curves(result: ExperimentResult, path: str | Path) -> None:
    """Per-step mean cumulative regret per strategy, for external plotting."""
    path = Path(path)
    try:
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["strategy", "step", "mean_cumulative_regret"])
            for strategy in result.strategies.values():
                for step, value in enumerate(strategy.mean_curve()):
                    writer.writerow([strategy.strategy, step, f"{value:.6f}"])
    except OSError as exc:
        raise OSError(f"cannot write curves CSV to {path}: {exc}") from exc

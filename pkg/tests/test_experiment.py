import csv
import math

import numpy as np
import pytest

from manner_itl.errors import InsufficientData
from manner_itl.experiment import (
    CSV_HEADER,
    export_csv,
    export_curves,
    run_experiment,
    run_trial,
    welch_t,
)
from manner_itl.world import ScenarioConfig, default_ground_truth


class TestRunTrial:
    GT = default_ground_truth()

    def test_regret_bounds_and_monotonicity(self):
        cfg = ScenarioConfig(situations_per_trial=40)
        record = run_trial("random", self.GT, cfg, 0)
        assert 0 <= record.terminal_regret <= 40
        assert record.cumulative_regret == sorted(record.cumulative_regret)
        assert len(record.steps) == 40

    def test_terminal_regret_counts_corrections(self):
        cfg = ScenarioConfig(situations_per_trial=30)
        record = run_trial("just-no", self.GT, cfg, 1)
        assert record.terminal_regret == sum(s.corrected for s in record.steps)
        assert record.cumulative_regret[-1] == record.terminal_regret

    def test_same_seed_reproduces_records(self):
        cfg = ScenarioConfig(situations_per_trial=25)
        a = run_trial("full", self.GT, cfg, 5)
        b = run_trial("full", self.GT, cfg, 5)
        assert a.steps == b.steps
        assert a.cumulative_regret == b.cumulative_regret

    def test_full_beats_random_on_average(self):
        cfg = ScenarioConfig(situations_per_trial=100, trials=5)
        full = np.mean(
            [run_trial("full", self.GT, cfg, (seed, t)).terminal_regret
             for seed in range(2) for t in range(2)]
        )
        random = np.mean(
            [run_trial("random", self.GT, cfg, (seed, t)).terminal_regret
             for seed in range(2) for t in range(2)]
        )
        assert full < random


class TestWelch:
    def test_identical_samples(self):
        assert welch_t([3, 3, 3], [3, 3, 3]) == (0.0, 1.0)

    def test_textbook_fixture(self):
        t, p = welch_t([1, 2, 3], [4, 5, 6])
        assert t == pytest.approx(-3.674, abs=1e-3)
        assert p == pytest.approx(0.0214, abs=1e-3)

    def test_symmetry(self):
        t_ab, p_ab = welch_t([1, 2, 3], [4, 5, 6])
        t_ba, p_ba = welch_t([4, 5, 6], [1, 2, 3])
        assert t_ab == -t_ba and p_ab == p_ba

    def test_insufficient_data(self):
        with pytest.raises(InsufficientData):
            welch_t([1], [2, 3])

    def test_constant_but_different_samples(self):
        t, p = welch_t([1, 1, 1], [2, 2, 2])
        assert math.isinf(t) and t < 0 and p == 0.0


@pytest.fixture(scope="module")
def result():
    gt = default_ground_truth()
    cfg = ScenarioConfig(situations_per_trial=20, trials=2)
    return run_experiment(gt, cfg, ["just-no", "random"], seeds=[0, 1])


class TestExperimentExports:

    def test_welch_pairs_present(self, result):
        assert ("just-no", "random") in result.welch

    def test_csv_schema(self, result, tmp_path):
        path = tmp_path / "steps.csv"
        export_csv(result, path)
        with path.open() as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == CSV_HEADER
        assert len(rows) - 1 == 2 * 2 * 2 * 20  # strategies x seeds x trials x steps

    def test_csv_reimport_reproduces_statistics(self, result, tmp_path):
        path = tmp_path / "steps.csv"
        export_csv(result, path)
        with path.open() as handle:
            rows = list(csv.DictReader(handle))
        terminal: dict[tuple[str, str], int] = {}
        for row in rows:
            terminal[(row["strategy"], row["trial"])] = int(row["cumulative_regret"])
        for kind, strategy in result.strategies.items():
            reimported = [
                value for (name, _), value in sorted(terminal.items()) if name == kind
            ]
            assert sorted(reimported) == sorted(
                t.terminal_regret for t in strategy.trials
            )

    def test_curves_file(self, result, tmp_path):
        path = tmp_path / "curves.csv"
        export_curves(result, path)
        with path.open() as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["strategy", "step", "mean_cumulative_regret"]
        assert len(rows) - 1 == 2 * 20
        last = [row for row in rows[1:] if row[0] == "random" and row[1] == "19"]
        expected = result.strategies["random"].mean_curve()[-1]
        assert float(last[0][2]) == pytest.approx(expected, abs=1e-6)

    def test_export_error_carries_path(self, result, tmp_path):
        bogus = tmp_path / "missing-dir" / "steps.csv"
        with pytest.raises(OSError, match="missing-dir"):
            export_csv(result, bogus)


def test_experiment_reproducible_bit_for_bit():
    gt = default_ground_truth()
    cfg = ScenarioConfig(situations_per_trial=15, trials=2)
    a = run_experiment(gt, cfg, ["full"], seeds=[3])
    b = run_experiment(gt, cfg, ["full"], seeds=[3])
    assert [t.cumulative_regret for t in a.strategies["full"].trials] == [
        t.cumulative_regret for t in b.strategies["full"].trials
    ]
    assert a.welch == b.welch

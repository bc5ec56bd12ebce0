import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from manner_itl.domain import RgbValue
from manner_itl.errors import InvalidWeight
from manner_itl.grounding import BACKGROUND_DENSITY, GroundingModel


def hand_kernel(a: RgbValue, b: RgbValue, h: float) -> float:
    # Scalar re-derivation of the isotropic Gaussian kernel, kept independent
    # of the vectorised implementation under test.
    d2 = (a.r - b.r) ** 2 + (a.g - b.g) ** 2 + (a.b - b.b) ** 2
    return math.exp(-d2 / (2 * h * h)) / ((2 * math.pi) ** 1.5 * h**3)


class TestEnsureColour:
    def test_idempotent(self):
        model = GroundingModel()
        model.ensure_colour("red")
        model.ensure_colour("red")
        assert model.known_colours == ["red"]
        assert model.exemplar_count("red") == 0

    def test_new_colour_grows_vocabulary(self):
        model = GroundingModel()
        model.ensure_colour("red")
        model.ensure_colour("teal")
        assert model.known_colours == ["red", "teal"]

    def test_fresh_colour_posterior_is_prior(self):
        model = GroundingModel()
        model.ensure_colour("red")
        assert model.posterior("red", RgbValue(1, 2, 3)) == 0.2


class TestAddExemplar:
    def test_grows_dataset(self):
        model = GroundingModel()
        model.add_exemplar("red", 1.0, RgbValue(200, 30, 30))
        assert model.exemplar_count("red") == 1

    @pytest.mark.parametrize("weight", [0.0, -0.5, 1.5])
    def test_invalid_weight(self, weight):
        model = GroundingModel()
        with pytest.raises(InvalidWeight):
            model.add_exemplar("red", weight, RgbValue(0, 0, 0))


class TestLikelihood:
    def test_empty_dataset_is_distinct(self):
        model = GroundingModel()
        model.ensure_colour("red")
        assert model.likelihood("red", RgbValue(0, 0, 0)) is None

    def test_single_exemplar_peak(self):
        model = GroundingModel()
        x = RgbValue(100, 120, 140)
        model.add_exemplar("red", 1.0, x)
        assert model.likelihood("red", x) == pytest.approx(
            hand_kernel(x, x, model.bandwidth), abs=1e-18
        )

    def test_equal_weights_average(self):
        model = GroundingModel()
        x, y, q = RgbValue(10, 20, 30), RgbValue(40, 50, 60), RgbValue(20, 30, 40)
        model.add_exemplar("red", 1.0, x)
        model.add_exemplar("red", 1.0, y)
        expected = (hand_kernel(q, x, model.bandwidth) + hand_kernel(q, y, model.bandwidth)) / 2
        assert model.likelihood("red", q) == pytest.approx(expected, rel=1e-12)

    def test_weighted_mixture(self):
        # weights {1, 3} at x, y queried at z: (1*phi(z-x) + 3*phi(z-y)) / 4
        model = GroundingModel()
        x, y, z = RgbValue(200, 30, 30), RgbValue(100, 150, 40), RgbValue(150, 90, 35)
        model.add_exemplar("red", 1.0, x)
        model.add_exemplar("red", 0.75, y)
        model.add_exemplar("red", 0.75, y)
        model.add_exemplar("red", 0.75, y)
        model.add_exemplar("red", 0.75, y)
        # four 0.75-weight copies at y act as weight 3
        expected = (
            1.0 * hand_kernel(z, x, model.bandwidth) + 3.0 * hand_kernel(z, y, model.bandwidth)
        ) / 4.0
        assert model.likelihood("red", z) == pytest.approx(expected, rel=1e-12)

    def test_invariant_under_weight_rescaling(self):
        a = GroundingModel()
        b = GroundingModel()
        points = [RgbValue(10, 10, 10), RgbValue(60, 70, 80), RgbValue(200, 180, 10)]
        for p in points:
            a.add_exemplar("red", 1.0, p)
            b.add_exemplar("red", 0.5, p)
        q = RgbValue(50, 50, 50)
        assert a.likelihood("red", q) == pytest.approx(b.likelihood("red", q), rel=1e-12)


class TestPosterior:
    def test_bounds_and_monotonicity_in_likelihood(self):
        prior = 0.2
        last = -1.0
        for likelihood in (1e-12, 1e-9, 1e-7, 1e-5, 1e-3):
            value = likelihood * prior / (likelihood * prior + BACKGROUND_DENSITY * (1 - prior))
            assert 0.0 <= value <= 1.0
            assert value > last
            last = value

    def test_cluster_posterior_high_far_posterior_low(self):
        model = GroundingModel()
        centre = RgbValue(200, 30, 30)
        for dr in (-2, -1, 0, 1, 2):
            for dg in (-2, 0, 2):
                model.add_exemplar("red", 1.0, RgbValue(200 + dr, 30 + dg, 30))
        assert model.posterior("red", centre) >= 0.9
        assert model.posterior("red", RgbValue(0, 255, 255)) <= 0.25

    @given(
        st.lists(
            st.tuples(
                st.integers(0, 255), st.integers(0, 255), st.integers(0, 255)
            ),
            min_size=0,
            max_size=8,
        ),
        st.tuples(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255)),
    )
    @settings(max_examples=60, deadline=None)
    def test_adding_exemplar_at_query_never_decreases_posterior(self, existing, query):
        model = GroundingModel()
        q = RgbValue(*query)
        for p in existing:
            model.add_exemplar("red", 1.0, RgbValue(*p))
        before = model.posterior("red", q)
        model.add_exemplar("red", 1.0, q)
        assert model.posterior("red", q) >= before - 1e-15

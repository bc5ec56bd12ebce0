import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from manner_itl.domain import RgbValue, Rule, RuleBody, Situation
from manner_itl.errors import InvalidWeight
from manner_itl.rules import RuleStore

RED_SQUARE_GENTLY = Rule(RuleBody(colour="red", shape="square"), "gently")
RED_QUICKLY = Rule(RuleBody(colour="red"), "quickly")
SQUARE_QUICKLY = Rule(RuleBody(shape="square"), "quickly")


class TestBeliefArithmetic:
    def test_fresh_rule_prior(self):
        assert RuleStore().belief(RED_QUICKLY) == 0.5

    def test_positive_unit_evidence(self):
        store = RuleStore()
        store.add_positive(RED_QUICKLY, 1.0)
        assert store.belief(RED_QUICKLY) == pytest.approx(2 / 3, abs=1e-15)

    def test_positive_fractional_evidence(self):
        store = RuleStore()
        store.add_positive(RED_QUICKLY, 0.6)
        assert store.belief(RED_QUICKLY) == pytest.approx(1.6 / 2.6, abs=1e-15)

    def test_negative_unit_evidence(self):
        store = RuleStore()
        store.add_negative(RED_QUICKLY, 1.0)
        assert store.belief(RED_QUICKLY) == pytest.approx(1 / 3, abs=1e-15)

    @pytest.mark.parametrize("weight", [0.0, -1.0, 1.01])
    def test_invalid_weights(self, weight):
        store = RuleStore()
        with pytest.raises(InvalidWeight):
            store.add_positive(RED_QUICKLY, weight)
        with pytest.raises(InvalidWeight):
            store.add_negative(RED_QUICKLY, weight)


class TestConfirmation:
    def test_confirm_pins_belief(self):
        store = RuleStore()
        store.confirm(RED_SQUARE_GENTLY)
        assert store.belief(RED_SQUARE_GENTLY) == 1.0

    def test_confirm_is_idempotent(self):
        store = RuleStore()
        store.confirm(RED_SQUARE_GENTLY)
        store.confirm(RED_SQUARE_GENTLY)
        assert len(store) == 1
        assert store.belief(RED_SQUARE_GENTLY) == 1.0

    def test_confirmed_ignores_evidence(self):
        store = RuleStore()
        store.confirm(RED_SQUARE_GENTLY)
        store.add_negative(RED_SQUARE_GENTLY, 1.0)
        store.add_positive(RED_SQUARE_GENTLY, 1.0)
        assert store.belief(RED_SQUARE_GENTLY) == 1.0


@given(
    st.lists(
        st.tuples(st.booleans(), st.floats(0.01, 1.0)),
        min_size=1,
        max_size=12,
    ),
    st.randoms(use_true_random=False),
)
@settings(max_examples=100, deadline=None)
def test_update_order_never_matters(updates, rnd):
    def apply_all(ordered):
        store = RuleStore()
        for positive, weight in ordered:
            if positive:
                store.add_positive(RED_QUICKLY, weight)
            else:
                store.add_negative(RED_QUICKLY, weight)
        return store.snapshot()[0][1:3]

    shuffled = list(updates)
    rnd.shuffle(shuffled)
    assert apply_all(updates) == pytest.approx(apply_all(shuffled), abs=1e-12)


class TestRulesMatching:
    SITUATION = Situation("square", RgbValue(210, 30, 30))

    def test_shape_only_match(self):
        store = RuleStore()
        store.add_positive(SQUARE_QUICKLY, 1.0)
        [(rule, probability)] = store.rules_matching(self.SITUATION, lambda c, r: 0.123)
        assert rule == SQUARE_QUICKLY and probability == 1.0

    def test_colour_match_uses_posterior(self):
        store = RuleStore()
        store.add_positive(RED_QUICKLY, 1.0)
        [(_, probability)] = store.rules_matching(self.SITUATION, lambda c, r: 0.6)
        assert probability == 0.6

    def test_shape_mismatch_is_zero(self):
        store = RuleStore()
        store.confirm(Rule(RuleBody(colour="red", shape="circle"), "gently"))
        [(_, probability)] = store.rules_matching(self.SITUATION, lambda c, r: 0.99)
        assert probability == 0.0

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from manner_itl.domain import (
    Assent,
    BehaviourPoint,
    EvidenceBundle,
    FullCorrection,
    PartialCorrection,
    RgbValue,
    Rule,
    RuleBody,
    Situation,
    Vocabulary,
    interpret,
    parse_utterance,
    render_utterance,
)
from manner_itl.errors import DimensionConflict, MalformedUtterance, UnknownAdverb


def fresh_vocab() -> Vocabulary:
    return Vocabulary(
        shapes=("square", "circle", "triangle"),
        adverb_dimensions={
            "slowly": "speed",
            "quickly": "speed",
            "gently": "energy",
            "firmly": "energy",
        },
    )


class TestTypes:
    def test_rgb_channel_bounds(self):
        with pytest.raises(ValueError):
            RgbValue(-1, 0, 0)
        with pytest.raises(ValueError):
            RgbValue(0, 256, 0)

    def test_behaviour_point_bounds(self):
        with pytest.raises(ValueError):
            BehaviourPoint(1.2, 0.0, 0.0)
        point = BehaviourPoint(0.1, 0.2, 0.3)
        assert point.coordinate("speed") == 0.1
        assert point.coordinate("energy") == 0.2
        assert point.coordinate("direction") == 0.3

    def test_rule_body_needs_an_atom(self):
        with pytest.raises(ValueError):
            RuleBody()

    def test_rules_compare_structurally(self):
        a = Rule(RuleBody(colour="red", shape="square"), "gently")
        b = Rule(RuleBody(colour="red", shape="square"), "gently")
        assert a == b and hash(a) == hash(b)

    def test_corrections_need_adverbs(self):
        with pytest.raises(ValueError):
            PartialCorrection(())


class TestParse:
    def test_yes(self, vocab):
        assert parse_utterance("yes", vocab).utterance == Assent()

    def test_full_correction_example(self, vocab):
        result = parse_utterance(
            "no, when you see red squares do it gently and slowly", vocab
        )
        assert result.utterance == FullCorrection(
            RuleBody(colour="red", shape="square"), ("gently", "slowly")
        )
        assert result.new_colours == ("red",)

    def test_partial_correction_example(self, vocab):
        result = parse_utterance("no, do it quickly", vocab)
        assert result.utterance == PartialCorrection(("quickly",))

    def test_case_and_whitespace_insensitive(self, vocab):
        result = parse_utterance("  No,   DO IT Quickly ", vocab)
        assert result.utterance == PartialCorrection(("quickly",))

    def test_dimension_conflict(self, vocab):
        with pytest.raises(DimensionConflict):
            parse_utterance("no, do it gently and firmly", vocab)

    def test_unknown_adverb(self, vocab):
        with pytest.raises(UnknownAdverb):
            parse_utterance("no, do it backwards", vocab)

    def test_malformed(self, vocab):
        for text in ("maybe", "no", "no, when you see do it gently", "yes please"):
            with pytest.raises(MalformedUtterance):
                parse_utterance(text, vocab)

    def test_unseen_colour_grows_vocabulary(self, vocab):
        assert vocab.known_colours == []
        parse_utterance("no, when you see maroon circles do it gently", vocab)
        assert vocab.known_colours == ["maroon"]
        # idempotent on re-mention
        result = parse_utterance("no, when you see maroon circles do it gently", vocab)
        assert result.new_colours == ()
        assert vocab.known_colours == ["maroon"]

    def test_colour_only_and_shape_only_bodies(self, vocab):
        result = parse_utterance("no, when you see blue things do it quickly", vocab)
        assert result.utterance == FullCorrection(RuleBody(colour="blue"), ("quickly",))
        result = parse_utterance("no, when you see triangles do it firmly", vocab)
        assert result.utterance == FullCorrection(RuleBody(shape="triangle"), ("firmly",))


class TestRender:
    def test_assent(self):
        assert render_utterance(Assent()) == "yes"

    def test_partial(self):
        assert render_utterance(PartialCorrection(("quickly",))) == "no, do it quickly"

    def test_full(self):
        utterance = FullCorrection(RuleBody(colour="red", shape="square"), ("gently",))
        assert render_utterance(utterance) == "no, when you see red squares do it gently"


def utterance_strategy() -> st.SearchStrategy:
    adverb_pool = {
        "slowly": "speed",
        "quickly": "speed",
        "gently": "energy",
        "firmly": "energy",
    }
    colours = st.sampled_from(["red", "green", "blue", "maroon", "teal"])
    shapes = st.sampled_from(["square", "circle", "triangle"])

    def distinct_dimensions(adverbs: tuple[str, ...]) -> bool:
        dims = [adverb_pool[a] for a in adverbs]
        return len(set(dims)) == len(dims)

    adverbs = (
        st.lists(st.sampled_from(sorted(adverb_pool)), min_size=1, max_size=2, unique=True)
        .map(tuple)
        .filter(distinct_dimensions)
    )
    bodies = st.one_of(
        st.builds(RuleBody, colour=colours, shape=shapes),
        st.builds(RuleBody, colour=colours),
        st.builds(RuleBody, shape=shapes),
    )
    return st.one_of(
        st.just(Assent()),
        st.builds(PartialCorrection, adverbs),
        st.builds(FullCorrection, bodies, adverbs),
    )


@given(utterance_strategy())
@settings(max_examples=300, deadline=None)
def test_parse_render_round_trip(utterance):
    vocab = fresh_vocab()
    assert parse_utterance(render_utterance(utterance), vocab).utterance == utterance


class TestInterpret:
    SITUATION = Situation("square", RgbValue(210, 40, 35))
    POINT = BehaviourPoint(0.9, 0.8, 0.5)

    @staticmethod
    def flat_posterior(value: float):
        return lambda colour, rgb: value

    def test_assent_bundle_is_empty(self, vocab):
        bundle = interpret(Assent(), self.SITUATION, self.POINT, vocab, self.flat_posterior(0.5))
        assert bundle == EvidenceBundle(assent=True)

    def test_full_correction(self, vocab):
        utterance = FullCorrection(
            RuleBody(colour="red", shape="square"), ("gently", "slowly")
        )
        bundle = interpret(utterance, self.SITUATION, self.POINT, vocab, self.flat_posterior(0.5))
        assert bundle.grounding_exemplars == (("red", 1.0, self.SITUATION.rgb),)
        assert bundle.confirmed_rules == (
            Rule(RuleBody(colour="red", shape="square"), "gently"),
            Rule(RuleBody(colour="red", shape="square"), "slowly"),
        )
        assert bundle.negative_adverb_exemplars == (("gently", 0.8), ("slowly", 0.9))
        assert not bundle.assent and not bundle.rule_hypotheses

    def test_full_correction_without_colour_has_no_grounding(self, vocab):
        utterance = FullCorrection(RuleBody(shape="square"), ("gently",))
        bundle = interpret(utterance, self.SITUATION, self.POINT, vocab, self.flat_posterior(0.5))
        assert bundle.grounding_exemplars == ()

    def test_partial_correction_weights(self, vocab):
        vocab.add_colour("red")
        utterance = PartialCorrection(("quickly",))
        bundle = interpret(utterance, self.SITUATION, self.POINT, vocab, self.flat_posterior(0.6))
        assert dict(
            (rule, weight) for rule, weight in bundle.rule_hypotheses
        ) == {
            Rule(RuleBody(shape="square"), "quickly"): 1.0,
            Rule(RuleBody(colour="red"), "quickly"): 0.6,
            Rule(RuleBody(colour="red", shape="square"), "quickly"): 0.6,
        }
        assert bundle.negative_adverb_exemplars == (("quickly", 0.9),)
        assert bundle.grounding_exemplars == ()

    def test_negative_exemplar_uses_adverb_dimension(self, vocab):
        bundle = interpret(
            PartialCorrection(("gently",)),
            self.SITUATION,
            self.POINT,
            vocab,
            self.flat_posterior(0.5),
        )
        assert bundle.negative_adverb_exemplars == (("gently", self.POINT.energy),)

    def test_interpret_is_pure(self, vocab):
        vocab.add_colour("red")
        utterance = PartialCorrection(("quickly",))
        first = interpret(utterance, self.SITUATION, self.POINT, vocab, self.flat_posterior(0.3))
        second = interpret(utterance, self.SITUATION, self.POINT, vocab, self.flat_posterior(0.3))
        assert first == second

    def test_unknown_adverb_raises(self, vocab):
        with pytest.raises(UnknownAdverb):
            interpret(
                PartialCorrection(("backwards",)),
                self.SITUATION,
                self.POINT,
                vocab,
                self.flat_posterior(0.5),
            )

"""Interactive learning of action manner from teacher corrections."""

from .domain import (
    Assent,
    BehaviourPoint,
    EvidenceBundle,
    FullCorrection,
    PartialCorrection,
    RgbValue,
    Rule,
    RuleBody,
    Situation,
    Utterance,
    Vocabulary,
    interpret,
    parse_utterance,
    render_utterance,
)
from .agents import make_agent
from .behaviour import AdverbModel, CurveSpec, render_curve
from .grounding import GroundingModel
from .inference import MannerOption, select_option, select_point, sync_structure
from .rules import RuleStore
from .world import (
    GroundTruth,
    ScenarioConfig,
    default_ground_truth,
    generate_situation,
    give_feedback,
    load_config,
    partial_ground_truth,
    violations,
)
from .experiment import run_experiment, run_trial, welch_t

__version__ = "0.1.0"

__all__ = [
    "AdverbModel",
    "Assent",
    "BehaviourPoint",
    "CurveSpec",
    "EvidenceBundle",
    "FullCorrection",
    "GroundTruth",
    "GroundingModel",
    "MannerOption",
    "PartialCorrection",
    "RgbValue",
    "Rule",
    "RuleBody",
    "RuleStore",
    "ScenarioConfig",
    "Situation",
    "Utterance",
    "Vocabulary",
    "default_ground_truth",
    "generate_situation",
    "give_feedback",
    "interpret",
    "load_config",
    "make_agent",
    "parse_utterance",
    "partial_ground_truth",
    "render_curve",
    "render_utterance",
    "run_experiment",
    "run_trial",
    "select_option",
    "select_point",
    "sync_structure",
    "violations",
    "welch_t",
]

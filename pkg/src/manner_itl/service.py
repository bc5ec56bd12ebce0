"""HTTP session service exposing live teaching sessions.

Each session owns one agent. In simulated mode a step runs the whole cycle
(observe, act, teacher feedback, ingest); in human mode a step stops after
the action and waits for feedback, which arrives as a raw utterance string
and flows through exactly the same parser and learner code path as the
simulated teacher's words.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .agents import Agent, LearningAgent, make_agent
from .behaviour import FALLBACK_MU, FALLBACK_SIGMA, render_curve
from .domain import (
    Assent,
    BehaviourPoint,
    RgbValue,
    Situation,
    parse_utterance,
    render_utterance,
)
from .errors import MannerItlError
from .inference import sync_structure
from .world import (
    GroundTruth,
    ScenarioConfig,
    default_ground_truth,
    generate_situation,
    give_feedback,
    load_config,
)


class CreateSessionRequest(BaseModel):
    strategy: str = "full"
    mode: str | None = None
    config: str | None = None
    seed: int | None = None


class FeedbackRequest(BaseModel):
    utterance: str


@dataclass
class PendingStep:
    situation: Situation
    point: BehaviourPoint


@dataclass
class SessionState:
    id: str
    mode: str
    agent: Agent
    gt: GroundTruth | None
    scenario: ScenarioConfig
    rng: np.random.Generator
    pending: PendingStep | None = None
    history: list[dict] = field(default_factory=list)
    regret: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)


def _uniform_situation(session: SessionState) -> Situation:
    shapes = session.agent.vocab.shapes
    shape = shapes[session.rng.integers(len(shapes))]
    r, g, b = session.rng.integers(0, 256, size=3)
    return Situation(shape, RgbValue(int(r), int(g), int(b)))


def _situation_payload(situation: Situation) -> dict:
    return {"shape": situation.shape, "rgb": list(situation.rgb.as_tuple())}


def _point_payload(point: BehaviourPoint) -> dict:
    return {"speed": point.speed, "energy": point.energy, "direction": point.direction}


def _bundle_payload(bundle) -> dict | None:
    if bundle is None:
        return None
    return {
        "assent": bundle.assent,
        "groundingExemplars": [
            {"colour": c, "weight": w, "rgb": list(rgb.as_tuple())}
            for c, w, rgb in bundle.grounding_exemplars
        ],
        "confirmedRules": [r.text() for r in bundle.confirmed_rules],
        "ruleHypotheses": [
            {"rule": r.text(), "weight": w} for r, w in bundle.rule_hypotheses
        ],
        "negativeAdverbExemplars": [
            {"adverb": a, "value": v} for a, v in bundle.negative_adverb_exemplars
        ],
    }


def _beliefs_payload(session: SessionState) -> dict:
    agent = session.agent
    payload: dict = {"rules": [], "colours": [], "adverbs": [], "net": {"nodes": [], "edges": []}}
    vocab = agent.vocab
    for adverb in vocab.adverb_dimensions:
        entry = {
            "name": adverb,
            "dimension": vocab.adverb_dimensions[adverb],
            "mu": FALLBACK_MU,
            "sigma": FALLBACK_SIGMA,
            "positives": 0,
            "negatives": 0,
        }
        if isinstance(agent, LearningAgent) and adverb in agent.behaviour_models:
            model = agent.behaviour_models[adverb]
            entry.update(
                mu=model.mu,
                sigma=model.sigma,
                positives=len(model.positives),
                negatives=len(model.negatives),
            )
        payload["adverbs"].append(entry)
    if isinstance(agent, LearningAgent):
        payload["rules"] = [
            {
                "rule": rule.text(),
                "alpha": alpha,
                "beta": beta,
                "confirmed": confirmed,
                "belief": 1.0 if confirmed else alpha / (alpha + beta),
            }
            for rule, alpha, beta, confirmed in agent.rules.snapshot()
        ]
        payload["colours"] = [
            {"name": name, "exemplars": agent.grounding.exemplar_count(name)}
            for name in agent.grounding.known_colours
        ]
        net = sync_structure(agent.rules, agent.vocab)
        payload["net"] = {
            "nodes": net.nodes(),
            "edges": net.edges() + net.behaviour_edges(agent.vocab),
        }
    return payload


def _persist(session: SessionState, persist_dir: Path | None) -> None:
    if persist_dir is None:
        return
    snapshot = {
        "id": session.id,
        "mode": session.mode,
        "strategy": session.agent.kind,
        "regret": session.regret,
        "history": session.history,
        "beliefs": _beliefs_payload(session),
    }
    persist_dir.mkdir(parents=True, exist_ok=True)
    (persist_dir / f"{session.id}.json").write_text(json.dumps(snapshot, indent=2))


def create_app(
    config_path: str | None = None,
    default_mode: str = "simulated",
    persist_dir: str | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="manner-itl teaching service")
    sessions: dict[str, SessionState] = {}
    persist_path = Path(persist_dir) if persist_dir else None

    def get_session(session_id: str) -> SessionState:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
        return session

    @app.post("/sessions")
    def create_session(request: CreateSessionRequest) -> dict:
        mode = request.mode or default_mode
        if mode not in ("simulated", "human"):
            raise HTTPException(status_code=400, detail=f"unknown mode {mode!r}")
        if request.config:
            gt, scenario = load_config(request.config)
        elif config_path:
            gt, scenario = load_config(config_path)
        else:
            gt, scenario = default_ground_truth(), ScenarioConfig()
        try:
            agent = make_agent(request.strategy, gt.vocabulary())
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        seed = request.seed if request.seed is not None else scenario.seed
        session = SessionState(
            id=uuid.uuid4().hex,
            mode=mode,
            agent=agent,
            gt=None if mode == "human" else gt,
            scenario=scenario,
            rng=np.random.default_rng(seed),
        )
        sessions[session.id] = session
        return {"id": session.id, "mode": mode, "strategy": agent.kind}

    @app.post("/sessions/{session_id}/step")
    def step(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            if session.pending is not None:
                raise HTTPException(
                    status_code=409, detail="previous step still awaits feedback"
                )
            if session.gt is not None:
                situation = generate_situation(session.gt, session.scenario, session.rng)
            else:
                situation = _uniform_situation(session)
            point = session.agent.act(situation, session.rng)
            curve = render_curve(point)
            payload = {
                "step": len(session.history),
                "situation": _situation_payload(situation),
                "point": _point_payload(point),
                "curve": curve.to_payload(),
            }
            if session.mode == "simulated":
                assert session.gt is not None
                utterance = give_feedback(session.gt, situation, point, session.rng)
                text = render_utterance(utterance)
                bundle = session.agent.ingest_text(situation, point, text)
                corrected = not isinstance(utterance, Assent)
                session.regret += int(corrected)
                payload["simulatedFeedback"] = text
                payload["evidenceApplied"] = _bundle_payload(bundle)
                session.history.append(
                    {
                        "step": payload["step"],
                        "situation": payload["situation"],
                        "point": payload["point"],
                        "feedback": text,
                        "corrected": corrected,
                        "cumulativeRegret": session.regret,
                    }
                )
            else:
                session.pending = PendingStep(situation, point)
                session.history.append(
                    {
                        "step": payload["step"],
                        "situation": payload["situation"],
                        "point": payload["point"],
                        "feedback": None,
                        "corrected": None,
                        "cumulativeRegret": session.regret,
                    }
                )
            _persist(session, persist_path)
            return payload

    @app.post("/sessions/{session_id}/feedback")
    def feedback(session_id: str, request: FeedbackRequest) -> dict:
        session = get_session(session_id)
        with session.lock:
            if session.pending is None:
                raise HTTPException(
                    status_code=409, detail="no step awaiting feedback"
                )
            pending = session.pending
            try:
                parsed = parse_utterance(request.utterance, session.agent.vocab)
            except MannerItlError as exc:
                raise HTTPException(
                    status_code=400, detail=f"{type(exc).__name__}: {exc}"
                ) from exc
            bundle = session.agent.ingest(
                pending.situation, pending.point, parsed.utterance, session.agent.last_option
            )
            session.pending = None
            corrected = not isinstance(parsed.utterance, Assent)
            session.regret += int(corrected)
            entry = session.history[-1]
            entry["feedback"] = request.utterance
            entry["corrected"] = corrected
            entry["cumulativeRegret"] = session.regret
            _persist(session, persist_path)
            return {"evidenceApplied": _bundle_payload(bundle), "corrected": corrected}

    @app.get("/sessions/{session_id}/beliefs")
    def beliefs(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            return _beliefs_payload(session)

    @app.get("/sessions/{session_id}/history")
    def history(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            return {
                "steps": session.history,
                "cumulativeRegret": session.regret,
            }

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app

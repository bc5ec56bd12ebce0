"""Command-line entry point: batch runs, acceptance checks, serving, demos."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .acceptance import AcceptanceSuite
from .agents import STRATEGY_KINDS, make_agent
from .behaviour import render_curve
from .domain import Assent, render_utterance
from .errors import MannerItlError
from .experiment import export_csv, export_curves, run_experiment
from .world import generate_situation, give_feedback, resolve_config


def _add_config_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config",
        help="path to a JSON world/scenario config (default: built-in world, "
        "or the MANNER_ITL_CONFIG environment variable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="manner-itl",
        description="Simulate and serve interactive manner-of-action teaching sessions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run batch experiments and export results")
    _add_config_flag(run)
    run.add_argument("--strategies", default=",".join(STRATEGY_KINDS))
    run.add_argument("--seeds", type=int, default=5, help="number of seeds (0..n-1)")
    run.add_argument("--out", default="results", help="output directory")

    check = sub.add_parser("check", help="run the acceptance suite")
    _add_config_flag(check)
    check.add_argument("--seeds", type=int, default=10)

    serve = sub.add_parser("serve", help="start the teaching session service")
    _add_config_flag(serve)
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--human-teacher", action="store_true")
    serve.add_argument("--persist", help="directory for per-session snapshots")
    serve.add_argument("--static", help="directory with the built web UI")

    demo = sub.add_parser("demo", help="print one verbose simulated session")
    _add_config_flag(demo)
    demo.add_argument("--steps", type=int, default=20)
    demo.add_argument("--strategy", default="full", choices=STRATEGY_KINDS)
    demo.add_argument("--seed", type=int, default=0)

    return parser


def cmd_run(args: argparse.Namespace) -> int:
    gt, cfg = resolve_config(args.config)
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    result = run_experiment(gt, cfg, strategies, seeds=list(range(args.seeds)))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    export_csv(result, out / "steps.csv")
    export_curves(result, out / "curves.csv")
    print(f"wrote {out / 'steps.csv'} and {out / 'curves.csv'}")
    print(f"{'strategy':<14}{'mean regret':>12}{'std':>8}")
    for kind, strategy in result.strategies.items():
        print(
            f"{kind:<14}{strategy.mean_terminal_regret:>12.2f}"
            f"{strategy.std_terminal_regret:>8.2f}"
        )
    for (a, b), (t, p) in result.welch.items():
        print(f"welch {a} vs {b}: t={t:.3f} p={p:.3g}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    gt, cfg = resolve_config(args.config)
    suite = AcceptanceSuite(full_gt=gt, cfg=cfg, seeds=args.seeds)
    results = suite.run_all()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        config_path=args.config,
        default_mode="human" if args.human_teacher else "simulated",
        persist_dir=args.persist,
        static_dir=args.static,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def cmd_demo(args: argparse.Namespace) -> int:
    gt, cfg = resolve_config(args.config)
    rng = np.random.default_rng(args.seed)
    agent = make_agent(args.strategy, gt.vocabulary())
    regret = 0
    for index in range(args.steps):
        situation = generate_situation(gt, cfg, rng)
        point = agent.act(situation, rng)
        curve = render_curve(point)
        utterance = give_feedback(gt, situation, point, rng)
        text = render_utterance(utterance)
        agent.ingest_text(situation, point, text)
        regret += int(not isinstance(utterance, Assent))
        option = agent.last_option.label() if agent.last_option else "-"
        print(
            f"[{index:>3}] {situation.shape:<9} rgb={situation.rgb.as_tuple()} "
            f"option={option:<20} point=({point.speed:.2f},{point.energy:.2f},"
            f"{point.direction:.2f}) dots={curve.dot_count:<3} teacher: {text}"
        )
    print(f"terminal regret: {regret}/{args.steps}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": cmd_run, "check": cmd_check, "serve": cmd_serve, "demo": cmd_demo}
    try:
        return handlers[args.command](args)
    except MannerItlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

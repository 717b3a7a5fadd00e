"""``textdecepter`` command line entry point."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .attack import AttackConfig
from .embeddings import load_embeddings
from .errors import FormatError
from .harness import CampaignAborted, load_dataset, run_suite
from .victim import HttpOracle, LexiconClassifier

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_ORACLE = 2
TOKEN_ENV = "TEXTDECEPTER_TOKEN"


def build_parser():
    parser = argparse.ArgumentParser(prog="textdecepter", description="Hard-label black-box text attack.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("attack", help="attack every example of a JSONL dataset")
    run.add_argument("--dataset", required=True, help="JSONL file of {id, label, text}")
    run.add_argument("--embeddings", required=True, help="counter-fitted vectors, 'word v1 ... vd' per line")
    run.add_argument("--victim", required=True, help="lexicon:PATH or http:URL")
    run.add_argument("--epsilon", type=float, default=0.7)
    run.add_argument("--top-k", type=int, default=50)
    run.add_argument("--min-cosine", type=float, default=0.5)
    run.add_argument("--pos-mode", choices=("coarse", "fine"), default="coarse")
    run.add_argument("--p-max", type=int, default=3)
    run.add_argument("--query-budget", type=int, default=20000)
    run.add_argument("--no-aggregates", action="store_true")
    run.add_argument("--jobs", type=int, default=1)
    run.add_argument("--timeout", type=float, default=10.0, help="HTTP victim timeout in seconds")
    run.add_argument("--output", required=True, help="where to write the JSON report")
    return parser


def make_victim(choice, timeout=10.0):
    kind, _, target = choice.partition(":")
    if not target:
        raise ValueError(f"victim must be lexicon:PATH or http:URL, got {choice!r}")
    if kind == "lexicon":
        return LexiconClassifier.from_file(target)
    if kind == "http":
        # accept both http:URL and http:http://host/...
        url = target if "://" in target else f"http:{target}"
        return HttpOracle(url, timeout=timeout, token=os.environ.get(TOKEN_ENV))
    raise ValueError(f"unknown victim kind {kind!r}")


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = AttackConfig(
            epsilon=args.epsilon, k=args.top_k, min_cosine=args.min_cosine, pos_mode=args.pos_mode,
            p_max=args.p_max, query_budget=args.query_budget, use_aggregates=not args.no_aggregates,
        )
        if args.jobs < 1:
            raise ValueError("--jobs must be >= 1")
        dataset = load_dataset(args.dataset)
        store = load_embeddings(args.embeddings)
        victim = make_victim(args.victim, args.timeout)
    except (OSError, ValueError, FormatError) as exc:
        print(f"textdecepter: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        metrics = run_suite(dataset, victim, config, args.output, store, jobs=args.jobs)
    except CampaignAborted as exc:
        print(f"textdecepter: {exc}", file=sys.stderr)
        return EXIT_ORACLE

    print(f"original accuracy     {metrics.original_accuracy:6.1f}")
    print(f"after-attack accuracy {metrics.after_attack_accuracy:6.1f}")
    print(f"attack success rate   {metrics.attack_success_rate:6.1f}")
    print(f"% perturbed words     {metrics.mean_perturbed_pct:6.1f}")
    print(f"mean queries          {metrics.mean_queries:6.1f}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Datasets, campaigns, metrics and JSON reports."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

from .attack import AttackConfig, AttackResult, MeanVectorScorer, Status, attack
from .errors import EmptyCampaign, FormatError, TextDecepterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledExample:
    id: str
    label: str
    text: str


@dataclass(frozen=True)
class Metrics:
    original_accuracy: float
    after_attack_accuracy: float
    attack_success_rate: float
    mean_perturbed_pct: float
    mean_queries: float
    examples_attacked: int

    def to_dict(self):
        return asdict(self)


class CampaignAborted(TextDecepterError):
    """An unrecoverable oracle failure stopped a campaign; a partial report was written."""


def load_dataset(path):
    """Parse a JSONL file of ``{"id", "label", "text"}`` objects, keeping order."""
    examples = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"invalid JSON ({exc.msg})", line=lineno) from None
            if not isinstance(record, dict):
                raise FormatError("expected a JSON object", line=lineno)
            for key in ("id", "label", "text"):
                value = record.get(key)
                if not isinstance(value, str) or not value.strip():
                    raise FormatError(f"missing or empty {key!r}", line=lineno)
            if record["id"] in seen:
                raise FormatError(f"duplicate id {record['id']!r}", line=lineno)
            seen.add(record["id"])
            examples.append(LabeledExample(record["id"], record["label"], record["text"]))
    return examples


def success_rate(original_accuracy, after_attack_accuracy):
    """Relative drop in accuracy, in percent."""
    if original_accuracy <= 0:
        return 0.0
    return 100.0 * (original_accuracy - after_attack_accuracy) / original_accuracy


def _mean(values):
    return sum(values) / len(values) if values else 0.0


def compute_metrics(results: Sequence[AttackResult], truths: Sequence[str]):
    """Corpus metrics from one attack result per example.

    An example counts as originally correct unless it was skipped as
    misclassified, and as correct after the attack unless the attack
    succeeded.  Perturbation percentages average over successes; query
    counts over attacked (non-skipped) examples.
    """
    if not results:
        raise EmptyCampaign("no attack results")
    if len(results) != len(truths):
        raise ValueError(f"{len(results)} results for {len(truths)} examples")
    for result, truth in zip(results, truths):
        if result.original_label != truth:
            raise ValueError(f"result for {result.doc_id!r} was attacked with label "
                             f"{result.original_label!r}, ground truth is {truth!r}")
    n = len(results)
    attacked = [r for r in results if r.status is not Status.SKIPPED_MISCLASSIFIED]
    successes = [r for r in attacked if r.status is Status.SUCCESS]
    original = 100.0 * len(attacked) / n
    after = 100.0 * (len(attacked) - len(successes)) / n
    return Metrics(
        original_accuracy=original,
        after_attack_accuracy=after,
        attack_success_rate=success_rate(original, after),
        mean_perturbed_pct=_mean([r.perturbed_word_pct for r in successes]),
        mean_queries=_mean([r.queries for r in attacked]),
        examples_attacked=len(attacked),
    )


def config_dict(config):
    return asdict(config)


def build_report(config, metrics, results):
    return {
        "config": config_dict(config),
        "metrics": metrics.to_dict() if metrics is not None else None,
        "examples": [r.to_dict() for r in results],
    }


def write_report(report, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def run_suite(dataset, oracle, config, report_path, store, jobs=1, scorer=None, tagger=None):
    """Attack every example and write the JSON report.

    Results keep the dataset order whatever ``jobs`` is.  When an example
    fails because the oracle is unreachable or speaks the wrong protocol,
    the campaign stops, a report holding the results gathered so far (and
    ``"metrics": null``) is written, and :class:`CampaignAborted` is raised.

    Returns:
        :class:`Metrics` of the campaign.
    """
    config = config or AttackConfig()
    scorer = scorer or MeanVectorScorer(store)

    def one(example):
        return attack(example.text, example.label, oracle, store, config,
                      scorer=scorer, tagger=tagger, doc_id=example.id)

    results = []
    if jobs <= 1:
        for example in dataset:
            result = one(example)
            results.append(result)
            if result.error:
                break
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(one, dataset):
                results.append(result)
                if result.error:
                    break

    failed = next((r for r in results if r.error), None)
    if failed is not None:
        write_report(build_report(config, None, results), report_path)
        raise CampaignAborted(f"oracle failure on example {failed.doc_id!r}: {failed.error}")

    metrics = compute_metrics(results, [e.label for e in dataset])
    write_report(build_report(config, metrics, results), report_path)
    logger.info("campaign done: %d examples, success rate %.1f%%", len(results), metrics.attack_success_rate)
    return metrics


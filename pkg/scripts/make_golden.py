"""Regenerate tests/data/fixture_golden.json from the bundled fixtures.

For each correctly classified fixture document the exhaustive search over
all substitution sets of size <= 2 decides whether an adversarial example
exists at all.  The campaign is then run with and without aggregates and the
statuses and corpus metrics are recorded.  Run from the repository root:

    python scripts/make_golden.py
"""

import json
import sys
from dataclasses import asdict, replace
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracles import exhaustive_two_substitutions  # noqa: E402

from textdecepter import (AttackConfig, LexiconClassifier, MeanVectorScorer, attack, compute_metrics,  # noqa: E402
                          fixture_path, load_dataset, load_embeddings, parse)

OUT = ROOT / "tests" / "data" / "fixture_golden.json"


def main():
    store = load_embeddings(fixture_path("fixture_embeddings.txt"))
    victim = LexiconClassifier.from_file(fixture_path("fixture_lexicon.json"))
    dataset = load_dataset(fixture_path("fixture_corpus.jsonl"))
    scorer = MeanVectorScorer(store)
    config = AttackConfig()

    solvable = {}
    for ex in dataset:
        doc = parse(ex.text, doc_id=ex.id)
        if victim.classify(doc.raw) != ex.label:
            continue
        found = exhaustive_two_substitutions(doc, ex.label, victim, config, scorer, store)
        solvable[ex.id] = found is not None

    golden = {"config": asdict(config), "exhaustive_two_substitutions": solvable, "campaigns": {}}
    for name, cfg in (("aggregates", config), ("no_aggregates", replace(config, use_aggregates=False))):
        results = [attack(ex.text, ex.label, victim, store, cfg, scorer=scorer, doc_id=ex.id) for ex in dataset]
        metrics = compute_metrics(results, [ex.label for ex in dataset])
        golden["campaigns"][name] = {
            "status": {r.doc_id: r.status.value for r in results},
            "metrics": metrics.to_dict(),
        }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(golden, indent=2) + "\n", encoding="utf-8")
    for name, block in golden["campaigns"].items():
        m = block["metrics"]
        print(f"{name:14s} after-attack {m['after_attack_accuracy']:.2f}  success {m['attack_success_rate']:.2f}")
    print(f"{sum(solvable.values())} of {len(solvable)} documents have a <=2-word adversarial example")


if __name__ == "__main__":
    main()

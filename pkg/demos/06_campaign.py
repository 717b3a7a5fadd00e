"""
Running a campaign
==================

A campaign attacks every example of a dataset and summarises the outcome the
usual way: accuracy before and after, the relative drop (success rate), the
share of words changed and the number of queries.
"""

import json
import tempfile
from dataclasses import replace
from pathlib import Path

from textdecepter import AttackConfig, LexiconClassifier, fixture_path, load_dataset, load_embeddings, run_suite
from textdecepter.harness import success_rate

store = load_embeddings(fixture_path("fixture_embeddings.txt"))
victim = LexiconClassifier.from_file(fixture_path("fixture_lexicon.json"))
dataset = load_dataset(fixture_path("fixture_corpus.jsonl"))

out = Path(tempfile.mkdtemp())
config = AttackConfig()
for name, cfg in (("with aggregates", config), ("without aggregates", replace(config, use_aggregates=False))):
    m = run_suite(dataset, victim, cfg, out / f"{name.replace(' ', '_')}.json", store, jobs=4)
    print(f"{name:19s} original {m.original_accuracy:5.1f}  after {m.after_attack_accuracy:5.1f}  "
          f"success {m.attack_success_rate:5.1f}  perturbed {m.mean_perturbed_pct:4.1f}%  "
          f"queries {m.mean_queries:5.1f}")

report = json.loads((out / "with_aggregates.json").read_text())
wins = [e for e in report["examples"] if e["status"] == "SUCCESS"]
print(f"\n{len(wins)} successful examples, e.g. {wins[0]['id']}: {wins[0]['adversarial_text']!r}")

########################################
## The success rate is a relative drop
########################################

# 78% accuracy falling to 18.9% is a 75.8% success rate, not 59.1 points.
print("\nsuccess_rate(78.0, 18.9) =", round(success_rate(78.0, 18.9), 1))

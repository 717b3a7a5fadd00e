import sys
import json

import pytest

from textdecepter import LexiconClassifier, MeanVectorScorer, fixture_path, load_dataset, load_embeddings


@pytest.fixture(scope="session")
def store():
    return load_embeddings(fixture_path("fixture_embeddings.txt"))


@pytest.fixture(scope="session")
def victim():
    return LexiconClassifier.from_file(fixture_path("fixture_lexicon.json"))


@pytest.fixture(scope="session")
def corpus():
    return load_dataset(fixture_path("fixture_corpus.jsonl"))


@pytest.fixture(scope="session")
def scorer(store):
    return MeanVectorScorer(store)


@pytest.fixture(scope="session")
def weights():
    with open(fixture_path("fixture_lexicon.json"), encoding="utf-8") as fh:
        return {k: v for k, v in json.load(fh).items() if not k.startswith("__")}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.OUTCOMES):
        terminalreporter.write_line(module.OUTCOMES[number])

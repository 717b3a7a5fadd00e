"""Hard-label victims.

Every victim implements :class:`Oracle`, whose only operation is
``classify(text) -> label``.  Nothing here ever returns a score.
"""

from __future__ import annotations

import json
import logging
import threading
import time
from abc import ABC, abstractmethod

import requests

from .errors import BudgetExhausted, EmptyDocument, FormatError, OracleProtocolError, OracleUnavailable
from .textproc import tokenize

logger = logging.getLogger(__name__)

BIAS_KEY = "__bias__"
POSITIVE_KEY = "__positive_label__"
NEGATIVE_KEY = "__negative_label__"


class Oracle(ABC):
    """A classifier reachable only through its final decision."""

    @abstractmethod
    def classify(self, text: str) -> str:
        """Return the predicted label of ``text``."""


class QueryCounter:
    """Thread-safe, monotonically increasing query count."""

    def __init__(self):
        self._count = 0
        self._lock = threading.Lock()

    @property
    def count(self):
        return self._count

    def increment(self):
        with self._lock:
            self._count += 1
            return self._count


class CountingOracle(Oracle):
    """Counts every classify call on ``oracle``; optionally enforces a budget.

    Args:
        oracle: the wrapped victim.
        budget: maximum number of queries, or None for unlimited.  Asking for
            one more raises :class:`BudgetExhausted` without querying.
    """

    def __init__(self, oracle, budget=None):
        self.oracle = oracle
        self.budget = budget
        self.counter = QueryCounter()
        self._lock = threading.Lock()

    @property
    def count(self):
        return self.counter.count

    @property
    def remaining(self):
        if self.budget is None:
            return None
        return max(self.budget - self.counter.count, 0)

    def classify(self, text):
        with self._lock:
            if self.budget is not None and self.counter.count >= self.budget:
                raise BudgetExhausted(f"query budget of {self.budget} exhausted")
            self.counter.increment()
        return self.oracle.classify(text)


class MemoOracle(Oracle):
    """Remembers the label of every text it has seen; repeated texts are not re-queried."""

    def __init__(self, oracle):
        self.oracle = oracle
        self.labels = {}

    def remember(self, text, label):
        self.labels[text] = label

    def classify(self, text):
        label = self.labels.get(text)
        if label is None:
            label = self.labels[text] = self.oracle.classify(text)
        return label


class LexiconClassifier(Oracle):
    """Linear bag-of-words victim used as a deterministic test fixture.

    The decision is ``positive_label`` iff the summed weights of the
    normalized words plus ``bias`` is strictly positive.  Unknown words weigh 0.
    """

    def __init__(self, weights, bias=0.0, positive_label="POS", negative_label="NEG"):
        if not positive_label or not negative_label or positive_label == negative_label:
            raise ValueError("labels must be distinct non-empty strings")
        self.weights = dict(weights)
        self.bias = float(bias)
        self.positive_label = positive_label
        self.negative_label = negative_label

    @classmethod
    def from_file(cls, path):
        """Load a JSON object of word weights plus the reserved ``__*__`` keys."""
        with open(path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise FormatError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
        if not isinstance(data, dict):
            raise FormatError("lexicon file must hold a JSON object")
        bias = data.pop(BIAS_KEY, 0.0)
        positive = data.pop(POSITIVE_KEY, "POS")
        negative = data.pop(NEGATIVE_KEY, "NEG")
        for word, weight in data.items():
            if isinstance(weight, bool) or not isinstance(weight, (int, float)):
                raise FormatError(f"weight of {word!r} is not a number")
        return cls({w.lower(): float(v) for w, v in data.items()}, bias, positive, negative)

    def classify(self, text):
        if not text or not text.strip():
            raise EmptyDocument("cannot classify an empty text")
        total = self.bias
        for tok in tokenize(text).tokens:
            if tok.is_word:
                total += self.weights.get(tok.normalized, 0.0)
        return self.positive_label if total > 0 else self.negative_label


def classify_lexicon(text, classifier):
    return classifier.classify(text)


class HttpOracle(Oracle):
    """Victim behind ``POST {endpoint}`` with ``{"text": ...}`` -> ``{"label": ...}``.

    Connection errors, timeouts, 429 and 5xx replies are retried with
    exponential backoff; one logical query is one ``classify`` call regardless
    of how many attempts it took.

    Args:
        endpoint: full URL of the classification endpoint.
        timeout: per-request timeout in seconds.
        max_attempts: total attempts per query (first try included).
        backoff: sleep before the n-th retry is ``backoff * 2 ** (n - 1)``.
        token: optional bearer token.
        session: a ``requests.Session`` to reuse.
    """

    RETRY_STATUS = frozenset({429, 500, 502, 503, 504})

    def __init__(self, endpoint, timeout=10.0, max_attempts=3, backoff=0.5, token=None, session=None):
        if max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        self.endpoint = endpoint
        self.timeout = timeout
        self.max_attempts = max_attempts
        self.backoff = backoff
        self.token = token
        self.session = session or requests.Session()

    def _headers(self):
        headers = {"Content-Type": "application/json"}
        if self.token:
            headers["Authorization"] = f"Bearer {self.token}"
        return headers

    def classify(self, text):
        if not text or not text.strip():
            raise EmptyDocument("cannot classify an empty text")
        body = json.dumps({"text": text})
        last_error = None
        for attempt in range(self.max_attempts):
            if attempt:
                time.sleep(self.backoff * 2 ** (attempt - 1))
            try:
                reply = self.session.post(self.endpoint, data=body.encode("utf-8"),
                                          headers=self._headers(), timeout=self.timeout)
            except (requests.ConnectionError, requests.Timeout) as exc:
                last_error = exc
                logger.debug("attempt %d to %s failed: %s", attempt + 1, self.endpoint, exc)
                continue
            if reply.status_code in self.RETRY_STATUS:
                last_error = f"HTTP {reply.status_code}"
                logger.debug("attempt %d to %s got HTTP %d", attempt + 1, self.endpoint, reply.status_code)
                continue
            return self._parse(reply)
        raise OracleUnavailable(f"{self.endpoint} unavailable after {self.max_attempts} attempts: {last_error}")

    def _parse(self, reply):
        if reply.status_code != 200:
            raise OracleProtocolError(f"unexpected HTTP status {reply.status_code}")
        try:
            payload = reply.json()
        except ValueError:
            raise OracleProtocolError("reply is not JSON") from None
        if not isinstance(payload, dict) or set(payload) != {"label"}:
            raise OracleProtocolError(f"reply must be an object with a single 'label' key, got {payload!r}")
        label = payload["label"]
        if not isinstance(label, str) or not label:
            raise OracleProtocolError(f"label must be a non-empty string, got {label!r}")
        return label


def classify_http(text, endpoint, **kwargs):
    return HttpOracle(endpoint, **kwargs).classify(text)

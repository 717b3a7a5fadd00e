"""
Hard-label victims
==================

A victim answers ``classify(text)`` with a label and nothing else.  The
package ships a linear word-weight classifier for experiments and an adapter
for classifiers served over HTTP.
"""

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

from textdecepter import CountingOracle, HttpOracle, LexiconClassifier, fixture_path

victim = LexiconClassifier.from_file(fixture_path("fixture_lexicon.json"))
for text in ("strange and beautiful film", "strange and resplendent film", "good but bad"):
    print(f"{victim.classify(text)}  {text}")

# Every query can be counted, and a budget turns into an exception once spent.
counting = CountingOracle(victim, budget=3)
for text in ("good", "bad", "fine"):
    counting.classify(text)
print("\nqueries so far:", counting.count, "remaining:", counting.remaining)

########################################
## A victim behind HTTP
########################################


class Handler(BaseHTTPRequestHandler):
    # a toy service: NEG whenever the text mentions "resplendent"
    def do_POST(self):
        text = json.loads(self.rfile.read(int(self.headers["Content-Length"])))["text"]
        body = json.dumps({"label": "NEG" if "resplendent" in text else "POS"}).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


server = HTTPServer(("127.0.0.1", 0), Handler)
threading.Thread(target=server.serve_forever, daemon=True).start()
remote = CountingOracle(HttpOracle(f"http://127.0.0.1:{server.server_port}/classify", timeout=2))
print("\nremote:", remote.classify("strange and beautiful film"), remote.classify("strange and resplendent film"))
print("remote queries:", remote.count)
server.shutdown()

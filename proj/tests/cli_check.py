import json
import os
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = sys.argv[2]

registry = Registry()
schemas = {}
for name in os.listdir(SCHEMAS):
    with open(os.path.join(SCHEMAS, name)) as fh:
        doc = json.load(fh)
    schemas[name] = doc
    registry = registry.with_resource(name, Resource.from_contents(doc))

failures = []


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def run(args):
    return subprocess.run([CLI] + args, capture_output=True, text=True, env=dict(os.environ, ALCOVE_THREADS="1"))


def valid(doc, schema):
    try:
        jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(doc)
        return True
    except jsonschema.ValidationError as e:
        print("    " + e.message)
        return False


N3 = ["--n", "3", "--f", "1", "--p", "37", "--s", "231", "--mu", "20,10,0"]
N2 = ["--n", "2", "--f", "1", "--p", "7", "--s", "21", "--mu", "4,0"]
F2 = ["--n", "2", "--f", "2", "--p", "23", "--s", "21;12", "--mu", "12,0;10,0"]

r = run(["wset"] + N3)
check(r.returncode == 0, "wset n=3 exits 0")
doc = json.loads(r.stdout)
check(valid(doc, "wset.schema.json"), "wset output matches schema")
check(doc["size"] == 9 and len(doc["wset"]) == 9, "wset n=3 has 9 weights")
check(len(doc["wobv"]) == 6, "wobv n=3 has 6 weights")
check(doc["definition_agrees"], "wset by definition agrees")
check(json.loads(json.dumps(doc)) == doc, "wset output round-trips")

r = run(["wset"] + N2)
check(r.returncode == 0 and json.loads(r.stdout)["size"] == 2, "wset n=2 has 2 weights")

r = run(["wset", "--format", "dot"] + N3)
check(r.returncode == 2, "wset --format dot is refused with exit 2")
check(valid(json.loads(r.stderr), "error.schema.json"), "refusal matches error schema")

r = run(["wset", "--n", "3", "--p", "2", "--s", "123", "--mu", "0,0,0"])
err = json.loads(r.stderr)
check(r.returncode == 2 and err["error"]["reason"] == "C0 empty", "p <= n-1 refused with C0 empty")

r = run(["wset", "--n", "3", "--p", "37", "--s", "231", "--mu", "2,1,0"])
check(r.returncode == 2 and valid(json.loads(r.stderr), "error.schema.json"), "shallow tau refused with exit 2")

r = run(["graph"] + N2 + ["--format", "dot"])
check(r.returncode == 0 and r.stdout.count(" -- ") == 1 and r.stdout.count("label=") == 3, "graph n=2 is a connected 2-vertex DOT graph")

r = run(["graph"] + N3)
doc = json.loads(r.stdout)
check(r.returncode == 0 and valid(doc, "graph.schema.json"), "graph n=3 matches schema")
check(len(doc["vertices"]) == 9 and doc["connected"] and doc["components"] == 1, "graph n=3 is connected on 9 vertices")
check(all(v["distance_to_extremal"] >= 0 for v in doc["vertices"]), "every n=3 vertex reaches an extremal vertex")

r = run(["graph"] + F2)
doc = json.loads(r.stdout)
check(r.returncode == 0 and valid(doc, "graph.schema.json") and doc["connected"], "graph f=2 is connected")

r = run(["eliminate"] + N3 + ["--sigma", "20,10,0"])
doc = json.loads(r.stdout)
check(r.returncode == 0 and valid(doc, "certificate.schema.json") and doc["replay"] == "ok", "certificate emitted and replayed")

r = run(["eliminate"] + N3 + ["--sigma", "18,9,0"])
err = json.loads(r.stderr)
check(r.returncode == 2 and err["error"]["reason"] == "not eliminable" and err["membership_witness"], "member of W? is not eliminable")
check(valid(err, "error.schema.json"), "not eliminable matches error schema")

r = run(["eliminate"] + N3 + ["--sigma", "20,10"])
check(r.returncode == 1 and valid(json.loads(r.stderr), "error.schema.json"), "malformed sigma exits 1")

with tempfile.TemporaryDirectory() as tmp:
    report = os.path.join(tmp, "r.json")
    r = run(["verify", "--n", "2", "--p", "7", "--json", "--report", report])
    check(r.returncode == 0, "verify n=2 passes")
    with open(report) as fh:
        text = fh.read()
    check(text == r.stdout and valid(json.loads(text), "verify_report.schema.json"), "verify --json report matches schema")

    r = run(["verify", "--n", "2", "--p", "7", "--mutate", "drop-restricted-hypothesis", "--report", report])
    with open(report) as fh:
        doc = json.load(fh)
    bad = sum(len(s["counterexamples"]) for run_ in doc["runs"] for s in run_["sweeps"])
    check(r.returncode == 4 and bad > 0 and valid(doc, "verify_report.schema.json"), "mutated verify exits 4 with counterexamples")

print("%d failure(s)" % len(failures))
sys.exit(1 if failures else 0)

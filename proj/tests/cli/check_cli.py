#!/usr/bin/env python3
"""End-to-end checks of the qbundle command line.

usage: check_cli.py <qbundle> <source dir>
"""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

QB, SRC = sys.argv[1], sys.argv[2]
failures = []


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def run(*args):
    return subprocess.run([QB, *args], capture_output=True, text=True)


def load(path):
    with open(path) as f:
        return json.load(f)


def validator(name):
    schema = load(os.path.join(SRC, "schemas", name))
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def valid(v, doc):
    errs = list(v.iter_errors(doc))
    for e in errs[:3]:
        print("     ", e.message)
    return not errs


manifest_v = validator("manifest.schema.json")
report_v = validator("report.schema.json")
tmp = tempfile.mkdtemp(prefix="qbundle-cli-")
mdir = os.path.join(SRC, "manifests")

# shipped manifests: schema-valid, pass, reports schema-valid and deterministic
for name in sorted(os.listdir(mdir)):
    path = os.path.join(mdir, name)
    expect(valid(manifest_v, load(path)), f"{name} matches the manifest schema")
    out1, out2 = os.path.join(tmp, name + ".1"), os.path.join(tmp, name + ".2")
    r = run("run", path, "--seed", "7", "--out", out1)
    expect(r.returncode == 0, f"{name} runs with exit 0 (got {r.returncode})")
    rep = load(out1)
    expect(valid(report_v, rep), f"{name} report matches the report schema")
    expect(rep["config"]["seed"] == 7, f"{name} report echoes the seed")
    expect(rep["summary"]["ok"] and rep["summary"]["fail"] == 0, f"{name} summary is ok")
    r = run("run", path, "--seed", "7", "--jobs", "3", "--out", out2)
    with open(out1, "rb") as a, open(out2, "rb") as b:
        expect(a.read() == b.read(), f"{name} report is byte-identical across runs and --jobs")

# preset export is byte-stable and reproduces the shipped manifests
exports = {
    "example26.json": ["example26", "--n", "3"],
    "example27.json": ["example27", "--point", "3/5,4/5"],
    "quaternions.json": ["quaternions"],
    "entwining.json": ["entwining26", "--n", "2"],
    "monopole.json": ["monopole", "--n", "2", "--degree", "6"],
}
for name, args in exports.items():
    a, b = run("preset-export", *args), run("preset-export", *args)
    expect(a.returncode == 0 and a.stdout == b.stdout, f"preset-export {args[0]} is byte-stable")
    with open(os.path.join(mdir, name)) as f:
        expect(a.stdout == f.read(), f"preset-export {args[0]} reproduces manifests/{name}")

# a failing check gives exit 1 and a witness
m = load(os.path.join(mdir, "example27.json"))
for c in m["checks"]:
    if isinstance(c, dict) and c["name"] == "module_algebra":
        c["params"]["expect"] = True
bad = os.path.join(tmp, "fails.json")
json.dump(m, open(bad, "w"))
out = os.path.join(tmp, "fails.report")
r = run("run", bad, "--out", out)
expect(r.returncode == 1, f"failing check exits 1 (got {r.returncode})")
rep = load(out)
expect(valid(report_v, rep), "failing report matches the report schema")
expect(any(x["status"] == "fail" and "witness" in x for x in rep["results"]), "failing result carries a witness")

# input errors give exit 2


def write_case(name, doc):
    path = os.path.join(tmp, name)
    with open(path, "w") as f:
        f.write(doc if isinstance(doc, str) else json.dumps(doc))
    return path


m = load(os.path.join(mdir, "example27.json"))
m["payload"]["psi"][0][2][0][2] = "3/+"
r = run("run", write_case("scalar.json", m))
expect(r.returncode == 2 and "position" in r.stderr, f"malformed scalar exits 2 with a position ({r.stderr.strip()})")

m = load(os.path.join(mdir, "example27.json"))
m["checks"].append("no_such_check")
r = run("run", write_case("unknown.json", m))
expect(r.returncode == 2 and "no_such_check" in r.stderr, "unknown check exits 2")

r = run("run", write_case("broken.json", "{\"kind\": "))
expect(r.returncode == 2, "invalid JSON exits 2")

m = load(os.path.join(mdir, "example26.json"))
m["payload"]["psi"][0][2][0][0] = "zz"
r = run("run", write_case("label.json", m))
expect(r.returncode == 2 and "zz" in r.stderr, "unknown label exits 2")

r = run("run", os.path.join(tmp, "missing.json"))
expect(r.returncode == 2, "missing manifest exits 2")

r = run("monopole", "--verify", "omega", "--specialize", "q=2,s=1/")
expect(r.returncode == 2 and "position" in r.stderr, "malformed --specialize exits 2 with a position")

r = run("monopole", "--verify", "omega", "--specialize", "q=0,s=1")
expect(r.returncode == 2, "q=0 is rejected with exit 2")

r = run("monopole", "--verify", "nonsense")
expect(r.returncode == 2, "unknown suite exits 2")

r = run("run")
expect(r.returncode == 2, "missing argument exits 2")

# monopole subcommand, specialised and formal
out = os.path.join(tmp, "mono.json")
r = run("monopole", "--n", "2", "--degree", "6", "--verify", "frame", "--specialize", "q=3/2,s=1/3", "--out", out)
expect(r.returncode == 0, f"monopole frame at q=3/2, s=1/3 passes (got {r.returncode})")
rep = load(out)
expect(valid(report_v, rep), "monopole report matches the report schema")
expect(all(x["params"].get("q0") == "3/2" and x["params"].get("s0") == "1/3" for x in rep["results"]),
       "monopole results carry q0, s0")

out = os.path.join(tmp, "mono_all.json")
r = run("monopole", "--n", "2", "--degree", "6", "--verify", "all", "--out", out)
expect(r.returncode == 0, f"monopole --verify all passes (got {r.returncode})")
rep = load(out)
expect(valid(report_v, rep) and rep["summary"]["ok"], "monopole --verify all report is ok")
expect(all(x["params"].get("n") == 2 and 0 <= x["params"].get("d", -1) <= 6 for x in rep["results"]),
       "monopole results carry n and a degree d <= 6")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)

"""Runs the natree CLI, checks values and exit codes, and validates every
JSON output against the shipped schemas."""
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
ROOT = Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
FIGURES = ROOT / "data" / "figures"

resources = []
for path in SCHEMAS.glob("*.json"):
    resources.append((path.name, Resource.from_contents(json.loads(path.read_text()))))
registry = Registry().with_resources(resources)


def validator(name):
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def run(*args, code=0, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)
    check(p.returncode == code, f"{' '.join(args)}: exit {p.returncode}, expected {code}; stderr {p.stderr.strip()}")
    return p.stdout


def run_json(schema, *args):
    out = json.loads(run(*args))
    errors = list(validator(schema).iter_errors(out))
    check(not errors, f"{' '.join(args)}: schema {schema}: {errors[:1]}")
    return out


def csv_table(text):
    lines = text.strip().splitlines()
    return {int(a): int(b) for a, b in (line.split(",") for line in lines[1:])}


# Figure documents are schema-valid tree documents.
doc_schema = validator("tree_document.schema.json")
for path in sorted(FIGURES.glob("*.json")):
    errors = list(doc_schema.iter_errors(json.loads(path.read_text())))
    check(not errors, f"{path.name} is not a valid tree document: {errors[:1]}")

# count
check(run_json("count.schema.json", "count", "--shape", str(FIGURES / "ex_hook.json"))["count"] == 24, "ex_hook count")
check(run_json("count.schema.json", "count", "--size", "1x1")["count"] == 1, "1x1 count")
check(run_json("count.schema.json", "count", "--size", "2x2")["count"] == 3, "2x2 count")
out = run_json("count.schema.json", "count", "--size", "3x3", "--enumerate")
check(out["count"] == out["enumerated"] == 31, "3x3 count and enumeration")
out = run_json("count.schema.json", "count", "--size", "3x4", "--hook", "2", "--enumerate")
check(out["count"] == out["enumerated"], "3x4 hook 2 count")
run_json("count.schema.json", "count", "--size", "3x3", "--alpha", "--beta")
run_json("count.schema.json", "count", "--shape", str(FIGURES / "ex_hook_nat.json"), "--q")
run_json("count.schema.json", "count", "--dim", "3,2", "--size", "3")

# bijection
out = run_json("bijection.schema.json", "bijection", "phi", str(FIGURES / "zigzag.json"), "--verify-roundtrip")
check(out["cycle_string"] == "(1 6 20 12 5 22 10 2 23 13)(3 7 17 15 4 19 18)(8 16 14 9)(11)(21)", "phi cycles")
check(out["roundtrip"] is True, "phi roundtrip")
out = run_json("bijection.schema.json", "bijection", "psi", str(FIGURES / "zigzag.json"), "--verify-roundtrip")
check(out["cycle"] == [0, 13, 1, 6, 20, 12, 5, 22, 10, 2, 23, 21, 18, 3, 7, 17, 15, 4, 19, 14, 9, 8, 16, 11],
      "psi cycle")
check(out["roundtrip"] is True and out["blue_blocks"] == out["hook"] == 7, "psi blue blocks")
run_json("bijection.schema.json", "bijection", "theta", str(FIGURES / "zigzag.json"), "--verify-roundtrip")
run_json("bijection.schema.json", "bijection", "theta", "--cycle", "(b2 b1 r1)")
for which in ("phi", "psi", "theta", "zeta"):
    out = run_json("bijection.schema.json", "bijection", which, "--verify-roundtrip", "--max-size", "6")
    check(out["ok"] is True and out["checked"] > 0, f"{which} exhaustive verification")
pairs = run_json("bijection.schema.json", "bijection", "zeta", "--size", "3", "--all")["pairs"]
check(len(pairs) == 8, "zeta pairs for sizes 1..3")
check({p["binary"]: p["ordered"] for p in pairs}["(,((,),))"] == "((())())", "zeta pair")

# series
for which in ("N", "M", "N_ab"):
    out = run_json("series.schema.json", "series", which, "--order", "6", "--diff-against-closed-form")
    check(out["difference"] == "0", f"series {which} difference")
out = run_json("series.schema.json", "series", "hookgf", "--order", "5", "--diff-against-closed-form")
check(out["difference"] == "0", "hookgf against enumeration")
out = run_json("series.schema.json", "series", "Ndk", "--d", "3", "--k", "3", "--order", "6",
               "--diff-against-closed-form")
check(out["difference"] == "0", "Ndk (3,3) closed form")
check([row["exponent"] for row in out["coefficients"]] == [[0, 0, 0], [1, 1, 1], [2, 2, 2]], "Ndk (3,3) support")
check(out["coefficients"][2]["coeff"] == [{"monomial": "1", "coeff": "1/8"}], "Ndk (3,3) 1/(2!)^3")
out = run_json("series.schema.json", "series", "BpOp", "--order", "8", "--diff-against-closed-form")
check(out["Bp"] == out["Op"] and out["difference"] == "0", "Bp = Op")

# histogram
h = csv_table(run("histogram", "--size", "2x2", "--stat", "hook"))
check(sum(h.values()) == 3, "2x2 hook histogram total")
h33 = csv_table(run("histogram", "--size", "3x3", "--stat", "hook"))
check(h33 == {1: 1, 2: 18, 3: 12}, "3x3 hook histogram")
for p, n in h33.items():
    check(run_json("count.schema.json", "count", "--size", "3x3", "--hook", str(p))["count"] == n,
          f"3x3 hook {p} against count")
check(csv_table(run("histogram", "--size", "3x4", "--stat", "ce")) ==
      csv_table(run("histogram", "--size", "3x4", "--stat", "hook")), "ce and hook histograms")
check(csv_table(run("histogram", "--binary-size", "6", "--stat", "hook")) ==
      csv_table(run("histogram", "--ordered-edges", "6", "--stat", "childleaf")), "hook and childleaf")
lo = csv_table(run("histogram", "--size", "3x3", "--stat", "lo"))
check(sum(lo.values()) == 31, "lo histogram total")

# errors
run("count", "--size", "zz", code=2)
run("count", code=2)
run("count", "--shape", "/nonexistent.json", code=2)
run("bijection", "psi", str(ROOT / "schemas" / "count.schema.json"), code=2)
run("bijection", "theta", "--cycle", "(b1 b2 r1)", code=2)
run("series", "Ndk", "--d", "3", "--k", "1", "--diff-against-closed-form", code=2)
run("series", "N", "--order", "40", code=3)
run("series", "N", "--order", "14", code=0, env={"NAT_RESOURCE_CAP": "14"})
run("histogram", "--size", "8x8", "--stat", "hook", code=3)
run("bijection", "zeta", "--max-size", "13", code=3)
run("unknown", code=2)

if failures:
    print(f"{len(failures)} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")

"""Validate bundled inputs and every verb's JSON output against schemas/*.json.

usage: python3 scripts/validate_schemas.py [path/to/cy-hopf]
Needs the `jsonschema` and `referencing` packages.
"""

import json
import pathlib
import subprocess
import sys

import referencing
from jsonschema import Draft202012Validator

ROOT = pathlib.Path(__file__).resolve().parent.parent
BIN = sys.argv[1] if len(sys.argv) > 1 else str(ROOT.parent.parent / "target/release/cy-hopf")

VERBS = {
    "check-cy": ["klein_a2", "zn_plane_3", "zn_plane_4", "zn_plane_5", "sl2_sign", "line_sign", "solvable_plane"],
    "hdet": ["zn_plane_3", "sl2_sign", "line_sign"],
    "nakayama": ["klein_a2", "zn_plane_4", "zn_plane_3_presentation"],
    "roots": ["a2", "g2"],
    "verify-hopf": ["zn_plane_3_presentation", "zn_plane_3_corrupted"],
    "verify-s2": ["klein_a2", "zn_plane_5"],
    "confluence": ["klein_a2", "zn_plane_3_presentation"],
    "lie-check": ["sl2_sign", "solvable_plane", "line_sign", "klein_a2"],
}


def main():
    schemas = {p.name: json.loads(p.read_text()) for p in (ROOT / "schemas").glob("*.json")}
    registry = referencing.Registry().with_resources(
        (s["$id"], referencing.Resource.from_contents(s)) for s in schemas.values()
    )
    for s in schemas.values():
        Draft202012Validator.check_schema(s)
    inputs = Draft202012Validator(schemas["input.schema.json"], registry=registry)
    reports = Draft202012Validator(schemas["report.schema.json"], registry=registry)
    failures = 0
    for f in sorted((ROOT / "data").glob("*.json")):
        for e in inputs.iter_errors(json.loads(f.read_text())):
            failures += 1
            print(f"input {f.name}: {e.message}")
    n = 0
    for verb, files in VERBS.items():
        for name in files:
            out = subprocess.run(
                [BIN, "--json", "--degree-bound", "3", verb, str(ROOT / "data" / f"{name}.json")],
                capture_output=True,
                text=True,
            )
            n += 1
            for e in reports.iter_errors(json.loads(out.stdout)):
                failures += 1
                print(f"{verb} {name}: {e.message[:200]}")
    print(f"{n} reports checked, {failures} schema violations")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()

"""Runs zdrlab commands that emit JSON and validates each document against its schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("ring_describe", ["ring", "describe", "Zn:12", "--format", "json"]),
    ("ring_describe", ["ring", "describe", "prod:(Zn:2,GF:9)", "--format", "json"]),
    ("ring_describe", ["ring", "describe", "cat:cvB3", "--format", "json"]),
    ("graph", ["graph", "build", "Zn:8", "--format", "json"]),
    ("graph", ["graph", "build", "Zni:5", "--format", "json"]),
    ("dims", ["dims", "solve", "Zn:15", "--format", "json"]),
    ("dims", ["dims", "solve", "Zni:21", "--which", "ddim", "--format", "json"]),
    ("dims", ["dims", "solve", "Zn:60", "--which", "ddim", "--max-nodes", "1", "--format", "json"]),
    ("verify_report", ["verify", "run", "--format", "json", "--deterministic"]),
    ("verify_report", ["verify", "run", "--only", "T2.3", "--format", "json"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    failures = 0
    for schema_name, args in CASES:
        schema = json.loads((schema_dir / f"{schema_name}.schema.json").read_text())
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        if proc.returncode not in (0, 4):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            print(f"FAIL {' '.join(args)}: {err}")
            failures += 1
            continue
        print(f"ok   {' '.join(args)} -> {schema_name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

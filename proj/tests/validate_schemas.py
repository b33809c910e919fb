"""Runs the CLI and validates its JSON output against the shipped schemas."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        sys.exit(f"{' '.join(args)} exited with {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def main():
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    table = json.loads((schema_dir / "table.schema.json").read_text())
    cert = json.loads((schema_dir / "certificate.schema.json").read_text())

    cases = [
        (table, ["table", "--genus", "0,1,2,3", "--points", "1,2,3", "--stages", "2,3,4"]),
        (cert, ["certify", "--genus", "1,2,3", "--points", "1,2,3", "--stages", "2,3"]),
        (cert, ["certify", "--genus", "1,2", "--points", "2", "--stages", "2", "--ring", "E"]),
    ]
    for schema, args in cases:
        doc = run(binary, *args)
        jsonschema.validate(doc, schema)
        print(f"ok: {' '.join(args)} ({len(doc)} records)")

    # A broken record must be rejected, so the check above is not vacuous.
    bad = [{"genus": 1, "n": 1, "s": 1, "upper": 2, "lower": 2, "tc": 2, "certified": "yes"}]
    try:
        jsonschema.validate(bad, table)
    except jsonschema.ValidationError:
        print("ok: invalid record rejected")
    else:
        sys.exit("schema accepted an invalid record")


if __name__ == "__main__":
    main()

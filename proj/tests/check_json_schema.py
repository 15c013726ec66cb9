"""Runs each subcommand with --json and validates the output against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ["qdim", "0", "0", "0", "1"],
    ["simplify", "x+ ; x-"],
    ["simplify", "--planar", "x+"],
    ["eval", "cup ; cap"],
    ["eval-link", "--twists", "2,-3,1"],
    ["idempotents"],
    ["verify-all", "--only", "1,2,13"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    failures = 0
    for args in CASES:
        proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True)
        try:
            doc = json.loads(proc.stdout)
            jsonschema.validate(doc, schema)
            print("ok  ", " ".join(args))
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            print("FAIL", " ".join(args), str(e).splitlines()[0])
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()

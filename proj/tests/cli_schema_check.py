"""Runs the CLI in --json mode over a set of commands and validates every
output against docs/cli-schema.json."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["low", "E y. x = 2*y"],
    ["low", "2*x = 0"],
    ["eval", "E y . x = 2*y", "Z/4 + Z/2"],
    ["eval", "x = y", "Z/3 + Z"],
    ["pure", "<(2)>", "Z/4"],
    ["pure", "<(1,1)>", "Z/4 + Z/2"],
    ["torsion", "Z/6 + Z^2"],
    ["complement", "<(1,1)>", "Z/4 + Z/2"],
    ["complement", "<(2)>", "Z/4"],
    ["chain", "--witness", "2", "3", "1", "--indices"],
    ["chain", "x = 2^{n}*x", "Z/4", "--levels", "3"],
    ["types", "Z/2", "--bound", "4"],
    ["ulm", "(Z/4)^3 + Z/2"],
    ["limit-model", "lambda", "--cof", "w1"],
    ["limit-model", "2^aleph0", "--cof", "w", "--p", "3"],
    ["card", "stable", "beth(ω)"],
    ["card", "stable", "aleph1"],
    ["card", "compare", "aleph0", "<", "2^aleph0"],
    ["card", "normalize", "(2^aleph0)^aleph0"],
    ["card", "cof", "lambda"],
    ["verify", "--suite", "order-patterns"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        validator = jsonschema.Draft202012Validator(json.load(f))
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True, encoding="utf-8")
        if proc.returncode != 0:
            print(f"FAIL {args}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        if errors:
            print(f"FAIL {args}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {args}")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()

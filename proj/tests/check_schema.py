"""Validates `cauchy --json` output against docs/cli-output.schema.json."""
import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

invocations = [
    ["prove", "exp(pi) - pi < 20", "--json"],
    ["prove", "exp(pi) - pi > 20", "--json", "--trace"],
    ["prove", "sin(pi) > 0", "--max-prec", "40", "--json", "--trace"],
    ["prove", "tan(1) < 2", "--backend", "both", "--json", "--trace"],
    ["prove", "1 <= 2", "--json"],
    ["prove", "1/(1-1) < 2", "--json"],
    ["eval", "pi", "--digits", "20", "--json"],
    ["eval", "-exp(1)", "--digits", "3", "--json"],
    ["eval", "ln(0-2)", "--digits", "3", "--json"],
    ["pi01", "n < 20", "--json"],
    ["pi01", "0 <= n", "--json"],
    ["pi01", "n <", "--json"],
]

failures = 0
for args in invocations:
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    first = proc.stdout.splitlines()[0]
    errors = list(validator.iter_errors(json.loads(first)))
    if errors:
        failures += 1
        print("FAIL", args, [e.message for e in errors])
    else:
        print("ok  ", args)
sys.exit(1 if failures else 0)

"""Runs the CLI in JSON mode for each experiment and validates the output."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ["transform-verify", "--centered", "--n", "2000"],
    ["transform-verify", "--noncentered", "--n", "2000"],
    ["transform-verify", "--scaled", "--n", "2000"],
    ["chain", "v", "--depth", "5", "--emit-density", "--points", "4"],
    ["chain", "w", "--depth", "3", "--c", "2", "--d", "1", "--n", "2000"],
    ["chain", "u", "--depth", "3", "--emit-density", "--points", "4", "--n", "2000"],
    ["walk", "euclid", "--steps", "1:1:0,2:0.5:1", "--n", "2000"],
    ["walk", "hyperbolic", "--length", "3", "--n", "2000"],
    ["golden", "--depth", "20"],
]


def main():
    cli, schema_path, out_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    out_dir.mkdir(parents=True, exist_ok=True)
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for i, args in enumerate(RUNS):
        target = out_dir / f"report_{i}.json"
        proc = subprocess.run([cli, "--seed", "11", "--format", "json", "-o", str(target), *args],
                              capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"{args}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(target.read_text(encoding="utf-8"))))
        for err in errors:
            print(f"{args}: {err.message}")
        failures += bool(errors)
    print(f"{len(RUNS) - failures}/{len(RUNS)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

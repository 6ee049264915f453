"""Run the rees CLI and validate its JSON output against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items()
)

cases = [
    ("generators.json", ["gen", "-n", "1,2,2,3", "--target", "rees", "--emit", "json"]),
    ("generators.json", ["gen", "-n", "2,4", "--presentation", "x", "--emit", "json"]),
    ("gb_report.json", ["gb", "-n", "1,2,3", "--target", "rees"]),
    ("facets.json", ["complex", "facets", "-n", "2,3", "--method", "tree"]),
    ("hilbert.json", ["hilbert", "--case", "L5:3"]),
    ("verify_report.json", ["verify", "--suite", "lm", "-n", "1,2,2,3"]),
    ("order_dump.json", ["order-dump", "-n", "1,1,2,3,4", "--emit", "json"]),
]

failed = 0
for schema, args in cases:
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode != 0:
        print(f"FAIL {' '.join(args)}: exit {out.returncode}\n{out.stderr}")
        failed += 1
        continue
    validator = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
    errors = list(validator.iter_errors(json.loads(out.stdout)))
    for e in errors[:5]:
        print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
    failed += bool(errors)
    if not errors:
        print(f"ok   {' '.join(args)} -> {schema}")

sys.exit(1 if failed else 0)

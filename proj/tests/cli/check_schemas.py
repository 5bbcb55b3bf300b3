"""Run representative CLI commands and validate stdout against schemas/v1."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values())

E6 = "1,0,0,0,0,0"
cases = [
    ("decompose.json", ["decompose", "--type", "E6", "--l", E6, "--r", E6]),
    ("decompose.json", ["decompose", "--type", "B3", "--factors", "0,0,1;0,0,1;1,0,0"]),
    ("lr.json", ["lr", "--type", "A2", "--factors", "1,0;1,0;1,0"]),
    ("lr.json", ["lr", "--type", "E6", "--factors", "4,0,0,0,0,0;4,0,0,0,0,0;3,0,0,0,0,0", "--mu", "1,0,3,0,1,0"]),
    ("verdict.json", ["prim", "check", "--type", "A1", "--weights", "1;1;1;1"]),
    ("verdict.json", ["prim", "check", "--type", "E6", "--weights", f"{E6};{E6};{E6};{E6}"]),
    ("verdict.json", ["prim", "check", "--type", "D4", "--weights", "1,0,0,0;0,0,1,0;0,0,0,1"]),
    ("verdict.json", ["prim", "check", "--type", "E6", "--weights", "4,0,0,0,0,0;4,0,0,0,0,0;3,0,0,0,0,0",
                      "--mu", "1,0,3,0,1,0", "--bound", "3"]),
    ("verdict.json", ["invfree", "--type", "A3", "--weights", "1,0,0;0,0,1"]),
    ("verdict.json", ["invfree", "--type", "C3", "--weights", "1,0,0;0,1,0"]),
    ("verdict.json", ["stable", "--type", "A1", "--weights", "1;1;1;1", "--witness"]),
    ("verdict.json", ["stable", "--type", "A2", "--weights", "1,0;1,0;1,0"]),
    ("prim_bounds.json", ["prim", "bounds", "--type", "A1"]),
    ("prim_bounds.json", ["prim", "bounds", "--type", "F4"]),
    ("quiver_canon.json", ["quiver", "canon", "--d", "4", "--gamma", "2,1,1,1,1"]),
    ("quiver_prim.json", ["quiver", "prim", "--n", "6", "--indices", "3,3,3"]),
    ("quiver_oracle.json", ["quiver", "oracle", "--d", "3", "--gamma", "4,2,2,2"]),
    ("flags_open.json", ["flags", "open", "--type", "C3", "--supports", "1|1|1"]),
    ("flags_open.json", ["flags", "open", "--type", "A2", "--supports", "1|1|1|1|1|1|1"]),
    ("sep.json", ["sep", "--dihedral", "5"]),
    ("sep.json", ["sep", "--type", "G2"]),
    ("table_report.json", ["tables", "verify", "--table", "1"]),
    ("table_report.json", ["tables", "verify", "--table", "4"]),
    ("trace.json", ["tables", "trace"]),
    ("error.json", ["prim", "check", "--type", "A2", "--weights", "1,x"]),
    ("error.json", ["prim", "check", "--type", "H3", "--weights", "1,0,0"]),
]

failures = 0
for name, args in cases:
    out = subprocess.run([binary, *args], capture_output=True, text=True)
    try:
        doc = json.loads(out.stdout)
        validator = Draft202012Validator(schemas[name], registry=registry)
        errors = sorted(validator.iter_errors(doc), key=str)
    except json.JSONDecodeError as e:
        errors = [f"not JSON: {e}"]
    if errors:
        failures += 1
        print(f"FAIL {name}: {' '.join(args)}")
        for e in errors[:3]:
            print("   ", getattr(e, "message", e))
print(f"{len(cases)} outputs checked, {failures} schema failures")
sys.exit(1 if failures else 0)

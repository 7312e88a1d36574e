"""Validates goat's JSON output against docs/schema and checks SVG/CSV well-formedness.

usage: check_output_formats.py <goat-binary> <schema-dir> <scratch-dir>
"""
import csv
import io
import json
import os
import subprocess
import sys
import xml.etree.ElementTree as ET

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"goat {' '.join(args)} exited {proc.returncode}: {proc.stderr.decode()}")
    return proc.stdout


def check_schema(schema_dir, name, document):
    with open(os.path.join(schema_dir, name), encoding="utf-8") as fh:
        schema = json.load(fh)
    if jsonschema is not None:
        jsonschema.validate(document, schema)


def main():
    binary, schema_dir, scratch = sys.argv[1:4]

    for args in (["solve", "--n", "2"], ["solve", "--n", "1"], ["solve", "--n", "2", "--method", "contour"],
                 ["solve", "--n", "3", "--method", "oracle", "--r", "4"], ["solve", "--n", "0.5"]):
        raw = run(binary, *args)
        check_schema(schema_dir, "solve.schema.json", json.loads(raw.decode("utf-8")))

    table = json.loads(run(binary, "--format", "json", "table", "--n-max", "6", "--step", "0.5"))
    check_schema(schema_dir, "table.schema.json", table)
    assert json.loads(json.dumps(table)) == table

    for args in (["verify", "--n", "2"], ["verify", "--n", "1"],
                 ["--samples", "100000", "verify", "--n", "3", "--with-mc", "--timings"]):
        check_schema(schema_dir, "verify.schema.json", json.loads(run(binary, *args)))

    text = run(binary, "table", "--n-max", "5").decode("ascii")
    assert "\r" not in text
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "beta", "k", "sqrt2_gap"], rows[0]
    assert all(len(r) == 4 for r in rows)
    ks = [float(r[2]) for r in rows[1:]]
    assert all(a < b for a, b in zip(ks, ks[1:]))

    svg_path = os.path.join(scratch, "format_check.svg")
    run(binary, "--output", svg_path, "plot", "--n-max", "10")
    root = ET.parse(svg_path).getroot()
    assert root.tag == "{http://www.w3.org/2000/svg}svg", root.tag
    assert root.get("version") == "1.1"

    print("output formats ok" + ("" if jsonschema else " (jsonschema unavailable: schemas parsed only)"))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Run the CLI on every fixture and validate its JSON reports and DOT output."""

import json
import pathlib
import re
import subprocess
import sys
import tempfile

import jsonschema

EXIT_CODES = {0, 2, 3}


def run(binary, args):
    return subprocess.run([binary, *args], capture_output=True, text=True)


def main():
    binary, schema_path, fixture_dir = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)

    def validator(kind):
        return jsonschema.Draft202012Validator({"$defs": schema["$defs"], "$ref": f"#/$defs/{kind}"})

    failures = []
    fixtures = sorted(pathlib.Path(fixture_dir).glob("*.oct")) + sorted(pathlib.Path(fixture_dir).glob("*.expr"))
    with tempfile.TemporaryDirectory() as tmp:
        for fixture in fixtures:
            machine = fixture.suffix == ".oct"
            jobs = [("rank", "analysis" if machine else "rank"), ("enumerate", "enumerate")]
            if machine:
                jobs += [("nsets", "nsets"), ("mprime", "mprime"), ("check", "check")]
            for command, kind in jobs:
                out = pathlib.Path(tmp) / f"{fixture.stem}.{command}.json"
                proc = run(binary, [command, str(fixture), "--json", str(out)])
                if proc.returncode not in EXIT_CODES:
                    failures.append(f"{fixture.name} {command}: exit {proc.returncode}: {proc.stderr.strip()}")
                    continue
                report = json.loads(out.read_text())
                errors = list(validator(kind).iter_errors(report))
                for e in errors[:3]:
                    failures.append(f"{fixture.name} {command}: {e.message} at {list(e.absolute_path)}")
                if kind in ("rank", "analysis"):
                    expected = {"Bound": 0, "NotScattered": 2, "Unknown": 3}[report["result"]]
                    if proc.returncode != expected:
                        failures.append(f"{fixture.name} rank: exit {proc.returncode} for {report['result']}")
                if kind == "check" and not report["passed"]:
                    failures.append(f"{fixture.name} check: {[c['name'] for c in report['checks'] if not c['passed']]}")
            if not machine:
                continue
            # DOT node and edge counts agree with the fixture and with the mprime report.
            lines = [l.split("#", 1)[0].split() for l in fixture.read_text().splitlines()]
            states = sum(len(l) - 1 for l in lines if l[:1] == ["states"])
            trans = sum(1 for l in lines if l[:1] == ["trans"])
            mprime = json.loads((pathlib.Path(tmp) / f"{fixture.stem}.mprime.json").read_text())["mprime"]
            for flags, nodes, edges in (([], states, trans),
                                        (["--prime"], len(mprime["states"]), len(mprime["transitions"]))):
                dot = run(binary, ["dot", str(fixture), *flags]).stdout
                got_nodes = len(re.findall(r"^\s+\S+ \[(label=\"[^\"]*\", )?shape=", dot, re.M))
                got_edges = len(re.findall(r" -> ", dot))
                if not dot.startswith("digraph") or (got_nodes, got_edges) != (nodes, edges):
                    failures.append(f"{fixture.name} dot {flags}: {got_nodes} nodes, {got_edges} edges, "
                                    f"expected {nodes}, {edges}")
    for f in failures:
        print("FAIL", f)
    print(f"{len(fixtures)} fixtures, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

"""Report payloads and their JSON / markdown renderings.

The markdown renderers take the JSON-ready dict, never the live objects, so a
markdown report is a function of the JSON report alone.
"""

from __future__ import annotations

import json

from .harness import ScanRow, SuiteReport


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def suite_payload(report: SuiteReport, *, timing: bool = True) -> dict:
    return {
        "command": "suite",
        "format": "json",
        "results": [r.to_dict(timing) for r in report.results],
        "summary": report.summary,
    }


def scan_payload(rows: list[ScanRow]) -> dict:
    return {
        "command": "scan-zn",
        "rows": [{"n": r.n, "gnc": r.gnc, "branch": r.branch, "prime_power": r.prime_power}
                 for r in rows],
        "consistent": all(r.consistent for r in rows),
    }


def _cell(value) -> str:
    return str(value).replace("|", "\\|")


def suite_markdown(payload: dict) -> str:
    lines = ["| id | anchor | status | rings | counterexample |", "|---|---|---|---|---|"]
    for r in payload["results"]:
        cx = r.get("counterexample")
        note = cx["ring"] if cx else r.get("reason", "")
        lines.append(f"| {r['id']} | {_cell(r['anchor'])} | {r['status']} | {r['rings_examined']} | {_cell(note)} |")
    s = payload["summary"]
    lines.append("")
    lines.append(f"{s['checks']} checks: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
    if s.get("dropped_expressions"):
        lines.append("dropped (over capacity): " + ", ".join(s["dropped_expressions"]))
    return "\n".join(lines) + "\n"


def scan_markdown(payload: dict) -> str:
    lines = ["| n | gnc | branch | prime power |", "|---|---|---|---|"]
    for r in payload["rows"]:
        lines.append(f"| {r['n']} | {str(r['gnc']).lower()} | {r['branch']} | {str(r['prime_power']).lower()} |")
    return "\n".join(lines) + "\n"


def profile_markdown(payload: dict) -> str:
    lines = [f"{payload['label']} (size {payload['size']})", "", "| property | holds | witness |",
             "|---|---|---|"]
    for name, v in payload["verdicts"].items():
        w = v["witness"]
        shown = ", ".join(e["value"] for e in w["elements"]) if w and w.get("elements") else ""
        lines.append(f"| {name} | {str(v['holds']).lower()} | {_cell(shown)} |")
    return "\n".join(lines) + "\n"

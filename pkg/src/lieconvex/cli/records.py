"""Structured output records: one JSON object per line, tagged with a schema version."""
from __future__ import annotations

import json
from typing import Any

from ..convexity import LineWitness, ScanReport
from ..rootdata import RootSystem, Weight, build_root_system, weyl_dim

SCHEMA_VERSION = 1


class RecordError(ValueError):
    pass


def dumps(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def loads(line: str) -> dict[str, Any]:
    rec = json.loads(line)
    if rec.get("schema_version") != SCHEMA_VERSION:
        raise RecordError(f"unsupported schema_version {rec.get('schema_version')!r}")
    return rec


def sorted_terms(rs: RootSystem, d: dict[Weight, int]) -> list[tuple[Weight, int, int]]:
    """(weight, multiplicity, dimension) by descending dimension, then weight."""
    rows = [(nu, c, weyl_dim(rs, nu)) for nu, c in d.items()]
    return sorted(rows, key=lambda r: (-r[2], r[0]))


def decomposition_record(rs: RootSystem, factors, d: dict[Weight, int]) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "decomposition",
        "root_system": rs.name,
        "factors": [list(f) for f in factors],
        "terms": [{"weight": list(nu), "multiplicity": c, "dimension": dim}
                  for nu, c, dim in sorted_terms(rs, d)],
    }


def decomposition_from_record(rec: dict[str, Any]) -> tuple[RootSystem, list[Weight], dict[Weight, int]]:
    _expect(rec, "decomposition")
    rs = _root_system(rec["root_system"])
    return rs, [tuple(f) for f in rec["factors"]], {tuple(t["weight"]): t["multiplicity"] for t in rec["terms"]}


def witness_record(w: LineWitness) -> dict[str, Any]:
    return {"base": list(w.base), "direction": list(w.direction), "steps": w.steps,
            "occupancies": list(w.occupancies), "status": w.status}


def witness_from_record(rec: dict[str, Any]) -> LineWitness:
    return LineWitness(tuple(rec["base"]), tuple(rec["direction"]), rec["steps"], tuple(rec["occupancies"]))


def scan_record(rs: RootSystem, report: ScanReport, query: dict[str, Any], timing: bool = False) -> dict[str, Any]:
    rec = {
        "schema_version": SCHEMA_VERSION,
        "kind": "scan_report",
        "root_system": rs.name,
        "query": query,
        "instances_checked": report.instances_checked,
        "lines_checked": report.lines_checked,
        "violations": [{"instance": inst, "line": witness_record(w)} for inst, w in report.violations],
        "log_concavity_failures": [{"instance": inst, "line": witness_record(w)}
                                   for inst, w in report.log_concavity_failures],
    }
    if timing:
        rec["elapsed"] = report.elapsed
    return rec


def scan_from_record(rec: dict[str, Any]) -> ScanReport:
    _expect(rec, "scan_report")
    return ScanReport(
        instances_checked=rec["instances_checked"],
        lines_checked=rec["lines_checked"],
        violations=[(v["instance"], witness_from_record(v["line"])) for v in rec["violations"]],
        log_concavity_failures=[(v["instance"], witness_from_record(v["line"]))
                                for v in rec["log_concavity_failures"]],
        elapsed=rec.get("elapsed", 0.0),
    )


def value_record(kind: str, args: dict[str, Any], value: Any) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "args": args, "value": value}


def _expect(rec: dict[str, Any], kind: str) -> None:
    if rec.get("kind") != kind:
        raise RecordError(f"expected a {kind} record, got {rec.get('kind')!r}")


def _root_system(name: str) -> RootSystem:
    return build_root_system(name[0], int(name[1:]))

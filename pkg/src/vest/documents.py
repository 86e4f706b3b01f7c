"""JSON document formats for instances, count sequences, and verification.

Scalars never pass through floats. Rational entries are strings ("5", or
"-2/3" when the denominator is not 1); GF(2) entries are the ints 0 and 1.
Counts are decimal strings, since factorials overflow the range where JSON
numbers survive every parser. Serialization is deterministic (sorted keys,
two-space indent, trailing newline), so re-serializing a loaded document
reproduces it byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional

from .core import (
    DenseMatrix,
    FunctionalMatrix,
    Semiring,
    VestError,
    VestInstance,
    instance_fingerprint,
    new_instance,
    scalar_to_string,
)
from .evaluate import MSequenceResult

INSTANCE_FORMAT = "vest-instance"
MSEQUENCE_FORMAT = "vest-msequence"
FORMAT_VERSION = 1


class DocumentError(VestError):
    pass


@dataclass(frozen=True)
class InstanceDocument:
    """An instance plus free-form metadata that travels with the file."""

    instance: VestInstance
    metadata: dict


def _entry_to_json(semiring: Semiring, e):
    return int(e) if semiring is Semiring.GF2 else scalar_to_string(e)


def _matrix_to_json(semiring: Semiring, rows) -> list:
    return [[_entry_to_json(semiring, e) for e in row] for row in rows]


def instance_to_dict(doc: InstanceDocument) -> dict:
    inst = doc.instance
    sem = inst.semiring
    return {
        "format": INSTANCE_FORMAT,
        "version": FORMAT_VERSION,
        "semiring": sem.value,
        "d": inst.d,
        "h": inst.h,
        "m": inst.m,
        "v": [_entry_to_json(sem, e) for e in inst.v],
        "transformations": [
            _matrix_to_json(sem, t.dense().rows if isinstance(t, FunctionalMatrix) else t.rows)
            for t in inst.transformations
        ],
        "selector": _matrix_to_json(sem, inst.selector.rows),
        "metadata": doc.metadata,
    }


def _require(obj: dict, key: str, kinds, where: str):
    if key not in obj:
        raise DocumentError(f"{where}: missing key {key!r}")
    val = obj[key]
    if not isinstance(val, kinds):
        raise DocumentError(f"{where}: key {key!r} has unexpected type {type(val).__name__}")
    return val


def _parse_entry(semiring: Semiring, raw, where: str):
    if isinstance(raw, bool) or isinstance(raw, float):
        raise DocumentError(f"{where}: entry {raw!r} must be an int or string")
    if not isinstance(raw, (int, str)):
        raise DocumentError(f"{where}: entry {raw!r} must be an int or string")
    try:
        return semiring.canon(raw)
    except (VestError, ValueError, ZeroDivisionError, TypeError) as exc:
        raise DocumentError(f"{where}: bad entry {raw!r}: {exc}") from None


def _parse_matrix(semiring: Semiring, raw, where: str) -> DenseMatrix:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise DocumentError(f"{where}: expected a non-empty list of rows")
    rows = []
    for i, r in enumerate(raw):
        rows.append(tuple(_parse_entry(semiring, e, f"{where} row {i}") for e in r))
    try:
        return DenseMatrix(rows)
    except VestError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def instance_from_dict(data: dict) -> InstanceDocument:
    if not isinstance(data, dict):
        raise DocumentError("document root must be a JSON object")
    fmt = _require(data, "format", str, "document")
    if fmt != INSTANCE_FORMAT:
        raise DocumentError(f"not an instance document: format is {fmt!r}")
    version = _require(data, "version", int, "document")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {version}")
    sem_tag = _require(data, "semiring", str, "document")
    try:
        sem = Semiring(sem_tag)
    except ValueError:
        raise DocumentError(f"unknown semiring {sem_tag!r}") from None

    raw_v = _require(data, "v", list, "document")
    v = tuple(_parse_entry(sem, e, "v") for e in raw_v)
    raw_ts = _require(data, "transformations", list, "document")
    if not raw_ts:
        raise DocumentError("document: transformation list is empty")
    transformations = [
        _parse_matrix(sem, t, f"transformation {i}") for i, t in enumerate(raw_ts)
    ]
    selector = _parse_matrix(sem, _require(data, "selector", list, "document"), "selector")
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise DocumentError("document: metadata must be an object")

    try:
        instance = new_instance(sem, v, transformations, selector)
    except VestError as exc:
        raise DocumentError(f"document describes an invalid instance: {exc}") from None

    for key, declared, actual in (
        ("d", data.get("d"), instance.d),
        ("h", data.get("h"), instance.h),
        ("m", data.get("m"), instance.m),
    ):
        if declared is not None and declared != actual:
            raise DocumentError(f"document declares {key}={declared} but content has {actual}")
    return InstanceDocument(instance, dict(metadata))


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def dumps_instance(doc: InstanceDocument) -> str:
    return dumps(instance_to_dict(doc))


def loads_instance(text: str) -> InstanceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return instance_from_dict(data)


def write_instance(path: str, doc: InstanceDocument) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_instance(doc))


def read_instance(path: str) -> InstanceDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_instance(fh.read())


def msequence_to_dict(result: MSequenceResult) -> dict:
    return {
        "format": MSEQUENCE_FORMAT,
        "version": FORMAT_VERSION,
        "instance": result.instance_fingerprint,
        "method": result.method,
        "values": [
            {"k": k, "m_k": str(val)} for k, val in enumerate(result.values)
        ],
    }


def msequence_from_dict(data: dict) -> MSequenceResult:
    if not isinstance(data, dict):
        raise DocumentError("document root must be a JSON object")
    fmt = _require(data, "format", str, "document")
    if fmt != MSEQUENCE_FORMAT:
        raise DocumentError(f"not a count-sequence document: format is {fmt!r}")
    version = _require(data, "version", int, "document")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {version}")
    fingerprint = _require(data, "instance", str, "document")
    method = _require(data, "method", str, "document")
    raw_values = _require(data, "values", list, "document")
    values: List[Optional[int]] = [None] * len(raw_values)
    for i, item in enumerate(raw_values):
        if not isinstance(item, dict):
            raise DocumentError(f"values[{i}]: expected an object")
        k = _require(item, "k", int, f"values[{i}]")
        raw = _require(item, "m_k", str, f"values[{i}]")
        if not 0 <= k < len(raw_values):
            raise DocumentError(f"values[{i}]: k={k} outside 0..{len(raw_values) - 1}")
        if values[k] is not None:
            raise DocumentError(f"values[{i}]: duplicate k={k}")
        try:
            values[k] = int(raw)
        except ValueError:
            raise DocumentError(f"values[{i}]: m_k {raw!r} is not a decimal integer") from None
    return MSequenceResult(fingerprint, method, tuple(values))


@dataclass(frozen=True)
class VerificationRow:
    """One length k: the sequence count, the dominating-set count, and the
    factorial-scaled expectation they must meet."""

    k: int
    m_k: int
    d_k: int
    expected: int
    passed: bool
    seconds: float


@dataclass(frozen=True)
class VerificationReport:
    vertex_count: int
    edge_count: int
    semiring: Semiring
    evaluator: str
    rows: tuple

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)


def verification_to_dict(report: VerificationReport) -> dict:
    return {
        "format": "vest-verification",
        "version": FORMAT_VERSION,
        "graph": {"n": report.vertex_count, "m": report.edge_count},
        "semiring": report.semiring.value,
        "evaluator": report.evaluator,
        "rows": [
            {
                "k": row.k,
                "m_k": str(row.m_k),
                "d_k": str(row.d_k),
                "expected": str(row.expected),
                "passed": row.passed,
                "seconds": round(row.seconds, 6),
            }
            for row in report.rows
        ],
        "all_pass": report.all_pass,
    }


def verification_to_text(report: VerificationReport) -> str:
    lines = [
        f"graph: {report.vertex_count} vertices, {report.edge_count} edges",
        f"semiring: {report.semiring.value}  evaluator: {report.evaluator}",
    ]
    for row in report.rows:
        status = "ok" if row.passed else "MISMATCH"
        lines.append(
            f"k={row.k}: M_{row.k} = {row.m_k}  D_{row.k} = {row.d_k}  "
            f"{row.k}! * D_{row.k} = {row.expected}  [{status}] ({row.seconds:.3f}s)")
    lines.append("result: " + ("all counts match" if report.all_pass else "MISMATCH FOUND"))
    return "\n".join(lines) + "\n"

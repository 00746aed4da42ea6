"""
Embedded Trees Output Formats
text, csv (pandas) and json-lines (pydantic) encoders for sequence records and
verification reports, plus the parsers that read emitted tables back.
"""

import io
import json
import re
from typing import List, Sequence

import pandas as pd

from src.models.records import SequenceRecord
from src.models.reports import VerificationReport

RECORD_COLUMNS = ["family", "n", "s", "m", "value"]
REPORT_COLUMNS = ["suite", "status", "case", "expected", "actual", "witness", "detail"]

_INTEGER = re.compile(r"-?\d+")


def _is_sequence(records: Sequence[SequenceRecord]) -> bool:
    return all(r.s is None and r.m is None and isinstance(r.value, int) for r in records)


# ---------------------------------------------------------------------- records

def records_to_text(records: Sequence[SequenceRecord]) -> str:
    """Plain sequences on one comma-separated line, tables one cell per line"""
    if _is_sequence(records):
        return ",".join(str(r.value) for r in records) + "\n"
    lines = []
    for r in records:
        fields = [f"n={r.n}"]
        if r.s is not None:
            fields.append(f"s={r.s}")
        if r.m is not None:
            fields.append("m=(" + ",".join(str(x) for x in r.m) + ")")
        fields.append(str(r.value))
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def records_to_csv(records: Sequence[SequenceRecord]) -> str:
    rows = [{
        "family": r.family,
        "n": str(r.n),
        "s": "" if r.s is None else str(r.s),
        "m": "" if r.m is None else ";".join(str(x) for x in r.m),
        "value": str(r.value),
    } for r in records]
    frame = pd.DataFrame(rows, columns=RECORD_COLUMNS)
    return frame.to_csv(index=False, lineterminator="\n")


def records_to_jsonl(records: Sequence[SequenceRecord]) -> str:
    return "".join(r.model_dump_json() + "\n" for r in records)


def _value(text: str):
    return int(text) if _INTEGER.fullmatch(text) else text


def parse_csv_records(text: str) -> List[SequenceRecord]:
    """Inverse of records_to_csv; integers stay exact because every column is read as text"""
    frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
    records = []
    for row in frame.to_dict(orient="records"):
        records.append(SequenceRecord(
            family=row["family"],
            n=int(row["n"]),
            s=int(row["s"]) if row["s"] else None,
            m=[int(x) for x in row["m"].split(";")] if row["m"] else None,
            value=_value(row["value"]),
        ))
    return records


def parse_jsonl_records(text: str) -> List[SequenceRecord]:
    return [SequenceRecord.model_validate_json(line) for line in text.splitlines() if line.strip()]


def format_records(records: Sequence[SequenceRecord], fmt: str) -> str:
    if fmt == "csv":
        return records_to_csv(records)
    if fmt == "jsonl":
        return records_to_jsonl(records)
    return records_to_text(records)


# ---------------------------------------------------------------------- reports

def _report_rows(report: VerificationReport) -> List[dict]:
    return [{
        "suite": report.suite,
        "status": case.status,
        "case": json.dumps(case.case, sort_keys=True),
        "expected": case.expected or "",
        "actual": case.actual or "",
        "witness": case.witness or "",
        "detail": case.detail or "",
    } for case in report.cases]


def format_reports(reports: Sequence[VerificationReport], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(r.model_dump_json() + "\n" for r in reports)
    if fmt == "csv":
        rows = [row for report in reports for row in _report_rows(report)]
        return pd.DataFrame(rows, columns=REPORT_COLUMNS).to_csv(index=False, lineterminator="\n")
    return "\n".join(r.to_text() for r in reports) + "\n"


def parse_jsonl_reports(text: str) -> List[VerificationReport]:
    return [VerificationReport.model_validate_json(line) for line in text.splitlines() if line.strip()]

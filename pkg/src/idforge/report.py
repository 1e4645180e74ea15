"""Rendering of report documents as JSON, markdown or CSV."""

from __future__ import annotations

import csv
import io
import json
from datetime import datetime, timezone

REPORT_VERSION = "1"
FORMATS = ("json", "markdown", "csv")


def envelope(config: dict, results: list[dict], summary: dict, timestamp: bool) -> dict:
    doc = {"version": REPORT_VERSION, "config": config, "results": results, "summary": summary}
    if timestamp:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return doc


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def table_markdown(columns: list[str], rows: list[dict]) -> str:
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    for r in rows:
        lines.append("| " + " | ".join(_cell(r.get(c)).replace("|", "\\|") for c in columns) + " |")
    return "\n".join(lines)


def table_csv(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in columns])
    return buf.getvalue()


def render(doc, fmt: str, columns: list[str], title: str = "",
           extra_markdown: str = "") -> str:
    """``doc`` is an envelope dict or, for listings, a plain list of rows."""
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    rows = doc if isinstance(doc, list) else doc["results"]
    if fmt == "csv":
        return table_csv(columns, rows)
    parts = []
    if title:
        parts.append(f"# {title}")
    if isinstance(doc, dict):
        meta = {k: doc[k] for k in ("version", "generated_at") if k in doc}
        parts.append("\n".join(f"- {k}: {v}" for k, v in meta.items()))
        parts.append("Config: `" + _cell(doc["config"]) + "`")
    parts.append(table_markdown(columns, rows))
    if extra_markdown:
        parts.append(extra_markdown)
    return "\n\n".join(p for p in parts if p) + "\n"

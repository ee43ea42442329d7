"""Line-oriented report records.

A record is ``key=value`` pairs on one line.  The keys ``kind, status,
order, witness_count, trace, provenance`` always come first and in that
order (``-`` when a key does not apply); any further keys follow in the
order they were given.  Values with spaces or quotes are double-quoted
with backslash escapes.  ``json_like`` renders the same data as a nested
bracketed form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

FIXED_KEYS = ("kind", "status", "order", "witness_count", "trace", "provenance")
_BARE = re.compile(r"[A-Za-z0-9_.:+\-/^()',<>*|]+")


@dataclass
class Record:
    kind: str
    fields: dict[str, object] = field(default_factory=dict)
    children: list["Record"] = field(default_factory=list)

    def get(self, key, default=None):
        return self.kind if key == "kind" else self.fields.get(key, default)


def _value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        v = "+".join(str(x) for x in v) if v else "-"
    s = str(v)
    if s and _BARE.fullmatch(s) and "=" not in s:
        return s
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _keys(rec: Record) -> list[str]:
    extra = [k for k in rec.fields if k not in FIXED_KEYS]
    return list(FIXED_KEYS) + extra


def format_record(rec: Record) -> str:
    parts = []
    for k in _keys(rec):
        parts.append(f"{k}={_value(rec.get(k))}")
    return " ".join(parts)


def format_records(recs: list[Record]) -> str:
    """Flat form: children are emitted as their own lines after the parent."""
    out = []
    for r in recs:
        out.append(format_record(r))
        out.extend(format_record(c) for c in r.children)
    return "\n".join(out) + ("\n" if out else "")


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    return '"' + str(v).replace("\\", "\\\\").replace('"', '\\"') + '"'


def json_like(rec: Record, indent: int = 0) -> str:
    pad = "  " * indent
    lines = [pad + "{"]
    items = [f'{pad}  {k}: {_json_value(rec.get(k))}' for k in _keys(rec)]
    if rec.children:
        kids = ",\n".join(json_like(c, indent + 2) for c in rec.children)
        items.append(f"{pad}  children: [\n{kids}\n{pad}  ]")
    lines.append(",\n".join(items))
    lines.append(pad + "}")
    return "\n".join(lines)


def json_like_all(recs: list[Record]) -> str:
    return "[\n" + ",\n".join(json_like(r, 1) for r in recs) + "\n]\n"


def parse_record(line: str) -> dict[str, str]:
    """Inverse of format_record for a single line (values as strings)."""
    out = {}
    pos = 0
    line = line.strip()
    while pos < len(line):
        m = re.compile(r"(\w+)=").match(line, pos)
        if not m:
            raise ValueError(f"bad record near {line[pos:pos + 20]!r}")
        key, pos = m.group(1), m.end()
        if pos < len(line) and line[pos] == '"':
            pos += 1
            buf = []
            while line[pos] != '"':
                if line[pos] == "\\":
                    pos += 1
                buf.append(line[pos])
                pos += 1
            pos += 1
            out[key] = "".join(buf)
        else:
            end = line.find(" ", pos)
            end = len(line) if end < 0 else end
            out[key] = line[pos:end]
            pos = end
        while pos < len(line) and line[pos] == " ":
            pos += 1
    return out

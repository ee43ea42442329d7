"""Line-oriented matrix generator files.

Format::

    matrix-group p=3 f=1 d=4 order=160 name=E:5
    <d*d entries of the first matrix, row by row, space separated>
    ...
    sha256 <hex digest of all preceding lines, newline terminated>

Entries are integers for prime fields and comma-separated coefficient
lists (constant term first) for extension fields.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ParseError
from .fields import FieldSpec, field


@dataclass
class MatrixData:
    field: FieldSpec
    d: int
    matrices: list[np.ndarray]
    meta: dict[str, str]

    @property
    def order(self) -> int | None:
        return int(self.meta["order"]) if "order" in self.meta else None

    @property
    def name(self) -> str:
        return self.meta.get("name", "")


def _digest(lines: list[str]) -> str:
    return hashlib.sha256("".join(line + "\n" for line in lines).encode()).hexdigest()


def format_matrices(F: FieldSpec, d: int, mats, **meta) -> str:
    head = f"matrix-group p={F.p} f={F.f} d={d}"
    for k, v in meta.items():
        head += f" {k}={v}"
    lines = [head]
    for M in mats:
        lines.append(" ".join(F.element_str(int(x)) for x in np.asarray(M).reshape(-1)))
    lines.append(f"sha256 {_digest(lines)}")
    return "\n".join(lines) + "\n"


def parse_matrices(text: str) -> MatrixData:
    lines = [ln.rstrip("\n") for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) < 2:
        raise ParseError("matrix file too short", line=1)
    head = lines[0].split()
    if not head or head[0] != "matrix-group":
        raise ParseError("expected 'matrix-group' header", line=1, column=1)
    meta = {}
    for tok in head[1:]:
        if "=" not in tok:
            raise ParseError(f"bad header token {tok!r}", line=1)
        k, v = tok.split("=", 1)
        meta[k] = v
    try:
        p, f, d = int(meta.pop("p")), int(meta.pop("f")), int(meta.pop("d"))
    except (KeyError, ValueError) as exc:
        raise ParseError("header needs integer p=, f=, d=", line=1) from exc
    trailer = lines[-1].split()
    if len(trailer) != 2 or trailer[0] != "sha256":
        raise ParseError("missing checksum trailer", line=len(lines))
    if trailer[1] != _digest(lines[:-1]):
        raise ParseError("checksum mismatch: data file is corrupt", line=len(lines))
    F = field(p, f)
    mats = []
    for ln, raw in enumerate(lines[1:-1], start=2):
        toks = raw.split()
        if len(toks) != d * d:
            raise ParseError(f"expected {d * d} entries, got {len(toks)}", line=ln)
        try:
            vals = [F.parse_element(t) for t in toks]
        except ValueError as exc:
            raise ParseError(str(exc), line=ln) from exc
        mats.append(np.array(vals, dtype=np.int64).reshape(d, d))
    return MatrixData(F, d, mats, meta)


def load_matrices(path) -> MatrixData:
    return parse_matrices(Path(path).read_text())


def load_shipped(name: str) -> MatrixData:
    """A data file shipped inside the package (``derivant/data``)."""
    try:
        text = resources.files("derivant").joinpath("data").joinpath(name).read_text()
    except FileNotFoundError as exc:
        raise FileNotFoundError(f"shipped data file {name!r} is missing") from exc
    return parse_matrices(text)

"""Text / JSON encodings of weaving diagrams and rendering to ASCII or SVG.

Text format: rows of '0'/'1' joined by '/', e.g. ``01/10``.  JSON documents
look like ``{"format": "weave/1", "m": 2, "n": 2, "rows": ["01", "10"]}``
with optional ``name`` and ``metadata``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .core import CrossingMatrix, MatrixFormatError

FORMAT_TAG = "weave/1"


@dataclass(frozen=True)
class WeaveDocument:
    matrix: CrossingMatrix
    name: str | None = None
    metadata: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        d: dict[str, Any] = {
            "format": FORMAT_TAG,
            "m": self.matrix.m,
            "n": self.matrix.n,
            "rows": [format(r, f"0{self.matrix.n}b") if self.matrix.n else "" for r in self.matrix.rows],
        }
        if self.name is not None:
            d["name"] = self.name
        if self.metadata:
            d["metadata"] = self.metadata
        return d


def parse_matrix(s: str) -> CrossingMatrix:
    s = s.strip()
    if not s:
        raise MatrixFormatError("empty matrix string")
    parts = s.split("/")
    width = len(parts[0])
    raw = []
    pos = 0
    for i, part in enumerate(parts, start=1):
        if len(part) != width:
            raise MatrixFormatError(
                f"row {i} has length {len(part)}, expected {width} (at character {pos})"
            )
        for j, ch in enumerate(part):
            if ch not in "01":
                raise MatrixFormatError(f"bad character {ch!r} at row {i}, column {j + 1} (character {pos + j})")
        raw.append([int(ch) for ch in part])
        pos += len(part) + 1
    if width == 0:
        raise MatrixFormatError("rows must not be empty")
    return CrossingMatrix.from_lists(raw)


def parse_text(s: str) -> WeaveDocument:
    return WeaveDocument(parse_matrix(s))


def serialize_text(doc: WeaveDocument | CrossingMatrix) -> str:
    M = doc.matrix if isinstance(doc, WeaveDocument) else doc
    return M.text


def document_from_json(d: dict) -> WeaveDocument:
    if d.get("format") != FORMAT_TAG:
        raise MatrixFormatError(f"unsupported format {d.get('format')!r}")
    m, n, rows = d["m"], d["n"], d["rows"]
    if len(rows) != m:
        raise MatrixFormatError(f"expected {m} rows, got {len(rows)}")
    raw = []
    for i, row in enumerate(rows, start=1):
        if len(row) != n or any(ch not in "01" for ch in row):
            raise MatrixFormatError(f"row {i} is not a {n}-character 0/1 string")
        raw.append([int(ch) for ch in row])
    return WeaveDocument(CrossingMatrix.from_lists(raw, n=n), d.get("name"), d.get("metadata") or {})


def dumps(doc: WeaveDocument) -> str:
    return json.dumps(doc.to_json(), sort_keys=True)


def loads(s: str) -> WeaveDocument:
    return document_from_json(json.loads(s))


def render(doc: WeaveDocument | CrossingMatrix, style: str = "ascii", cell: int = 20) -> str:
    """ASCII ('#' where the warp is on top) or SVG (black square where the warp is on top)."""
    M = doc.matrix if isinstance(doc, WeaveDocument) else doc
    if style == "ascii":
        return "\n".join("".join("#" if M.entry(i, j) else "." for j in range(1, M.n + 1))
                         for i in range(1, M.m + 1))
    if style != "svg":
        raise ValueError(f"unknown style {style!r}")
    # same layout as the ASCII form: one row per warp
    w, h = M.n * cell, M.m * cell
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w + 2}" height="{h + 2}" '
        f'viewBox="-1 -1 {w + 2} {h + 2}">',
        f'<rect class="background" x="0" y="0" width="{w}" height="{h}" fill="white"/>',
    ]
    for i in range(1, M.m + 1):
        for j in range(1, M.n + 1):
            if M.entry(i, j):
                out.append(
                    f'<rect class="over" x="{(j - 1) * cell}" y="{(i - 1) * cell}" '
                    f'width="{cell}" height="{cell}" fill="black"/>'
                )
    out.append(
        f'<rect class="torus" x="0" y="0" width="{w}" height="{h}" fill="none" '
        'stroke="gray" stroke-dasharray="4 2"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Text format for sets of scaled integer vectors.

A file holds one or more sections. Each section starts with a header line
``dim=24 denom_sq=8 count=N`` (plus optional ``key=value`` tokens such as
``role=anchor`` or ``levels=1/2,1/3``) followed by ``N`` rows of
space-separated integers. Member rows are written sorted so that output
is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple

import numpy as np

from .codes import DerivedCode
from .leech import DENOM_SQ


class VectorFileError(ValueError):
    pass


@dataclass
class Section:
    rows: np.ndarray
    dim: int
    denom_sq: int
    attrs: Dict[str, str] = field(default_factory=dict)

    @property
    def role(self) -> str:
        return self.attrs.get("role", "member")


def _sorted_rows(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows
    return rows[np.lexsort(rows.T[::-1])]


def format_section(rows, denom_sq: int = DENOM_SQ, sort: bool = True, **attrs) -> str:
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise VectorFileError("rows must be a 2-d array")
    if sort:
        rows = _sorted_rows(rows)
    head = f"dim={rows.shape[1]} denom_sq={denom_sq} count={len(rows)}"
    for k, v in attrs.items():
        head += f" {k}={v}"
    body = "".join(" ".join(map(str, r)) + "\n" for r in rows.tolist())
    return head + "\n" + body


def parse_sections(text: str) -> List[Section]:
    lines = text.splitlines()
    out, i = [], 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        try:
            attrs = dict(tok.split("=", 1) for tok in lines[i].split())
            dim, dsq, count = int(attrs.pop("dim")), int(attrs.pop("denom_sq")), int(attrs.pop("count"))
        except (KeyError, ValueError):
            raise VectorFileError(f"line {i + 1}: bad section header {lines[i]!r}") from None
        body = lines[i + 1:i + 1 + count]
        if len(body) != count:
            raise VectorFileError(f"line {i + 1}: expected {count} rows, found {len(body)}")
        try:
            rows = np.array([[int(x) for x in ln.split()] for ln in body], dtype=np.int64).reshape(count, dim)
        except ValueError:
            raise VectorFileError(f"section at line {i + 1}: rows are not {dim} integers") from None
        out.append(Section(rows, dim, dsq, attrs))
        i += 1 + count
    if not out:
        raise VectorFileError("no vector sections found")
    return out


def format_code(code: DerivedCode) -> str:
    text = format_section(code.members)
    if len(code.anchors):
        levels = ",".join(str(t) for t in code.level_params)
        # anchor order matters: keep it
        text += format_section(code.anchors, sort=False, role="anchor", levels=levels)
    return text


def parse_code(text: str) -> DerivedCode:
    secs = parse_sections(text)
    members = [s for s in secs if s.role == "member"]
    anchors = [s for s in secs if s.role == "anchor"]
    if len(members) != 1 or len(anchors) > 1:
        raise VectorFileError("expected one member section and at most one anchor section")
    m = members[0]
    if m.denom_sq != DENOM_SQ or m.dim != 24:
        raise VectorFileError("only dim=24 denom_sq=8 vector sets are supported")
    if anchors:
        a = anchors[0]
        levels = tuple(Fraction(x) for x in a.attrs.get("levels", "").split(",") if x)
        code = DerivedCode(m.rows.astype(np.int8), a.rows.astype(np.int8), levels)
    else:
        code = DerivedCode(m.rows.astype(np.int8))
    code.validate()
    return code


def write_code(path, code: DerivedCode) -> None:
    Path(path).write_text(format_code(code))


def read_code(path) -> DerivedCode:
    return parse_code(Path(path).read_text())

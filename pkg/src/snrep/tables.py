"""Representation tables: generation and JSON / CSV round-tripping.

JSON layout::

    {"n": 3, "rep": "standard",
     "elements": [{"k": 1, "one_line": [1, 2, 3], "matrix": [[1, 0], [0, 1]]}, ...]}

CSV layout: header ``k,one_line,entries``; ``one_line`` and the row-major
``entries`` are space-joined integers.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from math import factorial, isqrt
from typing import Iterable, Optional

from .exactmat import IntMatrix
from .perm import Permutation, unrank
from .standard import RepKind, rep_matrix


@dataclass(frozen=True)
class TableRow:
    k: int
    perm: Permutation
    matrix: IntMatrix


def generate(n: int, kind: RepKind, ks: Optional[Iterable[int]] = None) -> list[TableRow]:
    kind = RepKind(kind)
    if ks is None:
        ks = range(1, factorial(n) + 1)
    rows = []
    for k in ks:
        p = unrank(n, k)
        rows.append(TableRow(k, p, rep_matrix(kind, p)))
    return rows


def to_json(n: int, kind: RepKind, rows: list[TableRow]) -> str:
    doc = {
        "n": n,
        "rep": RepKind(kind).value,
        "elements": [
            {"k": r.k, "one_line": list(r.perm.one_line), "matrix": r.matrix.to_lists()}
            for r in rows
        ],
    }
    return json.dumps(doc) + "\n"


def from_json(text: str) -> tuple[int, RepKind, list[TableRow]]:
    doc = json.loads(text)
    rows = [
        TableRow(e["k"], Permutation.from_one_line(e["one_line"]),
                 IntMatrix.from_rows(e["matrix"]))
        for e in doc["elements"]
    ]
    return doc["n"], RepKind(doc["rep"]), rows


def to_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "one_line", "entries"])
    for r in rows:
        w.writerow([r.k, " ".join(map(str, r.perm.one_line)),
                    " ".join(map(str, r.matrix.entries))])
    return buf.getvalue()


def from_csv(text: str) -> list[TableRow]:
    """Parse :func:`to_csv` output; matrices are square so the side is sqrt(len)."""
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        one_line = [int(v) for v in rec["one_line"].split()]
        entries = tuple(int(v) for v in rec["entries"].split())
        side = isqrt(len(entries))
        rows.append(TableRow(int(rec["k"]), Permutation.from_one_line(one_line),
                             IntMatrix(side, side, entries)))
    return rows

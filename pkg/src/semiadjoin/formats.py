"""JSON, CSV and DOT encodings.

Output is canonical: fixed field order, one table row per line, no
timestamps, so identical inputs give byte-identical text.
"""

from __future__ import annotations

import csv
import io
import json

from .iterated import IndexedSemigroup
from .order import TotalOrder
from .report import SemigroupError
from .semigroup import DEFAULT_MAX_ELEMENTS, FiniteSemigroup


class FormatError(SemigroupError):
    """Input text is not a valid document of the expected kind."""


def _dump_doc(fields: list) -> str:
    lines = []
    for key, value in fields:
        if key == "table":
            rows = ",\n".join("    " + json.dumps([int(x) for x in row]) for row in value)
            lines.append(f'  "table": [\n{rows}\n  ]')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def semigroup_to_json(S: FiniteSemigroup) -> str:
    return _dump_doc([("elements", list(S.labels)), ("table", S.table.tolist())])


def indexed_to_json(S: IndexedSemigroup) -> str:
    return _dump_doc(
        [
            ("elements", list(S.semigroup.labels)),
            ("table", S.semigroup.table.tolist()),
            ("arity", S.arity),
            ("bounds", [list(b) for b in S.bounds]),
        ]
    )


def order_to_json(order: TotalOrder) -> str:
    return _dump_doc([("elements", list(order.chain))])


def load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict) or "elements" not in doc:
        raise FormatError('expected a JSON object with an "elements" field')
    if not isinstance(doc["elements"], list) or not all(isinstance(x, str) for x in doc["elements"]):
        raise FormatError('"elements" must be a list of label strings')
    return doc


def semigroup_from_doc(doc: dict, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteSemigroup:
    table = doc.get("table")
    if not isinstance(table, list) or not all(
        isinstance(row, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in row)
        for row in table
    ):
        raise FormatError('"table" must be a list of rows of integer indices')
    if any(len(row) != len(doc["elements"]) for row in table):
        raise FormatError('"table" rows must have one entry per element')
    return FiniteSemigroup(doc["elements"], table, max_elements=max_elements)


def semigroup_from_json(text: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteSemigroup:
    return semigroup_from_doc(load(text), max_elements)


def indexed_from_doc(doc: dict, max_elements: int = DEFAULT_MAX_ELEMENTS) -> IndexedSemigroup:
    if "arity" not in doc or "bounds" not in doc:
        raise FormatError('indexed semigroups need "arity" and "bounds" fields')
    try:
        bounds = tuple((int(lo), int(hi)) for lo, hi in doc["bounds"])
        arity = int(doc["arity"])
    except (TypeError, ValueError):
        raise FormatError('"bounds" must be a list of [lo, hi] pairs and "arity" an integer') from None
    return IndexedSemigroup(semigroup_from_doc(doc, max_elements), arity, bounds)


def indexed_from_json(text: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> IndexedSemigroup:
    return indexed_from_doc(load(text), max_elements)


def order_from_json(text: str) -> TotalOrder:
    return TotalOrder.from_chain(load(text)["elements"])


def relation_from_doc(doc: dict) -> tuple:
    """``(elements, pairs)``; a document without pairs is read as a chain."""
    if "pairs" not in doc:
        return doc["elements"], TotalOrder.from_chain(doc["elements"]).pairs()
    pairs = doc["pairs"]
    if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise FormatError('"pairs" must be a list of [a, b] label pairs')
    return doc["elements"], [tuple(p) for p in pairs]


def semigroup_to_csv(S: FiniteSemigroup) -> str:
    """Header of labels, then one row per element holding product labels."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["*"] + list(S.labels))
    for i, label in enumerate(S.labels):
        w.writerow([label] + [S.labels[k] for k in S.table[i]])
    return buf.getvalue()


def semigroup_from_csv(text: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteSemigroup:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or len(rows[0]) < 2:
        raise FormatError("CSV needs a header row of labels")
    labels = rows[0][1:]
    index = {label: i for i, label in enumerate(labels)}
    body = rows[1:]
    if len(body) != len(labels) or [r[0] if r else None for r in body] != labels:
        raise FormatError("CSV rows must be headed by the labels in header order")
    try:
        table = [[index[x] for x in r[1:]] for r in body]
    except KeyError as exc:
        raise FormatError(f"unknown label {exc.args[0]!r} in CSV table") from None
    return FiniteSemigroup(labels, table, max_elements=max_elements)


def order_to_dot(order: TotalOrder, name: str = "order") -> str:
    chain = order.chain
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=LR;"]
    lines += [f"  {json.dumps(x)};" for x in chain]
    lines += [f"  {json.dumps(a)} -> {json.dumps(b)};" for a, b in zip(chain, chain[1:])]
    lines.append("}")
    return "\n".join(lines) + "\n"

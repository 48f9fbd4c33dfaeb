"""JSON documents for algebras and spaces, and DOT rendering."""

from __future__ import annotations

import json
import re
from typing import Any

from .algebra import OminusAlgebra
from .order import DistLattice, Poset, bits
from .space import OminusSpace


class ParseError(ValueError):
    """A document that cannot be read; ``field`` and ``line`` locate the problem."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


# -- reading --------------------------------------------------------------------

def _field_line(text: str, field: str) -> int | None:
    m = re.search(r'"%s"\s*:' % re.escape(field), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", line=1)
    return doc


def document_kind(doc: dict) -> str:
    if "ominus" in doc:
        return "algebra"
    if "plus" in doc or "i" in doc:
        return "space"
    raise ParseError("cannot tell the document kind: expected 'ominus' or 'plus'")


def _int_list(value: Any, field: str, text: str, n: int | None = None, width: int | None = None) -> list:
    err = lambda msg: ParseError(msg, field, _field_line(text, field))
    if not isinstance(value, list):
        raise err("expected a list")
    for k, item in enumerate(value):
        entries = item if width is not None else [item]
        if width is not None and (not isinstance(item, list) or len(item) != width):
            raise err(f"entry {k} must be a list of {width} integers")
        for v in entries:
            if not isinstance(v, int) or isinstance(v, bool):
                raise err(f"entry {k} contains a non-integer")
            if n is not None and not 0 <= v < n:
                raise err(f"entry {k} refers to index {v} outside 0..{n - 1}")
    return value


def _labels(doc: dict, key: str, n: int | None, text: str) -> list[str] | None:
    labels = doc.get(key)
    if labels is None:
        return None
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise ParseError("expected a list of strings", key, _field_line(text, key))
    if len(set(labels)) != len(labels):
        raise ParseError("labels must be distinct", key, _field_line(text, key))
    if n is not None and len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}", key, _field_line(text, key))
    return labels


def _poset(doc: dict, n: int, labels, text: str) -> Poset:
    """``leq`` as a pair list (closed reflexively and transitively) or a boolean matrix."""
    if "leq" not in doc:
        raise ParseError("missing field", "leq")
    leq = doc["leq"]
    line = _field_line(text, "leq")
    if isinstance(leq, list) and leq and all(isinstance(r, list) and r and all(isinstance(v, bool) for v in r)
                                             for r in leq):
        if len(leq) != n or any(len(r) != n for r in leq):
            raise ParseError(f"matrix must be {n}x{n}", "leq", line)
        return Poset.from_matrix(leq, labels)
    pairs = _int_list(leq, "leq", text, n, width=2)
    up = [1 << a for a in range(n)]
    for a, b in pairs:
        up[a] |= 1 << b
    changed = True
    while changed:
        changed = False
        for a in range(n):
            new = up[a]
            for b in bits(up[a]):
                new |= up[b]
            if new != up[a]:
                up[a], changed = new, True
    return Poset(n, up, labels)


def parse_algebra(doc: dict, text: str = "") -> tuple[DistLattice, list[list[int]], str]:
    """Lattice, table and name; structural validation is left to the caller."""
    if "ominus" not in doc:
        raise ParseError("missing field", "ominus")
    table = doc["ominus"]
    if not isinstance(table, list) or not table:
        raise ParseError("expected a non-empty square table", "ominus", _field_line(text, "ominus"))
    labels = _labels(doc, "elements", None, text)
    n = len(labels) if labels is not None else len(table)
    if len(table) != n:
        raise ParseError(f"expected {n} rows, got {len(table)}", "ominus", _field_line(text, "ominus"))
    _int_list(table, "ominus", text, n, width=n)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("expected a string", "name", _field_line(text, "name"))
    return DistLattice(_poset(doc, n, labels, text)), table, name


def parse_space(doc: dict, text: str = "") -> OminusSpace:
    labels = _labels(doc, "points", None, text)
    if "i" not in doc:
        raise ParseError("missing field", "i")
    n = len(labels) if labels is not None else len(doc["i"])
    i = _int_list(doc["i"], "i", text, n)
    if len(i) != n:
        raise ParseError(f"expected {n} entries, got {len(i)}", "i", _field_line(text, "i"))
    ops = {}
    for key in ("plus", "star"):
        triples = _int_list(doc.get(key, []), key, text, n, width=3)
        table = {}
        for x, y, z in triples:
            if (x, y) in table:
                raise ParseError(f"pair ({x}, {y}) listed twice", key, _field_line(text, key))
            table[(x, y)] = z
        ops[key] = table
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("expected a string", "name", _field_line(text, "name"))
    return OminusSpace(_poset(doc, n, labels, text), i, ops["plus"], ops["star"], name)


# -- writing --------------------------------------------------------------------

def dumps(doc: dict) -> str:
    """Top-level keys one per line, values inline; stable across runs."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in doc.items())
    return "{\n" + body + "\n}\n"


def algebra_document(A: OminusAlgebra) -> dict:
    return {
        "name": A.name,
        "elements": list(A.labels),
        "leq": [list(p) for p in A.lattice.poset.pairs()],
        "ominus": [list(row) for row in A.table],
    }


def space_document(S: OminusSpace) -> dict:
    return {
        "name": S.name,
        "points": list(S.labels),
        "leq": [list(p) for p in S.X.pairs()],
        "i": list(S.i),
        "plus": [[x, y, z] for (x, y), z in sorted(S.plus.items())],
        "star": [[x, y, z] for (x, y), z in sorted(S.star.items())],
    }


# -- DOT ----------------------------------------------------------------------

def _quote(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def hasse_dot(P: Poset, name: str = "hasse") -> list[str]:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(P.size):
        lines.append(f"  n{x} [label={_quote(P.labels[x])}];")
    for a, b in P.covers:
        lines.append(f"  n{a} -> n{b};")
    return lines


def algebra_dot(A: OminusAlgebra) -> str:
    lines = hasse_dot(A.lattice.poset, A.name or "algebra")
    labels = A.labels
    lines.append("  // (-) table, rows a, columns b")
    for a in range(A.size):
        lines.append(f"  // {labels[a]}: " + " ".join(labels[v] for v in A.table[a]))
    lines.append("}")
    return "\n".join(lines) + "\n"


def space_dot(S: OminusSpace) -> str:
    lines = hasse_dot(S.X, S.name or "space")
    for x in range(S.size):
        y = S.i[x]
        if y == x:
            lines.append(f"  n{x} -> n{x} [style=dashed, arrowhead=none, label=\"i\"];")
        elif x < y and S.i[y] == x:
            lines.append(f"  n{x} -> n{y} [style=dashed, dir=both, constraint=false, label=\"i\"];")
        elif S.i[y] != x:
            lines.append(f"  n{x} -> n{y} [style=dashed, constraint=false, label=\"i\"];")
    L = S.labels
    lines.append("  // plus: x + y = z")
    lines += [f"  //   {L[x]} + {L[y]} = {L[z]}" for (x, y), z in sorted(S.plus.items())]
    lines.append("  // star: x * y = z")
    lines += [f"  //   {L[x]} * {L[y]} = {L[z]}" for (x, y), z in sorted(S.star.items())]
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Text-grid and JSON formats for rectangles, witnesses, planes and verdicts."""

from __future__ import annotations

import json
from typing import Any, Optional

from .errors import ParseError
from .latin import LatinRectangle, SubrectangleWitness


def to_text(R: LatinRectangle) -> str:
    """Whitespace-separated integers, one row per line, newline-terminated."""
    return "\n".join(" ".join(str(s) for s in row) for row in R.tolist()) + "\n"


def parse_text_grid(text: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ParseError("empty grid")
    return rows


def from_text(text: str) -> LatinRectangle:
    return LatinRectangle(parse_text_grid(text))


def rectangle_dict(R: LatinRectangle) -> dict[str, Any]:
    return {"rows": R.rows, "cols": R.cols, "cells": R.tolist()}


def to_json(R: LatinRectangle) -> str:
    return json.dumps(rectangle_dict(R)) + "\n"


def parse_json_grid(text: str) -> list[list[int]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"rows", "cols", "cells"} <= obj.keys():
        raise ParseError('rectangle JSON needs "rows", "cols" and "cells"')
    cells = obj["cells"]
    if not isinstance(cells, list) or len(cells) != obj["rows"] or any(
        not isinstance(r, list) or len(r) != obj["cols"] for r in cells
    ):
        raise ParseError("cells do not match the declared rows/cols")
    return cells


def from_json(text: str) -> LatinRectangle:
    return LatinRectangle(parse_json_grid(text))


def parse_grid(text: str) -> list[list[int]]:
    """Raw grid from either format (JSON when the text starts with '{')."""
    if text.lstrip().startswith("{"):
        return parse_json_grid(text)
    return parse_text_grid(text)


def load_rectangle(text: str) -> LatinRectangle:
    return LatinRectangle(parse_grid(text))


def witness_dict(w: SubrectangleWitness) -> dict[str, Any]:
    return {"rows": list(w.rows), "cols": list(w.cols), "orientation": w.orientation}


def witness_to_json(w: SubrectangleWitness) -> str:
    return json.dumps(witness_dict(w)) + "\n"


def witness_from_json(text: str) -> SubrectangleWitness:
    obj = json.loads(text)
    return SubrectangleWitness(tuple(obj["rows"]), tuple(obj["cols"]), obj.get("orientation", "ab"))


def plane_dict(P, D=None) -> dict[str, Any]:
    return {
        "q": P.order,
        "modulus_poly": list(D.cubic_modulus) if D is not None else [],
        "D": list(D.residues) if D is not None else [],
        "lines": [list(ln) for ln in P.lines],
    }


def plane_to_json(P, D=None) -> str:
    return json.dumps(plane_dict(P, D)) + "\n"


def decision_dict(dec) -> dict[str, Any]:
    cert: Optional[dict] = rectangle_dict(dec.certificate) if dec.certificate is not None else None
    return {"arrows": dec.arrows, "certificate": cert, "nodes": dec.nodes_explored, "ms": round(dec.ms, 3)}


def decision_to_json(dec) -> str:
    return json.dumps(decision_dict(dec)) + "\n"


def ar_result_dict(res) -> dict[str, Any]:
    return {
        "kind": res.kind,
        "a": res.a,
        "b": res.b,
        "value": res.value,
        "witness": list(res.witness_host) if res.witness_host else None,
        "complete": res.complete,
        "refuted": [
            {"m": h.m, "n": h.n, "reason": h.reason, "certificate": h.certificate.tolist()}
            for h in res.refuted_hosts
        ],
        "unknown": [list(h) for h in res.unknown_hosts],
        "nodes": res.nodes,
    }


def ar_result_to_json(res) -> str:
    return json.dumps(ar_result_dict(res)) + "\n"

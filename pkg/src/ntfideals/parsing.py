"""Text and JSON formats for ideals and hypergraphs."""

from __future__ import annotations

import json
import os
import re

from .hypergraph import Hypergraph
from .monomial import InputError, MonomialIdeal, parse_monomial

_HEADER = re.compile(r"\s*vars\s*=\s*(\d+)\s*;?")
_INDEX = re.compile(r"x(\d+)")


def parse_ideal_text(text: str) -> MonomialIdeal:
    """``vars=3; x2^4, x1*x2^3`` (header optional: then ``n`` is the largest index used)."""
    m = _HEADER.match(text)
    if m:
        n = int(m.group(1))
        body, offset = text[m.end():], m.end()
    else:
        indices = [int(i) for i in _INDEX.findall(text)]
        if not indices:
            raise InputError("no header and no variables: cannot tell the number of variables")
        n = max(indices)
        body, offset = text, 0
    if n < 1:
        raise InputError("vars must be positive")
    gens = []
    pos = offset
    if body.strip():
        for piece in body.split(","):
            if not piece.strip():
                raise InputError(f"empty generator at position {pos}")
            gens.append(parse_monomial(piece, n, pos))
            pos += len(piece) + 1
    return MonomialIdeal(n, gens)


def parse_ideal_json(data) -> MonomialIdeal:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON at position {exc.pos}: {exc.msg}") from None
    if not isinstance(data, dict) or "vars" not in data or "gens" not in data:
        raise InputError('expected an object with "vars" and "gens"')
    n = data["vars"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError('"vars" must be a positive integer')
    gens = []
    for k, g in enumerate(data["gens"]):
        if not isinstance(g, list) or len(g) != n:
            raise InputError(f"generator {k} must be a list of {n} exponents")
        if any(not isinstance(a, int) or isinstance(a, bool) or a < 0 for a in g):
            raise InputError(f"generator {k} has an exponent that is not a non-negative integer")
        gens.append(tuple(g))
    return MonomialIdeal(n, gens)


def _read_source(source: str) -> str:
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def parse_ideal(source: str) -> MonomialIdeal:
    """An ideal from text, JSON, or the path of a file holding either."""
    text = _read_source(source).strip()
    if text.startswith("{"):
        return parse_ideal_json(text)
    return parse_ideal_text(text)


def format_ideal(ideal: MonomialIdeal) -> str:
    return ideal.to_text(with_header=True)


def parse_hypergraph(source: str) -> Hypergraph:
    """JSON ``{"vertices": 5, "edges": [[1, 2], ...]}`` or a file holding it; ``C<k>`` gives a cycle."""
    text = _read_source(source).strip()
    m = re.fullmatch(r"C(\d+)", text)
    if m:
        k = int(m.group(1))
        if k < 3:
            raise InputError("cycles need at least 3 vertices")
        return Hypergraph.cycle(k)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at position {exc.pos}: {exc.msg}") from None
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise InputError('expected an object with "vertices" and "edges"')
    n = data["vertices"]
    if not isinstance(n, int) or n < 1:
        raise InputError('"vertices" must be a positive integer')
    edges = data["edges"]
    if not isinstance(edges, list) or any(not isinstance(e, list) for e in edges):
        raise InputError('"edges" must be a list of vertex lists')
    return Hypergraph(n, tuple(tuple(e) for e in edges))

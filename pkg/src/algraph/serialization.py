"""JSON documents for algebras and graphs.

Rationals are serialized as integers or "p/q" strings; floating-point
numbers are rejected to preserve exactness.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import Algebra
from .catalog import antisymmetric_completion
from .errors import ParseError
from .graphs import Arrow, Colour3, Digraph


def parse_coeff(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: cannot parse coefficient {value!r}") from exc
    if isinstance(value, float):
        raise ParseError(f"{where}: floating-point coefficients are not allowed; use \"p/q\"")
    raise ParseError(f"{where}: coefficient must be an integer or a \"p/q\" string")


def format_coeff(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _expect(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"{where}: field {key!r} has the wrong type")
    return value


def document_to_algebra(doc: dict) -> Algebra:
    """Parse an algebra document {dim, basis, products, lie_complete?}."""
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object")
    dim = _expect(doc, "dim", int, "algebra")
    basis = _expect(doc, "basis", list, "algebra")
    if len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise ParseError("algebra: 'basis' must list exactly 'dim' label strings")
    if len(set(basis)) != dim:
        raise ParseError("algebra: duplicate basis labels")
    index = {b: i + 1 for i, b in enumerate(basis)}
    entries = _expect(doc, "products", list, "algebra")
    law = []
    seen = set()
    for pos, entry in enumerate(entries):
        where = f"products[{pos}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: must be an object")
        left = _expect(entry, "left", str, where)
        right = _expect(entry, "right", str, where)
        if left not in index or right not in index:
            raise ParseError(f"{where}: unknown basis label")
        if (left, right) in seen:
            raise ParseError(f"{where}: duplicate product for ({left}, {right})")
        seen.add((left, right))
        coeffs: dict[int, Fraction] = {}
        for tpos, term in enumerate(_expect(entry, "result", list, where)):
            twhere = f"{where}.result[{tpos}]"
            if not isinstance(term, dict):
                raise ParseError(f"{twhere}: must be an object")
            target = _expect(term, "basis", str, twhere)
            if target not in index:
                raise ParseError(f"{twhere}: unknown basis label {target!r}")
            coeffs[index[target]] = coeffs.get(index[target], Fraction(0)) \
                + parse_coeff(term.get("coeff", 1), twhere)
        law.append((index[left], index[right], coeffs))
    if doc.get("lie_complete"):
        law = antisymmetric_completion(dim, law)
    products = [(i - 1, j - 1, {k - 1: c for k, c in coeffs.items()})
                for (i, j, coeffs) in law]
    try:
        return Algebra.from_products(dim, products, labels=basis)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def algebra_to_document(A: Algebra) -> dict:
    products = []
    for (i, j) in sorted(A.constants):
        coeffs = A.constants[(i, j)]
        products.append({
            "left": A.basis_labels[i],
            "right": A.basis_labels[j],
            "result": [
                {"basis": A.basis_labels[k], "coeff": format_coeff(c)}
                for k, c in enumerate(coeffs) if c != 0],
        })
    return {"dim": A.dim, "basis": list(A.basis_labels), "products": products}


def document_to_graph(doc: dict):
    """Parse a graph document {vertices, arrows, undirected?}.

    Returns ("directed", Digraph) or ("undirected", (vertices, edges)).
    """
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object")
    vertices = _expect(doc, "vertices", list, "graph")
    if not all(isinstance(v, str) for v in vertices):
        raise ParseError("graph: vertices must be strings")
    if len(set(vertices)) != len(vertices):
        raise ParseError("graph: duplicate vertex labels")
    entries = _expect(doc, "arrows", list, "graph")
    undirected = bool(doc.get("undirected", False))
    vset = set(vertices)
    parsed = []
    for pos, entry in enumerate(entries):
        where = f"arrows[{pos}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: must be an object")
        src = _expect(entry, "src", str, where)
        dst = _expect(entry, "dst", str, where)
        if src not in vset or dst not in vset:
            raise ParseError(f"{where}: unknown vertex")
        colour = None
        if "colour" in entry:
            bits = entry["colour"]
            if (not isinstance(bits, list) or len(bits) != 3
                    or any(b not in (0, 1) or isinstance(b, bool) for b in bits)):
                raise ParseError(f"{where}: colour must be a list of three 0/1 bits")
            colour = Colour3(tuple(bits))
        parsed.append((src, dst, colour))
    if undirected:
        edges = []
        seen = set()
        for (src, dst, _colour) in parsed:
            if src == dst:
                raise ParseError("graph: undirected graphs cannot contain loops")
            key = frozenset((src, dst))
            if key not in seen:
                seen.add(key)
                edges.append((src, dst))
        return "undirected", (tuple(vertices), edges)
    try:
        G = Digraph(tuple(vertices),
                    tuple(Arrow(src, dst, None, colour) for (src, dst, colour) in parsed))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return "directed", G


def graph_to_document(G: Digraph, undirected: bool = False) -> dict:
    arrows = []
    for a in G.arrows:
        entry: dict = {"src": a.src, "dst": a.dst}
        if a.colour is not None:
            entry["colour"] = list(a.colour.bits)
        arrows.append(entry)
    doc = {"vertices": list(G.vertices), "arrows": arrows}
    if undirected:
        doc["undirected"] = True
    return doc


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"

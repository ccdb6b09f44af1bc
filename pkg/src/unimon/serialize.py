"""JSON forms for matrices, monoids, ideals, and reports, plus DOT export.

Every emitter sorts its output, so serialization is deterministic and
round-trips through the public constructors: parsing re-runs the same
validation a user would get building the object by hand.
"""

from __future__ import annotations

import json

from .classify import ClassificationReport
from .errors import UnimonError
from .frobenius import FrobeniusData
from .ideals import (
    GeneratedBy,
    IntersectionOf,
    ProductOf,
    UnionOf,
    cofinite_ideal,
    ideal_from_generators,
    ideal_intersection,
    ideal_product,
    ideal_union,
)
from .matrices import PatternGroup, UniMatrix
from .monoid import Monoid


class MalformedInput(UnimonError):
    """The JSON document does not describe the expected object."""


def dumps(data):
    """Canonical JSON text: two-space indent, keys in insertion order."""
    return json.dumps(data, indent=2) + "\n"


def _fail(message):
    raise MalformedInput(message)


def _expect_mapping(data, what):
    if not isinstance(data, dict):
        _fail(f"{what} must be a JSON object, got {type(data).__name__}")
    return data


def matrix_to_json(matrix, group=None):
    """Entry triples, or the vector shorthand on first-row patterns."""
    if group is not None and group.tag == "first_row":
        return {"vector": list(matrix.first_row())}
    return {"n": matrix.n, "entries": matrix.entry_list()}


def matrix_from_json(data, group=None):
    data = _expect_mapping(data, "a matrix")
    if "vector" in data:
        vector = data["vector"]
        if not isinstance(vector, list) or not all(
            isinstance(v, int) for v in vector
        ):
            _fail("vector form needs a list of integers")
        if group is not None and len(vector) != group.n - 1:
            _fail(f"vector length {len(vector)} does not fit size {group.n}")
        return UniMatrix.from_vector(vector)
    if "entries" not in data or "n" not in data:
        _fail("a matrix needs either a vector or n with entries")
    n = data["n"]
    if not isinstance(n, int) or n < 2:
        _fail("matrix size must be an integer of at least 2")
    entries = data["entries"]
    if not isinstance(entries, list):
        _fail("entries must be a list of [row, col, value] triples")
    mapping = {}
    for item in entries:
        if not (isinstance(item, list) and len(item) == 3) or not all(
            isinstance(v, int) for v in item
        ):
            _fail(f"bad entry triple {item!r}")
        i, j, value = item
        if (i, j) in mapping:
            _fail(f"duplicate entry for position ({i},{j})")
        mapping[(i, j)] = value
    try:
        return UniMatrix.from_entries(n, mapping)
    except UnimonError as err:
        _fail(str(err))


def group_to_json(group):
    if group.tag in ("full", "first_row"):
        return {"n": group.n, "pattern": group.tag}
    return {"n": group.n, "pattern": [list(p) for p in group.sorted_positions()]}


def group_from_json(data):
    data = _expect_mapping(data, "a group")
    n = data.get("n")
    if not isinstance(n, int) or n < 2:
        _fail("group size must be an integer of at least 2")
    pattern = data.get("pattern")
    if pattern == "full":
        return PatternGroup.full(n)
    if pattern == "first_row":
        return PatternGroup.first_row(n)
    if isinstance(pattern, list):
        for p in pattern:
            if not (isinstance(p, list) and len(p) == 2):
                _fail(f"bad pattern position {p!r}")
        try:
            return PatternGroup.custom(n, (tuple(p) for p in pattern))
        except UnimonError as err:
            _fail(str(err))
    _fail("pattern must be 'full', 'first_row', or a list of positions")


def monoid_to_json(monoid):
    return {
        "group": group_to_json(monoid.group),
        "gaps": [matrix_to_json(g, monoid.group) for g in monoid.sorted_gaps()],
    }


def monoid_from_json(data):
    """Parse and fully validate; closure failures surface as NotClosed."""
    data = _expect_mapping(data, "a monoid")
    if "group" not in data or "gaps" not in data:
        _fail("a monoid needs a group and a gap list")
    group = group_from_json(data["group"])
    if not isinstance(data["gaps"], list):
        _fail("gaps must be a list of matrices")
    gaps = [matrix_from_json(g, group) for g in data["gaps"]]
    return Monoid.from_gaps(group, gaps)


def ideal_to_json(ideal):
    base = monoid_to_json(ideal.base)
    group = ideal.base.group
    if ideal.is_cofinite:
        return {
            "kind": "cofinite",
            "base": base,
            "side": ideal.side,
            "complement": [
                matrix_to_json(c, group) for c in sorted(ideal.complement)
            ],
        }
    expr = ideal.expr
    if isinstance(expr, GeneratedBy):
        return {
            "kind": "generated",
            "base": base,
            "side": ideal.side,
            "generators": [matrix_to_json(e, group) for e in expr.generators],
        }
    if isinstance(expr, ProductOf):
        return {
            "kind": "product",
            "parts": [ideal_to_json(expr.left), ideal_to_json(expr.right)],
        }
    kind = "union" if isinstance(expr, UnionOf) else "intersection"
    return {"kind": kind, "parts": [ideal_to_json(p) for p in expr.parts]}


def ideal_from_json(data):
    data = _expect_mapping(data, "an ideal")
    kind = data.get("kind")
    if kind in ("cofinite", "generated"):
        if "base" not in data or "side" not in data:
            _fail(f"a {kind} ideal needs a base and a side")
        base = monoid_from_json(data["base"])
        side = data["side"]
        if kind == "cofinite":
            points = data.get("complement")
            if not isinstance(points, list):
                _fail("a cofinite ideal needs a complement list")
            complement = [matrix_from_json(c, base.group) for c in points]
            return cofinite_ideal(base, side, complement)
        points = data.get("generators")
        if not isinstance(points, list):
            _fail("a generated ideal needs a generator list")
        generators = [matrix_from_json(e, base.group) for e in points]
        return ideal_from_generators(base, side, generators)
    if kind in ("product", "union", "intersection"):
        parts = data.get("parts")
        if not isinstance(parts, list) or len(parts) < 2:
            _fail(f"a {kind} ideal needs at least two parts")
        parsed = [ideal_from_json(p) for p in parts]
        combine = {
            "product": ideal_product,
            "union": ideal_union,
            "intersection": ideal_intersection,
        }[kind]
        out = parsed[0]
        for nxt in parsed[1:]:
            out = combine(out, nxt)
        return out
    _fail(f"unknown ideal kind {kind!r}")


def _matrix_list(points, group):
    return [matrix_to_json(p, group) for p in points]


def frobenius_to_json(data, group):
    return {
        "f_left": _matrix_list(data.f_left, group),
        "f_right": _matrix_list(data.f_right, group),
        "f_twosided": _matrix_list(data.f_twosided, group),
        "pf_left": _matrix_list(data.pf_left, group),
        "pf_right": _matrix_list(data.pf_right, group),
        "pf_twosided": _matrix_list(data.pf_twosided, group),
        "special": _matrix_list(data.special, group),
        "types": list(data.types),
    }


def frobenius_from_json(data, group):
    data = _expect_mapping(data, "Frobenius data")
    def points(key):
        return tuple(matrix_from_json(p, group) for p in data[key])
    return FrobeniusData(
        f_left=points("f_left"),
        f_right=points("f_right"),
        f_twosided=points("f_twosided"),
        pf_left=points("pf_left"),
        pf_right=points("pf_right"),
        pf_twosided=points("pf_twosided"),
        special=points("special"),
        types=tuple(data["types"]),
    )


def report_to_json(report):
    group = report.monoid.group
    return {
        "monoid": monoid_to_json(report.monoid),
        "generating_number": report.generating_number,
        "conductor": report.conductor,
        "genus": report.genus,
        "sporadicity": report.sporadicity,
        "frobenius": frobenius_to_json(report.frobenius, group),
        "irreducible": report.irreducible,
        "witness": None
        if report.witness is None
        else [monoid_to_json(t) for t in report.witness],
        "symmetry": report.symmetry,
        "strong": report.strong,
        "pseudo_witness": None
        if report.pseudo_witness is None
        else matrix_to_json(report.pseudo_witness, group),
        "counts": None if report.counts is None else list(report.counts),
    }


def report_from_json(data):
    data = _expect_mapping(data, "a report")
    monoid = monoid_from_json(data["monoid"])
    group = monoid.group
    witness = data.get("witness")
    pseudo = data.get("pseudo_witness")
    counts = data.get("counts")
    return ClassificationReport(
        monoid=monoid,
        generating_number=data["generating_number"],
        conductor=data["conductor"],
        genus=data["genus"],
        sporadicity=data["sporadicity"],
        frobenius=frobenius_from_json(data["frobenius"], group),
        irreducible=data["irreducible"],
        witness=None
        if witness is None
        else tuple(monoid_from_json(t) for t in witness),
        symmetry=data["symmetry"],
        strong=data["strong"],
        pseudo_witness=None if pseudo is None else matrix_from_json(pseudo, group),
        counts=None if counts is None else tuple(counts),
    )


def export_dot(lattice):
    """DOT digraph of the idempotent lattice, covers pointing upward."""
    lines = ["digraph idempotents {"]
    for i, label in enumerate(lattice.node_labels()):
        lines.append(f'  t{i} [label="{label}"];')
    for low, high in lattice.hasse_edges:
        lines.append(f"  t{low} -> t{high};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Worked examples used by the tests and shipped as JSON documents.

Each builder returns a validated monoid.  Names describe behavior, not
origin: the point of the collection is to cover every interesting
phenomenon at least once (left/right Frobenius sets differing, balanced
gap counts without irreducibility, each symmetry class, and so on).
"""

from __future__ import annotations

from functools import lru_cache

from .matrices import PatternGroup, UniMatrix
from .monoid import Monoid

_PLANE = PatternGroup.first_row(3)
_U3 = PatternGroup.full(3)


def _plane_monoid(gap_vectors):
    gaps = frozenset(UniMatrix.from_vector(list(v)) for v in gap_vectors)
    return Monoid.from_gaps(_PLANE, gaps)


def _u3_monoid(gap_triples):
    positions = _U3.sorted_positions()
    gaps = frozenset(
        UniMatrix.from_entries(3, dict(zip(positions, t))) for t in gap_triples
    )
    return Monoid.from_gaps(_U3, gaps)


@lru_cache(maxsize=None)
def plane_reducible():
    """Two incomparable Frobenius points, hence a reducible plane monoid."""
    return _plane_monoid([(0, 1), (1, 0), (0, 3), (3, 0)])


@lru_cache(maxsize=None)
def plane_fundamental_2():
    """Everything with an entry of 2 or more, plus the identity."""
    return _plane_monoid([(0, 1), (1, 0), (1, 1)])


@lru_cache(maxsize=None)
def plane_symmetric():
    """Strongly symmetric; the box below (3,3) splits evenly."""
    return _plane_monoid(
        [(1, 0), (1, 1), (1, 2), (1, 3), (3, 0), (3, 1), (3, 2), (3, 3)]
    )


@lru_cache(maxsize=None)
def plane_pseudo_symmetric():
    """Pseudo-symmetric with witness (1,1); (1,1)+(1,1) = (2,2) is the
    Frobenius point."""
    return _plane_monoid([(0, 1), (0, 2), (1, 0), (1, 1), (2, 2)])


@lru_cache(maxsize=None)
def plane_antidiagonal():
    """Gaps on the odd antidiagonals a+b in {1,3,5}; six Frobenius points."""
    vectors = [
        (a, s - a) for s in (1, 3, 5) for a in range(s + 1)
    ]
    return _plane_monoid(vectors)


@lru_cache(maxsize=None)
def u3_left_right_differ():
    """Left and right Frobenius sets disagree on this noncommutative monoid."""
    sporadic = {
        (0, 0, 0), (1, 1, 1), (1, 2, 1), (1, 2, 2),
        (2, 0, 1), (2, 0, 2), (2, 1, 1),
    }
    box = [
        (a, b, c)
        for a in range(3) for b in range(3) for c in range(3)
    ]
    return _u3_monoid([t for t in box if t not in sporadic])


@lru_cache(maxsize=None)
def u3_type_2_2_1():
    """Symmetric with one-sided types both 2; a parity argument on the
    corner entry rules out pseudo-symmetry."""
    return _u3_monoid([(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)])


@lru_cache(maxsize=None)
def u3_balanced_reducible():
    """As many sporadic members as gaps, yet reducible: the balanced-count
    heuristic from the commutative theory does not transfer."""
    gaps = [
        (0, 0, 1), (0, 0, 2), (0, 0, 3), (0, 1, 0), (0, 1, 2), (0, 1, 3),
        (0, 2, 0), (0, 2, 1), (0, 2, 3), (0, 3, 0), (0, 3, 1), (0, 3, 2),
        (1, 0, 0), (1, 0, 1), (1, 0, 3), (1, 1, 0), (1, 2, 0), (1, 3, 0),
        (2, 0, 0), (2, 0, 3), (2, 1, 0), (2, 1, 1), (2, 2, 0), (2, 3, 0),
        (2, 3, 1), (3, 0, 0), (3, 0, 1), (3, 0, 2), (3, 1, 0), (3, 2, 0),
        (3, 3, 0), (3, 3, 1),
    ]
    return _u3_monoid(gaps)


EXAMPLES = {
    "plane_reducible": plane_reducible,
    "plane_fundamental_2": plane_fundamental_2,
    "plane_symmetric": plane_symmetric,
    "plane_pseudo_symmetric": plane_pseudo_symmetric,
    "plane_antidiagonal": plane_antidiagonal,
    "u3_left_right_differ": u3_left_right_differ,
    "u3_type_2_2_1": u3_type_2_2_1,
    "u3_balanced_reducible": u3_balanced_reducible,
}


def write_fixture_files(directory):
    """Regenerate the shipped JSON documents, one per example, plus one
    deliberately broken document for exercising validation failures."""
    import json
    import os

    from .serialize import dumps, monoid_to_json

    os.makedirs(directory, exist_ok=True)
    written = []
    for name, builder in sorted(EXAMPLES.items()):
        path = os.path.join(directory, f"{name}.json")
        with open(path, "w") as handle:
            handle.write(dumps(monoid_to_json(builder())))
        written.append(path)
    # Gap set {(1,1)} alone is not closed: (1,0) + (0,1) lands on it.
    bad = {
        "group": {"n": 3, "pattern": "first_row"},
        "gaps": [{"vector": [1, 1]}],
    }
    path = os.path.join(directory, "plane_not_closed.json")
    with open(path, "w") as handle:
        handle.write(json.dumps(bad, indent=2) + "\n")
    written.append(path)
    return written

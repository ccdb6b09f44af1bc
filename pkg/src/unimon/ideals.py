"""Relative ideals, the torsion monoid, oversemigroups and idempotents.

Two representations with different exactness contracts.  A cofinite ideal
carries its complement explicitly and every question about it is exact.  A
generated or composed ideal is a lazy expression whose membership oracle is
still exact (all factor searches are bounded entrywise by the query point),
but global questions such as idempotency need the cofinite form.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import (
    EmptyGeneratorSet,
    IdealMismatch,
    Infeasible,
    NotAnIdeal,
    NotCofinite,
)
from .matrices import entrywise_subbox, enumerate_box
from .monoid import Monoid
from .orders import SIDES
from .frobenius import member_multiplier_candidates

DEFAULT_MAX_NODES = 2_000_000


def _search_budget():
    raw = os.environ.get("UNIMON_MAX_NODES")
    return int(raw) if raw else DEFAULT_MAX_NODES


def _require_side(side):
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


@dataclass(frozen=True)
class GeneratedBy:
    """Generator-set expression: E*S, S*E or S*E*S depending on the side."""

    base: Monoid
    side: str
    generators: tuple

    def contains(self, point):
        if not self.base.group.contains_point(point):
            return False
        if self.side == "right":
            return any(
                self.base.contains(e.inverse() * point) for e in self.generators
            )
        if self.side == "left":
            return any(
                self.base.contains(point * e.inverse()) for e in self.generators
            )
        for e in self.generators:
            inv = e.inverse()
            for u in entrywise_subbox(point):
                if not self.base.contains(u):
                    continue
                if self.base.contains(inv * u.inverse() * point):
                    return True
        return False


@dataclass(frozen=True)
class ProductOf:
    left: object
    right: object

    def contains(self, point):
        if not self.left.base.group.contains_point(point):
            return False
        for u in entrywise_subbox(point):
            if self.left.contains(u) and self.right.contains(u.inverse() * point):
                return True
        return False


@dataclass(frozen=True)
class UnionOf:
    parts: tuple

    def contains(self, point):
        return any(p.contains(point) for p in self.parts)


@dataclass(frozen=True)
class IntersectionOf:
    parts: tuple

    def contains(self, point):
        return all(p.contains(point) for p in self.parts)


@dataclass(frozen=True)
class RelativeIdeal:
    """Subset of the group points stable under one- or two-sided translation."""

    base: Monoid
    side: str
    complement: frozenset | None = None
    expr: object | None = None

    def contains(self, point):
        if self.complement is not None:
            return self.base.group.contains_point(point) and point not in self.complement
        return self.expr.contains(point)

    def __contains__(self, point):
        return self.contains(point)

    @property
    def is_cofinite(self):
        return self.complement is not None

    def gap_part(self):
        """Gaps of the base monoid that the ideal picks up; exact either way."""
        return tuple(g for g in self.base.sorted_gaps() if self.contains(g))

    def contains_base(self):
        if self.complement is not None:
            return self.complement <= self.base.gaps
        return self.expr.contains(self.base.group.identity())

    def sort_key(self):
        return tuple(sorted(g.cells for g in self.gap_part()))

    def __repr__(self):
        if self.complement is not None:
            labels = ",".join(
                self.base.group.label(c) for c in sorted(self.complement)
            )
            return f"RelativeIdeal({self.side}, complement={{{labels}}})"
        return f"RelativeIdeal({self.side}, {self.expr!r})"


def _cofinite_unchecked(base, side, complement):
    return RelativeIdeal(base, side, complement=frozenset(complement), expr=None)


def _stability_witness(base, side, complement, c):
    # a violation c = b*s (or s*b) dominates both factors entrywise
    for b in entrywise_subbox(c):
        if b == c or b in complement:
            continue
        if side in ("right", "twosided"):
            s = b.inverse() * c
            if base.contains(s):
                return b, s
        if side in ("left", "twosided"):
            s = c * b.inverse()
            if base.contains(s):
                return b, s
    return None


def cofinite_ideal(base, side, complement):
    """Exact ideal from its finite complement, with the stability certificate.

    Any product landing in the complement dominates its ideal factor
    entrywise, so scanning divisors of complement points decides stability.
    """
    _require_side(side)
    complement = frozenset(complement)
    for c in complement:
        base.group.require_point(c)
    for c in complement:
        hit = _stability_witness(base, side, complement, c)
        if hit is not None:
            raise NotAnIdeal(hit[0], hit[1], c)
    return _cofinite_unchecked(base, side, complement)


def torsion_element(base, gap_part):
    """Two-sided cofinite ideal between the monoid and the full group.

    Determined by the subset of gaps it absorbs; that subset must be closed
    under translation by members back into the gap box.
    """
    gap_part = frozenset(gap_part)
    for g in gap_part:
        if g not in base.gaps:
            raise ValueError(f"{g} is not a gap of the base monoid")
    members = member_multiplier_candidates(base)
    for g in gap_part:
        for s in members:
            for p in (g * s, s * g):
                if p in base.gaps and p not in gap_part:
                    raise NotAnIdeal(g, s, p)
    return _cofinite_unchecked(base, "twosided", base.gaps - gap_part)


def ideal_from_generators(base, side, generators):
    """Lazy generated ideal; membership is decided by bounded factor search."""
    _require_side(side)
    generators = tuple(sorted(set(generators)))
    if not generators:
        raise EmptyGeneratorSet("an ideal needs at least one generator")
    for e in generators:
        base.group.require_point(e)
    return RelativeIdeal(base, side, expr=GeneratedBy(base, side, generators))


def ideal_contains(ideal, point):
    return ideal.contains(point)


def _check_match(i, j):
    if i.base != j.base:
        raise IdealMismatch("ideal operands live over different base monoids")
    if i.side != j.side:
        raise IdealMismatch(f"ideal sides differ: {i.side} vs {j.side}")


def ideal_product(i, j):
    """Set product of two ideals of the same base and side.

    Exact whenever both contain the base monoid: the product then also
    contains it, and its gap part is found by scanning entrywise divisors
    of each gap.  Anything else stays a lazy expression.
    """
    _check_match(i, j)
    base = i.base
    if i.is_cofinite and j.is_cofinite and i.contains_base() and j.contains_base():
        picked = set()
        for g in base.sorted_gaps():
            for u in entrywise_subbox(g):
                if i.contains(u) and j.contains(u.inverse() * g):
                    picked.add(g)
                    break
        return _cofinite_unchecked(base, i.side, base.gaps - picked)
    return RelativeIdeal(base, i.side, expr=ProductOf(i, j))


def ideal_union(i, j):
    _check_match(i, j)
    if i.is_cofinite and j.is_cofinite:
        return _cofinite_unchecked(i.base, i.side, i.complement & j.complement)
    return RelativeIdeal(i.base, i.side, expr=UnionOf((i, j)))


def ideal_intersection(i, j):
    _check_match(i, j)
    if i.is_cofinite and j.is_cofinite:
        return _cofinite_unchecked(i.base, i.side, i.complement | j.complement)
    return RelativeIdeal(i.base, i.side, expr=IntersectionOf((i, j)))


def is_idempotent(ideal):
    """Decidable only in the torsion monoid, where products are exact."""
    if not (ideal.is_cofinite and ideal.contains_base()):
        raise NotCofinite("idempotency needs the cofinite form containing the base")
    square = ideal_product(ideal, ideal)
    return square.complement == ideal.complement


def as_monoid(ideal):
    """Reinterpret a torsion element as a monoid; validates closure."""
    if not (ideal.is_cofinite and ideal.contains_base()):
        raise NotCofinite("only cofinite ideals containing the base convert")
    return Monoid.from_gaps(ideal.base.group, ideal.complement)


def _strippable(ideal, point):
    """True when a nonidentity member splits off on a side the ideal allows."""
    base, side = ideal.base, ideal.side
    for a in entrywise_subbox(point):
        if a == point or not ideal.contains(a):
            continue
        if side in ("right", "twosided") and base.contains(a.inverse() * point):
            return True
        if side in ("left", "twosided") and base.contains(point * a.inverse()):
            return True
    return False


def ideal_min_generators(ideal, bound=None):
    """The unique minimal generating set of the ideal.

    When the identity belongs to the ideal the answer is the identity plus
    the minimal absorbed gaps: members regenerate from the identity alone,
    and a gap can only factor through smaller absorbed gaps.  Otherwise the
    minimal elements are scanned in a box that provably holds them for the
    cofinite form; generated ideals scan their generator set; anything else
    needs an explicit bound.
    """
    base = ideal.base
    one = base.group.identity()
    if ideal.contains(one):
        mins = [g for g in ideal.gap_part() if not _strippable(ideal, g)]
        return tuple([one] + mins)
    if ideal.complement is not None:
        top = max((c.max_entry() for c in ideal.complement), default=0)
        search = 2 * base.generating_number + top
        candidates = [x for x in enumerate_box(base.group, search) if ideal.contains(x)]
    elif isinstance(ideal.expr, GeneratedBy):
        candidates = list(ideal.expr.generators)
    elif bound is not None:
        candidates = [x for x in enumerate_box(base.group, bound) if ideal.contains(x)]
    else:
        raise NotCofinite("minimal generators of a lazy ideal need a search bound")
    return tuple(sorted(x for x in set(candidates) if not _strippable(ideal, x)))


class _ClosedSubsetSearch:
    """Backtracking enumeration of gap subsets closed under forced products.

    ``forced[i]`` lists gaps any in-set must contain alongside gap i;
    ``pairwise`` optionally adds gaps forced by two in-set gaps jointly.
    Branches try OUT first so small subsets surface early; every forced
    inclusion is propagated eagerly and undone through a trail.
    """

    UNDEC, IN, OUT = 0, 1, 2

    def __init__(self, count, forced, pairwise, max_nodes):
        self.count = count
        self.forced = forced
        self.pairwise = pairwise
        self.max_nodes = max_nodes
        self.state = [self.UNDEC] * count
        self.results = []
        self.nodes = 0

    def _force_in(self, i, trail):
        if self.state[i] == self.OUT:
            return False
        if self.state[i] == self.IN:
            return True
        self.state[i] = self.IN
        trail.append(i)
        for j in self.forced[i]:
            if not self._force_in(j, trail):
                return False
        if self.pairwise is not None:
            for j in range(self.count):
                if self.state[j] != self.IN:
                    continue
                for k in self.pairwise.get((i, j), ()):
                    if not self._force_in(k, trail):
                        return False
        return True

    def run(self):
        self._descend(0)
        return self.results

    def _descend(self, pos):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise Infeasible(
                f"closed-subset search exceeded {self.max_nodes} nodes; "
                "raise UNIMON_MAX_NODES to go further"
            )
        while pos < self.count and self.state[pos] != self.UNDEC:
            pos += 1
        if pos == self.count:
            self.results.append(
                frozenset(i for i in range(self.count) if self.state[i] == self.IN)
            )
            return
        self.state[pos] = self.OUT
        self._descend(pos + 1)
        self.state[pos] = self.UNDEC
        trail = []
        if self._force_in(pos, trail):
            self._descend(pos + 1)
        for i in trail:
            self.state[i] = self.UNDEC


def _translation_forced(base, gaps):
    members = member_multiplier_candidates(base)
    index = {g: i for i, g in enumerate(gaps)}
    forced = []
    for g in gaps:
        hits = set()
        for s in members:
            for p in (g * s, s * g):
                if p in base.gaps:
                    hits.add(index[p])
        forced.append(tuple(sorted(hits)))
    return forced


def _pairwise_forced(base, gaps):
    index = {g: i for i, g in enumerate(gaps)}
    pairwise = {}
    for i, a in enumerate(gaps):
        for j, b in enumerate(gaps):
            hits = {index[p] for p in (a * b, b * a) if p in base.gaps}
            if hits:
                pairwise[(i, j)] = tuple(sorted(hits))
    return pairwise


def _closed_gap_subsets(base, with_products):
    gaps = base.sorted_gaps()
    forced = _translation_forced(base, gaps)
    pairwise = _pairwise_forced(base, gaps) if with_products else None
    search = _ClosedSubsetSearch(len(gaps), forced, pairwise, _search_budget())
    subsets = search.run()
    picked = [frozenset(gaps[i] for i in s) for s in subsets]
    picked.sort(key=lambda s: (len(s), tuple(sorted(g.cells for g in s))))
    return picked


def torsion_monoid(base):
    """Every two-sided relative ideal between the monoid and the full group."""
    return [
        _cofinite_unchecked(base, "twosided", base.gaps - part)
        for part in _closed_gap_subsets(base, with_products=False)
    ]


def oversemigroups(base):
    """Every monoid sitting between the given one and the full group."""
    return [
        Monoid(base.group, base.gaps - part)
        for part in _closed_gap_subsets(base, with_products=True)
    ]


@dataclass(frozen=True)
class IdempotentLattice:
    """Idempotents of the torsion monoid with their covering relation."""

    base: Monoid
    nodes: tuple
    hasse_edges: tuple
    minimal_nontrivial: tuple

    def node_labels(self):
        labels = []
        for node in self.nodes:
            inside = ",".join(self.base.group.label(g) for g in node.gap_part())
            labels.append("{" + inside + "}")
        return labels


def torsion_idempotents(base):
    parts = _closed_gap_subsets(base, with_products=True)
    nodes = tuple(
        _cofinite_unchecked(base, "twosided", base.gaps - part) for part in parts
    )
    sets = [frozenset(node.gap_part()) for node in nodes]
    edges = []
    for i, low in enumerate(sets):
        for j, high in enumerate(sets):
            if not (low < high):
                continue
            if any(low < mid < high for mid in sets):
                continue
            edges.append((i, j))
    minimal = tuple(sorted(j for i, j in edges if not sets[i]))
    return IdempotentLattice(base, nodes, tuple(sorted(edges)), minimal)

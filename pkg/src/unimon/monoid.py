"""Complement-finite submonoids of the nonnegative points of a pattern group."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    EmptyGeneratorSet,
    GeneratorOutOfPattern,
    GroupMismatch,
    IdentityGap,
    IdentityGenerator,
    NotClosed,
)
from .matrices import PatternGroup, UniMatrix, enumerate_box, entrywise_subbox


@dataclass(frozen=True)
class Monoid:
    """A monoid given by its pattern group and finite gap set.

    The gap set determines everything: members are exactly the nonnegative
    in-pattern matrices that are not gaps.  Instances are immutable and
    hashable; construct through ``from_gaps`` to get the closure check.
    """

    group: PatternGroup
    gaps: frozenset

    @classmethod
    def from_gaps(cls, group, gaps):
        """Validate a gap set and build the monoid.

        Closure is certified on the finite box below the generating number:
        products dominate factors entrywise, so any product landing in the
        gap set has both factors inside that box.
        """
        gaps = frozenset(gaps)
        for g in gaps:
            group.require_point(g)
            if g.is_identity():
                raise IdentityGap("the identity cannot be a gap")
        monoid = cls(group, gaps)
        r = monoid.generating_number
        one = group.identity()
        members = [m for m in enumerate_box(group, r) if m != one and m not in gaps]
        for a in members:
            for b in members:
                p = a * b
                if p in gaps:
                    raise NotClosed(a, b, p)
        return monoid

    def contains(self, matrix):
        """Total membership test: nonnegative, on the pattern, not a gap."""
        return self.group.contains_point(matrix) and matrix not in self.gaps

    def __contains__(self, matrix):
        return self.contains(matrix)

    @cached_property
    def generating_number(self):
        """Least k such that every group point with max entry >= k is a member."""
        if not self.gaps:
            return 1
        return 1 + max(g.max_entry() for g in self.gaps)

    @cached_property
    def genus(self):
        return len(self.gaps)

    @cached_property
    def conductor(self):
        return self.generating_number ** self.group.dimension

    @cached_property
    def sporadic_elements(self):
        """Members below the generating number, the identity included."""
        return tuple(
            m for m in enumerate_box(self.group, self.generating_number)
            if m not in self.gaps
        )

    @cached_property
    def sporadicity(self):
        return len(self.sporadic_elements)

    def invariants(self):
        return (
            self.generating_number,
            self.conductor,
            self.genus,
            self.sporadicity,
            self.sporadic_elements,
        )

    def members_box(self, bound):
        """Members with every entry below the bound, canonically sorted."""
        return tuple(
            m for m in enumerate_box(self.group, bound) if m not in self.gaps
        )

    def sorted_gaps(self):
        return tuple(sorted(self.gaps))

    @cached_property
    def minimal_generators(self):
        """Members that admit no factorization into two nonidentity members.

        Everything with max entry at least twice the generating number splits
        off a factor from the window [r, 2r), so the search box is exhaustive.
        """
        bound = 2 * self.generating_number
        one = self.group.identity()
        out = []
        for a in enumerate_box(self.group, bound):
            if a == one or a in self.gaps:
                continue
            if not self._splits(a):
                out.append(a)
        return tuple(out)

    def _splits(self, a):
        one = self.group.identity()
        for b in entrywise_subbox(a):
            if b == one or b == a or b in self.gaps:
                continue
            c = b.inverse() * a
            if c.is_nonnegative() and c not in self.gaps:
                return True
        return False

    def intersect(self, other):
        """Meet of two monoids over the same group; gap sets simply unite."""
        if self.group != other.group:
            raise GroupMismatch("cannot intersect monoids over different groups")
        return Monoid(self.group, self.gaps | other.gaps)

    def adjoin(self, gap):
        """Remove one gap, revalidating closure; raises NotClosed on failure."""
        if gap not in self.gaps:
            raise ValueError(f"{gap} is not a gap of this monoid")
        return Monoid.from_gaps(self.group, self.gaps - {gap})

    def sort_key(self):
        return tuple(sorted(g.cells for g in self.gaps))

    def __repr__(self):
        shown = ", ".join(self.group.label(g) for g in self.sorted_gaps())
        return f"Monoid({self.group.tag}({self.group.n}), gaps=[{shown}])"


@dataclass(frozen=True)
class Undecided:
    """Closure search ended without certifying cofiniteness."""

    search_bound: int


def fundamental_monoid(group, k):
    """Members are the identity plus every point with max entry at least k."""
    if k < 1:
        raise ValueError("threshold must be at least 1")
    one = group.identity()
    gaps = frozenset(x for x in enumerate_box(group, k) if x != one)
    return Monoid.from_gaps(group, gaps)


def from_generators(group, generators, search_bound):
    """Close a finite generator set and try to certify the result.

    The closure is computed exactly inside the box below ``search_bound``;
    every factor of a boxed product is entrywise below it, so nothing boxed
    is missed.  If for some k with 2k <= search_bound the whole window
    [k, 2k) lies in the closure, the window generates everything above it
    and the gap set can be read off below k.  Otherwise the question is
    left open and ``Undecided`` is returned.
    """
    generators = list(generators)
    if not generators:
        raise EmptyGeneratorSet("need at least one generator")
    one = group.identity()
    for g in generators:
        if g.n != group.n or not g.is_nonnegative() or not group.supports(g):
            raise GeneratorOutOfPattern(f"{g} is not a nonnegative pattern point")
        if g == one:
            raise IdentityGenerator("the identity is implicit; do not list it")

    closure = {one}
    frontier = [one]
    while frontier:
        fresh = []
        for x in frontier:
            for g in generators:
                p = x * g
                if p.max_entry() < search_bound and p not in closure:
                    closure.add(p)
                    fresh.append(p)
        frontier = fresh

    for k in range(1, search_bound // 2 + 1):
        window = [x for x in enumerate_box(group, 2 * k) if x.max_entry() >= k]
        if all(x in closure for x in window):
            gaps = frozenset(x for x in enumerate_box(group, k) if x not in closure)
            return Monoid.from_gaps(group, gaps)
    return Undecided(search_bound)

"""Apery sets of unipotent numerical monoids and factorization through them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PivotNotInMonoid, UnsupportedSide
from .matrices import enumerate_box
from .orders import SIDES, Order
from .frobenius import pseudo_frobenius


@dataclass(frozen=True)
class AperySet:
    """Members of the monoid that the pivot cannot divide on the given side.

    ``core`` holds every member except the cofinite tail of points that
    dominate ``pivot * conductor_box`` entrywise; ``contains`` answers the
    membership question exactly for arbitrary group points.
    """

    monoid: object
    pivot: object
    side: str
    core: tuple = field(compare=False)

    def contains(self, point):
        if not self.monoid.contains(point):
            return False
        inv = self.pivot.inverse()
        if self.side in ("left", "twosided"):
            if self.monoid.contains(inv * point):
                return False
        if self.side in ("right", "twosided"):
            if self.monoid.contains(point * inv):
                return False
        return True

    def in_box(self, bound):
        """Apery elements with every entry strictly below ``bound``."""
        return tuple(
            a for a in enumerate_box(self.monoid.group, bound) if self.contains(a)
        )


def apery(monoid, pivot, side="twosided"):
    """Exact Apery set, stored through its finite core.

    A member escapes left division by the pivot exactly when it lies in
    ``pivot * gaps``, so the core is that finite translate intersected with
    the monoid (plus the mirror image for the right side).
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    if not monoid.contains(pivot) or pivot.is_identity():
        raise PivotNotInMonoid(f"pivot {pivot} is not a nonidentity member")
    left_core = {pivot * g for g in monoid.gaps if monoid.contains(pivot * g)}
    right_core = {g * pivot for g in monoid.gaps if monoid.contains(g * pivot)}
    if side == "left":
        core = left_core
    elif side == "right":
        core = right_core
    else:
        core = left_core & right_core
    return AperySet(monoid, pivot, side, tuple(sorted(core)))


def _certify_maximal(monoid, ap, a, members, side):
    if not ap.contains(a):
        raise RuntimeError(f"claimed maximal element {a} left the Apery set")
    inv = a.inverse()
    for b in members:
        if b == a or not ap.contains(b):
            continue
        above = monoid.contains(inv * b) if side == "left" else monoid.contains(b * inv)
        if above:
            raise RuntimeError(f"{a} divides the Apery element {b} on the {side}")


def apery_maximal(monoid, pivot, side="twosided"):
    """Maximal Apery elements: pseudo-Frobenius translates that stay members.

    An Apery member whose pullback by the pivot is a genuine gap is maximal
    exactly when that gap absorbs the monoid on the matching side, and a
    member with an invalid pullback never is: some member multiplier keeps
    the pullback invalid.  So the maxima are the translates of the one-sided
    pseudo-Frobenius gaps that land in the monoid.  On a noncommutative
    pattern a one-sided translate can miss the monoid, since the gap absorbs
    multipliers on one side only; two-sided pseudo-Frobenius gaps absorb on
    both sides, so their translates always land.  Every claim is certified
    against a box large enough to hold any divisibility witness; a failed
    certificate is a genuine bug, not bad input.
    """
    pf = pseudo_frobenius(monoid, side)
    bound = 2 * monoid.generating_number + pivot.max_entry()
    members = [b for b in monoid.members_box(bound) if not b.is_identity()]
    if side == "left":
        found = [pivot * z for z in pf if monoid.contains(pivot * z)]
        left_ap = apery(monoid, pivot, "left")
        for a in found:
            _certify_maximal(monoid, left_ap, a, members, "left")
    elif side == "right":
        found = [z * pivot for z in pf if monoid.contains(z * pivot)]
        right_ap = apery(monoid, pivot, "right")
        for a in found:
            _certify_maximal(monoid, right_ap, a, members, "right")
    else:
        found = [pivot * z for z in pf]
        left_ap = apery(monoid, pivot, "left")
        right_ap = apery(monoid, pivot, "right")
        for z in pf:
            _certify_maximal(monoid, left_ap, pivot * z, members, "left")
            _certify_maximal(monoid, right_ap, z * pivot, members, "right")
    return tuple(sorted(found))


def factor_via_apery(monoid, pivot, point, side="left"):
    """Write a member as pivot^k times an Apery element of the same side.

    Only one-sided factorizations exist in general; the descent that peels
    one pivot at a time has no two-sided analogue.
    """
    if side == "twosided":
        raise UnsupportedSide("factorization through the Apery set is one-sided")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if not monoid.contains(point):
        raise ValueError(f"{point} is not a member")
    ap = apery(monoid, pivot, side)
    inv = pivot.inverse()
    k = 0
    w = point
    while not ap.contains(w):
        w = inv * w if side == "left" else w * inv
        if not w.is_nonnegative() or not monoid.contains(w):
            raise RuntimeError("descent through the pivot left the monoid")
        k += 1
    return k, w


def apery_contains(ap, point):
    """Membership test for the possibly infinite Apery set."""
    return ap.contains(point)


def apery_in_box(ap, bound):
    """The finite slice of the Apery set inside the entrywise box."""
    return ap.in_box(bound)

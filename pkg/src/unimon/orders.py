"""Divisibility orders induced by a monoid, plus entrywise comparison."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .matrices import UniMatrix, enumerate_box
from .monoid import Monoid

SIDES = ("left", "right", "twosided")
ORDER_KINDS = SIDES + ("entrywise",)


@dataclass(frozen=True)
class Order:
    """One of the divisibility orders, or plain entrywise comparison.

    ``left`` compares A <= B when inverse(A) * B is a member, ``right``
    when B * inverse(A) is, ``twosided`` requires both.  All three force
    entrywise dominance, which keeps every interval finite.
    """

    kind: str
    monoid: Monoid | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind != "entrywise" and self.monoid is None:
            raise ValueError(f"{self.kind} order needs a monoid")

    def leq(self, a, b):
        if self.kind == "entrywise":
            return a.leq_entrywise(b)
        if self.kind == "left":
            return self.monoid.contains(a.inverse() * b)
        if self.kind == "right":
            return self.monoid.contains(b * a.inverse())
        return self.monoid.contains(a.inverse() * b) and self.monoid.contains(
            b * a.inverse()
        )


def s_leq(order, a, b):
    return order.leq(a, b)


def ambient_order(group):
    """Two-sided divisibility of the gap-free monoid of the group."""
    return Order("twosided", Monoid(group, frozenset()))


def interval(order, low, high):
    """All elements between two bounds in the given order.

    Any order relation here forces entrywise dominance, so scanning the
    entrywise box between the bounds is exhaustive.
    """
    if not low.leq_entrywise(high):
        return ()
    n = low.n
    ranges = [range(a, b + 1) for a, b in zip(low.cells, high.cells)]
    out = []
    for cells in iter_product(*ranges):
        c = UniMatrix(n, cells)
        if order.leq(low, c) and order.leq(c, high):
            out.append(c)
    return tuple(out)


def extremal(order, elements, which="max"):
    """Maximal or minimal elements of a finite set under the order."""
    if which not in ("max", "min"):
        raise ValueError("which must be 'max' or 'min'")
    elements = list(elements)
    out = []
    for x in elements:
        if which == "max":
            dominated = any(y != x and order.leq(x, y) for y in elements)
        else:
            dominated = any(y != x and order.leq(y, x) for y in elements)
        if not dominated:
            out.append(x)
    return tuple(sorted(out))


def count_below(monoid, top, order):
    """Counts of members and gaps lying between the identity and ``top``.

    Returns (member count, gap count); both range over group points B with
    identity <= B <= top in the given order.
    """
    one = monoid.group.identity()
    ranges = [range(v + 1) for v in top.cells]
    members = 0
    gaps = 0
    for cells in iter_product(*ranges):
        b = UniMatrix(monoid.group.n, cells)
        if not order.leq(one, b) or not order.leq(b, top):
            continue
        if monoid.contains(b):
            members += 1
        else:
            gaps += 1
    return members, gaps


def is_lower_order_ideal_boxed(monoid, order, in_ideal, bound):
    """Check, inside a box, that the members outside the ideal form a downset.

    ``in_ideal`` is a membership oracle for a subset of the monoid.  The
    test succeeds when no member of the subset sits below a member outside
    it; by the order-ideal characterization this is the boxed version of
    the subset being stable under monoid translation.
    """
    boxed = [x for x in enumerate_box(monoid.group, bound) if monoid.contains(x)]
    outside = [y for y in boxed if not in_ideal(y)]
    for y in outside:
        for x in boxed:
            if x != y and x.leq_entrywise(y) and order.leq(x, y) and in_ideal(x):
                return False
    return True


def count_n_g(monoid, top, order):
    """Member and gap counts below ``top``: the (n, g) pair of the interval."""
    return count_below(monoid, top, order)

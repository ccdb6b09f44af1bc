"""Frobenius sets, pseudo-Frobenius sets, special gaps and type numbers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import EmptyGaps, NotCofinite
from .matrices import enumerate_box
from .orders import SIDES, Order, extremal


def _check_side(side):
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


@lru_cache(maxsize=None)
def group_multiplier_candidates(monoid):
    """Nonidentity group points entrywise below some gap.

    A product that lands in the gap set dominates both factors entrywise,
    so these are the only multipliers that can ever push a gap outside the
    monoid.  Everything else lands above every gap and is a member for free.
    """
    one = monoid.group.identity()
    out = []
    for x in enumerate_box(monoid.group, monoid.generating_number):
        if x == one:
            continue
        if any(x.leq_entrywise(g) for g in monoid.gaps):
            out.append(x)
    return tuple(out)


@lru_cache(maxsize=None)
def member_multiplier_candidates(monoid):
    return tuple(
        x for x in group_multiplier_candidates(monoid) if x not in monoid.gaps
    )


def _absorbs(monoid, g, side, multipliers):
    if side in ("left", "twosided"):
        if any((g * x) in monoid.gaps for x in multipliers):
            return False
    if side in ("right", "twosided"):
        if any((x * g) in monoid.gaps for x in multipliers):
            return False
    return True


@lru_cache(maxsize=None)
def frobenius(monoid, side="twosided"):
    """Gaps that every nonidentity group multiplier sends into the monoid."""
    _check_side(side)
    if not monoid.gaps:
        raise EmptyGaps("the gap-free monoid has no Frobenius set")
    multipliers = group_multiplier_candidates(monoid)
    return tuple(
        g for g in monoid.sorted_gaps() if _absorbs(monoid, g, side, multipliers)
    )


@lru_cache(maxsize=None)
def pseudo_frobenius(monoid, side="twosided"):
    """Maximal gaps in the divisibility order of the given side.

    The two-sided set is the intersection of the one-sided ones, not the
    maxima of the two-sided order.
    """
    _check_side(side)
    if not monoid.gaps:
        raise EmptyGaps("the gap-free monoid has no pseudo-Frobenius set")
    if side == "twosided":
        left = set(pseudo_frobenius(monoid, "left"))
        right = set(pseudo_frobenius(monoid, "right"))
        return tuple(sorted(left & right))
    return extremal(Order(side, monoid), monoid.sorted_gaps(), "max")


def pseudo_frobenius_by_definition(monoid, side="twosided"):
    """Direct filter: gaps absorbed by every nonidentity member multiplier."""
    _check_side(side)
    if not monoid.gaps:
        raise EmptyGaps("the gap-free monoid has no pseudo-Frobenius set")
    multipliers = member_multiplier_candidates(monoid)
    return tuple(
        g for g in monoid.sorted_gaps() if _absorbs(monoid, g, side, multipliers)
    )


@lru_cache(maxsize=None)
def special_gaps(monoid):
    """Two-sided pseudo-Frobenius gaps whose square is a member.

    These are exactly the gaps whose adjunction keeps the monoid closed;
    each selected gap is cross-checked through ``adjoin``.
    """
    out = []
    for g in pseudo_frobenius(monoid, "twosided"):
        if monoid.contains(g * g):
            monoid.adjoin(g)
            out.append(g)
    return tuple(out)


def type_numbers(monoid):
    return (
        len(pseudo_frobenius(monoid, "left")),
        len(pseudo_frobenius(monoid, "right")),
        len(pseudo_frobenius(monoid, "twosided")),
    )


def pf_of_cofinite_ideal(ideal, side="twosided"):
    """Maximal excluded points of a cofinite relative ideal, identity aside."""
    _check_side(side)
    if ideal.complement is None:
        raise NotCofinite("pseudo-Frobenius needs an exact complement")
    one = ideal.base.group.identity()
    excluded = sorted(c for c in ideal.complement if c != one)
    if not excluded:
        raise EmptyGaps("the ideal excludes nothing but possibly the identity")
    if side == "twosided":
        left = set(extremal(Order("left", ideal.base), excluded, "max"))
        right = set(extremal(Order("right", ideal.base), excluded, "max"))
        return tuple(sorted(left & right))
    return extremal(Order(side, ideal.base), excluded, "max")


@dataclass(frozen=True)
class FrobeniusData:
    """All Frobenius-side invariants of one monoid, canonically sorted."""

    f_left: tuple
    f_right: tuple
    f_twosided: tuple
    pf_left: tuple
    pf_right: tuple
    pf_twosided: tuple
    special: tuple
    types: tuple


@lru_cache(maxsize=None)
def frobenius_data(monoid):
    data = FrobeniusData(
        f_left=frobenius(monoid, "left"),
        f_right=frobenius(monoid, "right"),
        f_twosided=frobenius(monoid, "twosided"),
        pf_left=pseudo_frobenius(monoid, "left"),
        pf_right=pseudo_frobenius(monoid, "right"),
        pf_twosided=pseudo_frobenius(monoid, "twosided"),
        special=special_gaps(monoid),
        types=type_numbers(monoid),
    )
    for f_side, pf_side in (
        (data.f_left, data.pf_left),
        (data.f_right, data.pf_right),
        (data.f_twosided, data.pf_twosided),
    ):
        if not set(f_side) <= set(pf_side):
            raise RuntimeError("Frobenius set escaped the pseudo-Frobenius set")
    if not set(data.f_twosided) <= set(data.special):
        raise RuntimeError("two-sided Frobenius gap failed the special-gap test")
    return data

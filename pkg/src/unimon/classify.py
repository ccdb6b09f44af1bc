"""Irreducibility, symmetry classes, and genus-by-genus enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import EmptyGaps, Infeasible
from .frobenius import (
    FrobeniusData,
    frobenius,
    frobenius_data,
    pseudo_frobenius,
    pseudo_frobenius_by_definition,
    special_gaps,
)
from .ideals import _search_budget, as_monoid, oversemigroups, torsion_idempotents
from .apery import apery, apery_maximal
from .matrices import UniMatrix
from .monoid import Monoid
from .orders import SIDES, Order, ambient_order, count_below


def _sees_frobenius(monoid, gap, frob, kind):
    """Does the Frobenius set meet the translate cone of the gap?

    The left divisibility order captures membership in gap * S, the right
    order membership in S * gap, and the two-sided order their overlap.
    """
    order = Order(kind, monoid)
    return any(order.leq(gap, c) for c in frob)


def is_symmetric(monoid):
    """Every gap reaches the two-sided Frobenius set along one of its cones."""
    frob = frobenius(monoid, "twosided")
    return all(
        _sees_frobenius(monoid, a, frob, "left")
        or _sees_frobenius(monoid, a, frob, "right")
        for a in monoid.sorted_gaps()
    )


def is_strongly_symmetric(monoid):
    """Every gap reaches the Frobenius set inside both cones at once."""
    frob = frobenius(monoid, "twosided")
    return all(
        _sees_frobenius(monoid, a, frob, "twosided") for a in monoid.sorted_gaps()
    )


def pseudo_symmetry_witnesses(monoid, strong=False):
    """Gaps B with B*B in the Frobenius set that every other gap can reach past.

    With ``strong`` the remaining gaps must reach the Frobenius set inside
    both cones; otherwise one cone suffices.
    """
    frob = frobenius(monoid, "twosided")
    gaps = monoid.sorted_gaps()
    out = []
    for b in gaps:
        if b * b not in frob:
            continue
        if strong:
            ok = all(
                _sees_frobenius(monoid, a, frob, "twosided")
                for a in gaps
                if a != b
            )
        else:
            ok = all(
                _sees_frobenius(monoid, a, frob, "left")
                or _sees_frobenius(monoid, a, frob, "right")
                for a in gaps
                if a != b
            )
        if ok:
            out.append(b)
    return tuple(out)


def is_pseudo_symmetric(monoid):
    witnesses = pseudo_symmetry_witnesses(monoid)
    return (True, witnesses[0]) if witnesses else (False, None)


def is_strongly_pseudo_symmetric(monoid):
    witnesses = pseudo_symmetry_witnesses(monoid, strong=True)
    return (True, witnesses[0]) if witnesses else (False, None)


def one_sided_conditions(monoid):
    """The three sufficient irreducibility tests, one per Frobenius side.

    For each side the test asks for a singleton Frobenius set that every
    gap reaches along at least one cone.  Returns a mapping from side to
    (holds, failing gaps); the gap list ignores the singleton requirement,
    so it names the exact translate failures.
    """
    out = {}
    for side in SIDES:
        frob = frobenius(monoid, side)
        failing = tuple(
            a
            for a in monoid.sorted_gaps()
            if not (
                _sees_frobenius(monoid, a, frob, "left")
                or _sees_frobenius(monoid, a, frob, "right")
            )
        )
        out[side] = (len(frob) == 1 and not failing, failing)
    return out


def irreducibility_sufficient(monoid):
    """True when one of the one-sided tests certifies irreducibility."""
    return any(holds for holds, _ in one_sided_conditions(monoid).values())


@lru_cache(maxsize=None)
def is_irreducible(monoid, method="oracle"):
    """Decide irreducibility; reducible monoids come with a cutting pair.

    Adjoining a special gap always yields a strictly larger monoid, and two
    distinct such adjunctions meet back in the monoid, so two special gaps
    settle the reducible case at once.  Past that shortcut, ``oracle``
    scans the proper oversemigroups for a pair meeting in the monoid,
    while ``torsion`` asks the idempotent lattice for a unique minimal
    nontrivial idempotent together with the Frobenius set matching the
    special gaps.
    """
    if method not in ("oracle", "torsion"):
        raise ValueError(f"unknown method {method!r}")
    if not monoid.gaps:
        raise EmptyGaps("irreducibility concerns monoids with gaps")
    special = special_gaps(monoid)
    if len(special) >= 2:
        first, second = (monoid.adjoin(g) for g in special[:2])
        if first.intersect(second) != monoid:
            raise RuntimeError("special gap adjunctions failed to meet in the monoid")
        return False, (first, second)
    if method == "oracle":
        proper = [t for t in oversemigroups(monoid) if t.gaps != monoid.gaps]
        for i, first in enumerate(proper):
            for second in proper[i + 1:]:
                if first.intersect(second) == monoid:
                    return False, (first, second)
        return True, None
    lattice = torsion_idempotents(monoid)
    atoms = lattice.minimal_nontrivial
    if len(atoms) == 1:
        if frobenius(monoid, "twosided") != special:
            raise RuntimeError(
                "unique minimal idempotent, yet the Frobenius set misses a special gap"
            )
        return True, None
    if len(atoms) < 1:
        raise RuntimeError("a gapped monoid always sits below a minimal idempotent")
    first, second = (as_monoid(lattice.nodes[i]) for i in atoms[:2])
    if first.intersect(second) != monoid:
        raise RuntimeError("minimal idempotents failed to cut the monoid back out")
    return False, (first, second)


@dataclass(frozen=True)
class ClassificationReport:
    """Everything classify computes for one monoid.

    ``witness`` is a pair of strictly larger monoids meeting in the monoid
    when it is reducible.  ``counts`` is the (members, gaps) pair of the
    ambient interval below the unique two-sided Frobenius point, or None
    when that point is not unique.
    """

    monoid: Monoid
    generating_number: int
    conductor: int
    genus: int
    sporadicity: int
    frobenius: FrobeniusData
    irreducible: bool
    witness: tuple | None
    symmetry: str
    strong: bool
    pseudo_witness: UniMatrix | None
    counts: tuple | None


def classify(monoid):
    """Classify one monoid, cross-checking both irreducibility methods.

    Irreducible monoids land in exactly one of the classes ``symmetric``
    and ``pseudo_symmetric``; anything else is an internal error.
    Reducible monoids are reported with class ``none`` and a witness pair.
    """
    data = frobenius_data(monoid)
    irreducible, witness = is_irreducible(monoid, "oracle")
    by_torsion, _ = is_irreducible(monoid, "torsion")
    if by_torsion != irreducible:
        raise RuntimeError("oversemigroup and torsion methods disagree")
    symmetry, strong, pseudo_b = "none", False, None
    if irreducible:
        symmetric = is_symmetric(monoid)
        pseudo, pseudo_b = is_pseudo_symmetric(monoid)
        if symmetric == pseudo:
            raise RuntimeError(
                "an irreducible monoid is symmetric or pseudo-symmetric, never both"
            )
        if symmetric:
            symmetry, strong, pseudo_b = "symmetric", is_strongly_symmetric(monoid), None
        else:
            symmetry = "pseudo_symmetric"
            strong, strong_b = is_strongly_pseudo_symmetric(monoid)
            if strong:
                pseudo_b = strong_b
    counts = None
    if len(data.f_twosided) == 1:
        counts = count_below(
            monoid, data.f_twosided[0], ambient_order(monoid.group)
        )
    return ClassificationReport(
        monoid=monoid,
        generating_number=monoid.generating_number,
        conductor=monoid.conductor,
        genus=monoid.genus,
        sporadicity=monoid.sporadicity,
        frobenius=data,
        irreducible=irreducible,
        witness=witness,
        symmetry=symmetry,
        strong=strong,
        pseudo_witness=pseudo_b,
        counts=counts,
    )


def _result(ok, detail):
    return {"status": "PASS" if ok else "FAIL", "detail": detail}


def _skipped(detail):
    return {"status": "n/a", "detail": detail}


def verify_theorems(monoid):
    """Run the named structure checks on one monoid.

    Returns an ordered mapping from check name to a status dict; a check
    whose hypothesis is void reports ``n/a``.  Raises EmptyGaps on the
    gap-free monoid, where none of the hypotheses can be formed.
    """
    if not monoid.gaps:
        raise EmptyGaps("theorem checks need a gap")
    data = frobenius_data(monoid)
    mingens = monoid.minimal_generators
    irreducible, _ = is_irreducible(monoid, "oracle")
    by_torsion, _ = is_irreducible(monoid, "torsion")
    symmetric = is_symmetric(monoid)
    strongly = is_strongly_symmetric(monoid)
    pseudo, _ = is_pseudo_symmetric(monoid)
    strongly_pseudo, _ = is_strongly_pseudo_symmetric(monoid)
    checks = {}

    # A subset of the monoid generates it exactly when it holds every
    # minimal generator, so the Apery statement reduces to containment.
    pivots = mingens[: min(3, len(mingens))]
    missing = []
    for side in ("left", "right"):
        for pivot in pivots:
            ap = apery(monoid, pivot, side)
            missing.extend(
                (side, pivot, g)
                for g in mingens
                if g != pivot and not ap.contains(g)
            )
    checks["apery_generates"] = _result(
        not missing,
        f"minimal generators sit inside the Apery sets of {len(pivots)} pivots per side"
        if not missing
        else f"generators escaped: {missing[:3]}",
    )

    bad = [
        side
        for side in SIDES
        if pseudo_frobenius(monoid, side) != pseudo_frobenius_by_definition(monoid, side)
    ]
    checks["pf_equals_gap_maxima"] = _result(
        not bad,
        "divisibility maxima match the absorption filter on all sides"
        if not bad
        else f"mismatch on {bad}",
    )

    try:
        pivot = mingens[0]
        inv = pivot.inverse()
        bad = []
        for side in SIDES:
            pf = pseudo_frobenius(monoid, side)
            if side == "right":
                expected = sorted(f * pivot for f in pf if monoid.contains(f * pivot))
            else:
                expected = sorted(pivot * f for f in pf)
                if side == "left":
                    expected = sorted(a for a in expected if monoid.contains(a))
            if list(apery_maximal(monoid, pivot, side)) != expected:
                bad.append(side)
        left_pull = {inv * a for a in apery_maximal(monoid, pivot, "left")}
        right_pull = {a * inv for a in apery_maximal(monoid, pivot, "right")}
        if left_pull & right_pull != set(pseudo_frobenius(monoid, "twosided")):
            bad.append("pullback intersection")
        checks["pf_from_apery_maxima"] = _result(
            not bad,
            f"Apery maxima pull back to the pseudo-Frobenius sets, pivot {monoid.group.label(pivot)}"
            if not bad
            else f"mismatch on {bad}",
        )
    except RuntimeError as err:
        checks["pf_from_apery_maxima"] = _result(False, str(err))

    bad = [
        side
        for side, f_side, pf_side in (
            ("left", data.f_left, data.pf_left),
            ("right", data.f_right, data.pf_right),
            ("twosided", data.f_twosided, data.pf_twosided),
        )
        if not set(f_side) <= set(pf_side)
    ]
    checks["frobenius_subset_of_pf"] = _result(
        not bad,
        "all three sides nest" if not bad else f"escape on {bad}",
    )

    if not irreducible:
        checks["irreducible_forces_unique_frobenius"] = _skipped("the monoid is reducible")
    else:
        ok = len(data.f_twosided) == 1 and data.f_twosided == data.special
        checks["irreducible_forces_unique_frobenius"] = _result(
            ok,
            f"F = {[monoid.group.label(c) for c in data.f_twosided]}, special = "
            f"{[monoid.group.label(c) for c in data.special]}",
        )

    checks["unique_minimal_idempotent_criterion"] = _result(
        by_torsion == irreducible,
        f"oversemigroup method says {irreducible}, torsion method says {by_torsion}",
    )

    if not irreducible:
        checks["strong_symmetry_split"] = _skipped("the monoid is reducible")
    elif symmetric == pseudo:
        checks["strong_symmetry_split"] = _result(
            False,
            "both symmetry classes hold" if symmetric else "neither symmetry class holds",
        )
    elif symmetric:
        checks["strong_symmetry_split"] = _result(
            strongly, "symmetric, strongly" if strongly else "symmetric but not strongly"
        )
    else:
        checks["strong_symmetry_split"] = _result(
            strongly_pseudo,
            "pseudo-symmetric, strongly"
            if strongly_pseudo
            else "pseudo-symmetric but not strongly",
        )

    if not symmetric:
        checks["symmetric_forces_unique_pf"] = _skipped("the monoid is not symmetric")
    else:
        ok = len(data.pf_twosided) == 1 and data.pf_twosided == data.f_twosided
        checks["symmetric_forces_unique_pf"] = _result(
            ok, f"PF = {[monoid.group.label(c) for c in data.pf_twosided]}"
        )

    if not (strongly and len(data.f_twosided) == 1):
        checks["symmetric_count_identity"] = _skipped(
            "needs strong symmetry and a unique Frobenius point"
        )
    else:
        counts = count_below(
            monoid, data.f_twosided[0], ambient_order(monoid.group)
        )
        checks["symmetric_count_identity"] = _result(
            counts == (monoid.genus, monoid.genus),
            f"interval counts {counts}, genus {monoid.genus}",
        )

    if monoid.group.tag != "first_row":
        checks["cube_volume_identity"] = _skipped("stated for row patterns only")
    elif len(data.f_twosided) != 1:
        checks["cube_volume_identity"] = _skipped("needs a unique Frobenius point")
    else:
        c = data.f_twosided[0]
        volume = 1
        for i, j in monoid.group.sorted_positions():
            volume *= c.entry(i, j) + 1
        if symmetric:
            checks["cube_volume_identity"] = _result(
                volume == 2 * monoid.genus,
                f"box volume {volume}, twice the genus {2 * monoid.genus}",
            )
        elif pseudo:
            checks["cube_volume_identity"] = _result(
                volume == 2 * monoid.genus - 1,
                f"box volume {volume}, twice the genus less one {2 * monoid.genus - 1}",
            )
        else:
            checks["cube_volume_identity"] = _skipped("needs a symmetry class")

    if len(data.f_twosided) != 1:
        checks["frobenius_maximality"] = _skipped("needs a unique Frobenius point")
    else:
        c = data.f_twosided[0]
        proper = [t for t in oversemigroups(monoid) if t.gaps != monoid.gaps]
        avoiding = [t for t in proper if c in t.gaps]
        checks["frobenius_maximality"] = _result(
            (not avoiding) == irreducible,
            f"{len(avoiding)} proper oversemigroups avoid the Frobenius point",
        )

    return checks


@lru_cache(maxsize=None)
def enumerate_monoids(group, genus):
    """Every monoid of the group with the given genus, canonically sorted.

    Walks the removal tree rooted at the gap-free monoid: a child drops a
    minimal generator beyond the largest gap, and the parent restores that
    largest gap, so each monoid is reached exactly once.  Products strictly
    dominate their factors entrywise, which makes the cellwise order
    climb along multiplication; that is what keeps each removal closed and
    each parent valid.  The walk honors the UNIMON_MAX_NODES budget.
    """
    if genus < 0:
        raise ValueError("genus is a cardinality")
    budget = _search_budget()
    visited = 0
    level = [Monoid(group, frozenset())]
    for _ in range(genus):
        grown = []
        for monoid in level:
            fence = max(monoid.gaps) if monoid.gaps else None
            for m in monoid.minimal_generators:
                if fence is not None and not fence < m:
                    continue
                grown.append(Monoid(group, monoid.gaps | {m}))
                visited += 1
                if visited > budget:
                    raise Infeasible(
                        f"removal tree passed {budget} nodes; raise UNIMON_MAX_NODES"
                    )
        level = grown
    return tuple(sorted(level, key=Monoid.sort_key))


def enumerate_irreducible(group, genus):
    """Irreducible monoids of the given genus.

    Genus zero returns the gap-free monoid itself: nothing properly
    contains it, so it cannot be cut out by larger monoids and the
    irreducibility question is void.
    """
    if genus == 0:
        return (Monoid(group, frozenset()),)
    return tuple(
        monoid
        for monoid in enumerate_monoids(group, genus)
        if is_irreducible(monoid)[0]
    )

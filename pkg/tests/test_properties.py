"""Structural properties checked across fixtures and random samples.

The random monoids come from the removal tree, so every sample is valid by
construction and the checks here probe the theory, not the parser.
"""

import pytest

from unimon import (
    Monoid,
    Order,
    apery,
    apery_maximal,
    cofinite_ideal,
    frobenius,
    from_generators,
    pseudo_frobenius,
    special_gaps,
)
from unimon.errors import NotClosed
from unimon.frobenius import pseudo_frobenius_by_definition
from unimon.fixtures import EXAMPLES
from unimon.matrices import entrywise_subbox
from unimon.orders import SIDES, is_lower_order_ideal_boxed


def fixture_monoids():
    return [build() for build in EXAMPLES.values()]


def spread(samples, limit):
    # deterministic thinning keeps runtime flat while touching both ends
    step = max(1, len(samples) // limit)
    return samples[::step][:limit]


def test_frobenius_nests_in_pseudo_frobenius(plane_samples, u3_samples):
    for m in fixture_monoids() + spread(plane_samples, 20) + spread(u3_samples, 20):
        for side in SIDES:
            assert set(frobenius(m, side)) <= set(pseudo_frobenius(m, side))


def test_pseudo_frobenius_matches_definition(plane_samples, u3_samples):
    for m in spread(plane_samples, 15) + spread(u3_samples, 15):
        for side in SIDES:
            assert pseudo_frobenius(m, side) == pseudo_frobenius_by_definition(m, side)


def test_apery_maxima_are_pivot_translates(plane_samples, u3_samples):
    # one-sided translates only count when they land in the monoid; the
    # two-sided pseudo-Frobenius pullbacks are exactly the intersection
    for m in spread(plane_samples, 10) + spread(u3_samples, 10):
        pivots = m.minimal_generators[:2]
        pf_t = set(pseudo_frobenius(m, "twosided"))
        for pivot in pivots:
            inv = pivot.inverse()
            for side in ("left", "right"):
                pf = pseudo_frobenius(m, side)
                if side == "right":
                    expected = sorted(f * pivot for f in pf if m.contains(f * pivot))
                else:
                    expected = sorted(pivot * f for f in pf if m.contains(pivot * f))
                assert list(apery_maximal(m, pivot, side)) == expected
            left_pull = {inv * a for a in apery_maximal(m, pivot, "left")}
            right_pull = {a * inv for a in apery_maximal(m, pivot, "right")}
            assert left_pull & right_pull == pf_t


def test_apery_sets_carry_the_other_generators(plane_samples, u3_samples):
    # X generates the monoid exactly when X holds every minimal generator,
    # so pivot plus its Apery set generating is a containment statement
    for m in spread(plane_samples, 10) + spread(u3_samples, 10):
        for pivot in m.minimal_generators[:2]:
            for side in ("left", "right"):
                ap = apery(m, pivot, side)
                for g in m.minimal_generators:
                    assert g == pivot or ap.contains(g)


def test_special_gaps_are_exactly_the_adjoinable_gaps(plane_samples, u3_samples):
    for m in spread(plane_samples, 15) + spread(u3_samples, 15):
        special = set(special_gaps(m))
        for g in m.sorted_gaps():
            try:
                Monoid.from_gaps(m.group, m.gaps - {g})
                adjoinable = True
            except NotClosed:
                adjoinable = False
            assert adjoinable == (g in special)


def test_any_frobenius_subset_adjoins(plane_samples, u3_samples):
    # two-sided Frobenius points absorb everything, so any selection of
    # them can be added at once and closure survives
    for m in spread(plane_samples, 10) + spread(u3_samples, 10):
        frob = frobenius(m, "twosided")[:3]
        for mask in range(1, 1 << len(frob)):
            chosen = {f for i, f in enumerate(frob) if mask >> i & 1}
            Monoid.from_gaps(m.group, m.gaps - chosen)


def test_one_sided_frobenius_adjunction_is_an_ideal(plane_samples, u3_samples):
    # members plus the left-absorbing gaps stay stable under right
    # multiplication, in ideal form: the complement is the rest of the gaps
    for m in spread(plane_samples, 10) + spread(u3_samples, 10):
        left_absorbing = set(frobenius(m, "left"))
        ideal = cofinite_ideal(m, "right", m.gaps - left_absorbing)
        assert ideal.contains_base()
        assert set(ideal.gap_part()) == left_absorbing


def test_translate_upsets_are_boxed_order_ideals(plane_samples, u3_samples):
    for m in spread(plane_samples, 6) + spread(u3_samples, 6):
        pivot = m.minimal_generators[0]
        bound = 2 * pivot.max_entry() + 2
        for kind in ("left", "right"):
            order = Order(kind, m)
            upset = lambda x: m.contains(x) and order.leq(pivot, x)
            assert is_lower_order_ideal_boxed(m, order, upset, bound)
            # the bare pivot is not stable: its own square dominates it
            only = lambda x: x == pivot
            assert not is_lower_order_ideal_boxed(m, order, only, bound)


def test_minimal_generators_regenerate_the_monoid(plane_samples, u3_samples):
    for m in spread(plane_samples, 8) + spread(u3_samples, 8):
        rebuilt = from_generators(
            m.group, m.minimal_generators, 2 * m.generating_number + 2
        )
        assert rebuilt == m


def test_minimal_generators_do_not_factor(plane_samples, u3_samples):
    one_by_group = {}
    for m in spread(plane_samples, 15) + spread(u3_samples, 15):
        one = one_by_group.setdefault(m.group, m.group.identity())
        for g in m.minimal_generators:
            for a in entrywise_subbox(g):
                if a == one or a == g or not m.contains(a):
                    continue
                rest = a.inverse() * g
                assert not m.contains(rest), (g, a)

import pytest

from unimon import (
    Monoid,
    as_monoid,
    cofinite_ideal,
    ideal_contains,
    ideal_from_generators,
    ideal_intersection,
    ideal_min_generators,
    ideal_product,
    ideal_union,
    is_idempotent,
    oversemigroups,
    torsion_element,
    torsion_idempotents,
    torsion_monoid,
)
from unimon.errors import IdealMismatch, NotAnIdeal, NotCofinite
from unimon.fixtures import (
    plane_fundamental_2,
    plane_reducible,
    u3_type_2_2_1,
)
from unimon.matrices import PatternGroup, UniMatrix

PLANE = PatternGroup.first_row(3)


def vec(a, b):
    return UniMatrix.from_vector([a, b])


def rows(points):
    return sorted(p.first_row() for p in points)


def gap_rows(ideal):
    return rows(ideal.gap_part())


def test_monoid_as_its_own_ideal():
    m = plane_fundamental_2()
    ideal = cofinite_ideal(m, "left", m.gaps)
    assert ideal.contains_base()
    assert gap_rows(ideal) == []
    assert rows(ideal_min_generators(ideal)) == [(0, 0)]


def test_ideal_with_one_extra_gap():
    m = plane_fundamental_2()
    ideal = cofinite_ideal(m, "left", {vec(0, 1), vec(1, 0)})
    assert gap_rows(ideal) == [(1, 1)]
    assert rows(ideal_min_generators(ideal)) == [(0, 0), (1, 1)]


def test_cofinite_ideal_rejects_unstable_complement():
    m = plane_reducible()
    # excluding only (0,3) leaves (0,1) inside, and (0,1)+(0,2) = (0,3)
    with pytest.raises(NotAnIdeal) as info:
        cofinite_ideal(m, "left", {vec(0, 3)})
    assert info.value.product.first_row() == (0, 3)


def test_cofinite_ideal_multipliers_are_members_only():
    m = plane_fundamental_2()
    # (0,1)+(1,0) = (1,1), but neither summand is a member, so the
    # complement {(1,1)} is stable and the ideal stands
    ideal = cofinite_ideal(m, "left", {vec(1, 1)})
    assert gap_rows(ideal) == [(0, 1), (1, 0)]
    assert ideal_contains(ideal, vec(0, 1))
    assert not ideal_contains(ideal, vec(1, 1))


def test_generated_ideal_membership():
    m = plane_fundamental_2()
    ideal = ideal_from_generators(m, "left", [vec(1, 1)])
    # (1,1) + (0,2) = (1,3) lies in the left translate
    assert ideal_contains(ideal, vec(1, 3))
    assert not ideal_contains(ideal, vec(0, 2))
    assert not ideal.is_cofinite


def test_generated_ideal_min_generators():
    m = plane_fundamental_2()
    ideal = ideal_from_generators(m, "left", [vec(1, 1), vec(1, 3)])
    # (1,3) = (1,1) + (0,2) is redundant
    assert rows(ideal_min_generators(ideal, bound=8)) == [(1, 1)]


def test_ideal_product_gap_part():
    m = plane_fundamental_2()
    a = cofinite_ideal(m, "twosided", {vec(0, 1), vec(1, 0)})
    product = ideal_product(a, a)
    # the identity sits in a, so a*a absorbs a itself; (1,1) survives
    assert gap_rows(product) == [(1, 1)]
    assert sorted(c.first_row() for c in product.complement) == [(0, 1), (1, 0)]
    assert product.side == "twosided"


def test_ideal_union_intersection():
    m = plane_fundamental_2()
    s_itself = cofinite_ideal(m, "twosided", m.gaps)
    bigger = cofinite_ideal(m, "twosided", {vec(0, 1), vec(1, 0)})
    union = ideal_union(s_itself, bigger)
    meet = ideal_intersection(s_itself, bigger)
    assert gap_rows(union) == [(1, 1)]
    assert gap_rows(meet) == []


def test_side_mismatch_rejected():
    m = plane_fundamental_2()
    a = cofinite_ideal(m, "left", m.gaps)
    b = cofinite_ideal(m, "right", m.gaps)
    with pytest.raises(IdealMismatch):
        ideal_union(a, b)


def test_min_generators_of_generated_ideal():
    m = plane_fundamental_2()
    lazy = ideal_from_generators(m, "left", [vec(1, 1), vec(1, 3)])
    # (1,3) = (1,1)+(0,2) factors through a member, so only (1,1) survives
    assert [x.first_row() for x in ideal_min_generators(lazy)] == [(1, 1)]


def test_min_generators_of_lazy_expression_needs_bound():
    m = plane_fundamental_2()
    a = ideal_from_generators(m, "left", [vec(1, 1)])
    product = ideal_product(a, a)
    with pytest.raises(NotCofinite):
        ideal_min_generators(product)
    bounded = ideal_min_generators(product, bound=8)
    assert [x.first_row() for x in bounded] == [(2, 2)]


def test_torsion_element_validation():
    m = plane_fundamental_2()
    element = torsion_element(m, {vec(1, 1)})
    assert gap_rows(element) == [(1, 1)]
    with pytest.raises(ValueError):
        torsion_element(m, {vec(9, 9)})


def test_torsion_monoid_of_fundamental_plane():
    m = plane_fundamental_2()
    elements = torsion_monoid(m)
    assert len(elements) == 8
    parts = {frozenset(p.first_row() for p in e.gap_part()) for e in elements}
    assert frozenset() in parts
    assert frozenset({(0, 1), (1, 0)}) in parts  # ideal but not idempotent
    idempotent = [e for e in elements if is_idempotent(e)]
    assert len(idempotent) == 7


def test_idempotents_are_monoids():
    m = plane_fundamental_2()
    for e in torsion_monoid(m):
        if is_idempotent(e):
            back = as_monoid(e)
            assert isinstance(back, Monoid)
            assert back.gaps == m.gaps - set(e.gap_part())


def test_idempotent_lattice_structure():
    lattice = torsion_idempotents(plane_fundamental_2())
    assert len(lattice.nodes) == 7
    assert len(lattice.hasse_edges) == 9
    parts = [frozenset(p.first_row() for p in n.gap_part()) for n in lattice.nodes]
    # hand-computed cover relations, compared as gap-part set pairs
    expected = {
        (frozenset(), frozenset({(0, 1)})),
        (frozenset(), frozenset({(1, 0)})),
        (frozenset(), frozenset({(1, 1)})),
        (frozenset({(0, 1)}), frozenset({(0, 1), (1, 1)})),
        (frozenset({(1, 0)}), frozenset({(1, 0), (1, 1)})),
        (frozenset({(1, 1)}), frozenset({(0, 1), (1, 1)})),
        (frozenset({(1, 1)}), frozenset({(1, 0), (1, 1)})),
        (frozenset({(0, 1), (1, 1)}), frozenset({(0, 1), (1, 0), (1, 1)})),
        (frozenset({(1, 0), (1, 1)}), frozenset({(0, 1), (1, 0), (1, 1)})),
    }
    edges = {(parts[i], parts[j]) for i, j in lattice.hasse_edges}
    assert edges == expected
    atoms = {parts[i] for i in lattice.minimal_nontrivial}
    assert atoms == {
        frozenset({(0, 1)}),
        frozenset({(1, 0)}),
        frozenset({(1, 1)}),
    }


def test_oversemigroups_of_type_fixture():
    m = u3_type_2_2_1()
    monoids = oversemigroups(m)
    assert len(monoids) == 9
    assert monoids[0] == m
    assert monoids[-1].gaps == frozenset()
    # all are valid monoids above m
    for t in monoids:
        assert t.gaps <= m.gaps


def test_oversemigroups_of_reducible_plane():
    m = plane_reducible()
    monoids = oversemigroups(m)
    gap_sets = [frozenset(p.first_row() for p in t.gaps) for t in monoids]
    first = frozenset({(0, 1), (1, 0), (0, 3)})
    second = frozenset({(0, 1), (1, 0), (3, 0)})
    assert first in gap_sets and second in gap_sets
    a = monoids[gap_sets.index(first)]
    b = monoids[gap_sets.index(second)]
    assert a.intersect(b) == m


def test_torsion_cayley_table_is_monoid():
    base = plane_fundamental_2()
    elements = torsion_monoid(base)
    key = lambda e: frozenset(e.gap_part())
    lookup = {key(e): e for e in elements}
    identity = lookup[frozenset()]

    def mul(x, y):
        return lookup[key(ideal_product(x, y))]

    for x in elements:
        assert key(mul(x, identity)) == key(x)
        assert key(mul(identity, x)) == key(x)
        for y in elements:
            assert key(ideal_product(x, y)) in lookup
            for z in elements:
                left = mul(mul(x, y), z)
                right = mul(x, mul(y, z))
                assert key(left) == key(right)

    units = [
        (x, y)
        for x in elements
        for y in elements
        if key(mul(x, y)) == frozenset() and key(x) != frozenset()
    ]
    assert units == []

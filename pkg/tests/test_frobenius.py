import pytest

from unimon import (
    EmptyGaps,
    Monoid,
    cofinite_ideal,
    frobenius,
    frobenius_data,
    pf_of_cofinite_ideal,
    pseudo_frobenius,
    special_gaps,
    type_numbers,
)
from unimon.frobenius import pseudo_frobenius_by_definition
from unimon.fixtures import (
    plane_antidiagonal,
    plane_pseudo_symmetric,
    plane_reducible,
    plane_symmetric,
    u3_balanced_reducible,
    u3_left_right_differ,
    u3_type_2_2_1,
)
from unimon.matrices import PatternGroup, UniMatrix

PLANE = PatternGroup.first_row(3)


def rows(points):
    return sorted(p.first_row() for p in points)


def triples(points):
    return sorted(tuple(p.cells) for p in points)


def test_reducible_plane_frobenius():
    m = plane_reducible()
    assert rows(frobenius(m, "twosided")) == [(0, 3), (3, 0)]
    assert rows(special_gaps(m)) == [(0, 3), (3, 0)]


def test_left_right_differ():
    m = u3_left_right_differ()
    # third element of the right set confirmed by the raw-tuple oracle;
    # the tight product is (0,1,0) * (1,1,2) = (1,2,2), a sporadic member
    assert triples(frobenius(m, "right")) == [(0, 2, 2), (1, 1, 2), (2, 2, 2)]
    assert triples(frobenius(m, "left")) == [(2, 2, 0), (2, 2, 1), (2, 2, 2)]
    assert frobenius(m, "left") != frobenius(m, "right")
    assert triples(frobenius(m, "twosided")) == [(2, 2, 2)]


def test_type_numbers_fixture():
    m = u3_type_2_2_1()
    assert triples(frobenius(m, "left")) == [(1, 1, 1)]
    assert triples(frobenius(m, "right")) == [(1, 1, 1)]
    assert triples(frobenius(m, "twosided")) == [(1, 1, 1)]
    assert triples(pseudo_frobenius(m, "left")) == [(1, 0, 0), (1, 1, 1)]
    assert triples(pseudo_frobenius(m, "right")) == [(0, 0, 1), (1, 1, 1)]
    assert triples(pseudo_frobenius(m, "twosided")) == [(1, 1, 1)]
    assert type_numbers(m) == (2, 2, 1)


def test_balanced_reducible_has_wide_frobenius():
    m = u3_balanced_reducible()
    assert len(frobenius(m, "twosided")) >= 2


def test_antidiagonal_pf():
    m = plane_antidiagonal()
    expected = [(0, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 0)]
    assert rows(pseudo_frobenius(m, "twosided")) == expected
    assert rows(frobenius(m, "twosided")) == expected


def test_symmetric_fixture_unique_frobenius():
    m = plane_symmetric()
    assert rows(frobenius(m, "twosided")) == [(3, 3)]
    assert rows(pseudo_frobenius(m, "twosided")) == [(3, 3)]


def test_pseudo_symmetric_fixture():
    m = plane_pseudo_symmetric()
    assert rows(frobenius(m, "twosided")) == [(2, 2)]
    assert rows(special_gaps(m)) == [(2, 2)]


def test_pf_by_definition_matches_maxima():
    for m in (plane_reducible(), u3_type_2_2_1(), u3_left_right_differ()):
        for side in ("left", "right", "twosided"):
            assert pseudo_frobenius(m, side) == pseudo_frobenius_by_definition(
                m, side
            )


def test_frobenius_subsets_pf():
    for m in (plane_reducible(), u3_left_right_differ(), plane_antidiagonal()):
        for side in ("left", "right", "twosided"):
            assert set(frobenius(m, side)) <= set(pseudo_frobenius(m, side))


def test_empty_gaps_raises():
    free = Monoid(PLANE, frozenset())
    with pytest.raises(EmptyGaps):
        frobenius(free, "twosided")
    with pytest.raises(EmptyGaps):
        pseudo_frobenius(free, "left")


def test_bad_side_rejected():
    m = plane_reducible()
    with pytest.raises(Exception):
        frobenius(m, "up")


def test_frobenius_data_bundle():
    m = u3_type_2_2_1()
    data = frobenius_data(m)
    assert data.types == (2, 2, 1)
    assert triples(data.special) == [(1, 1, 1)]
    assert data.f_left == frobenius(m, "left")


def test_pf_of_cofinite_ideal():
    m = plane_pseudo_symmetric()
    # the monoid viewed as an ideal over itself: excluded points are the gaps
    ideal = cofinite_ideal(m, "left", m.gaps)
    assert rows(pf_of_cofinite_ideal(ideal, "left")) == rows(
        pseudo_frobenius(m, "left")
    )


def test_oracle_cross_check_on_samples(plane_samples, u3_samples):
    import oracles as o

    for sample, mul, flatten in (
        (plane_samples[:8], o.plane_mul, rows),
        (u3_samples[:8], o.u3_mul, triples),
    ):
        for m in sample:
            gaps = [
                p.first_row() if flatten is rows else tuple(p.cells)
                for p in m.gaps
            ]
            bound = max(max(g) for g in gaps) + 2
            f_left, f_right = o.frobenius_sets(gaps, mul, bound)
            assert flatten(frobenius(m, "left")) == f_left
            assert flatten(frobenius(m, "right")) == f_right
            pf_left, pf_right = o.pseudo_frobenius_sets(gaps, mul, bound)
            assert flatten(pseudo_frobenius(m, "left")) == pf_left
            assert flatten(pseudo_frobenius(m, "right")) == pf_right
            assert flatten(special_gaps(m)) == o.special_gaps(gaps, mul, bound)

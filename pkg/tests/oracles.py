"""Reference implementations on raw tuples, used to cross-check the
library.  Nothing here imports the package under test.

Plane points are pairs (a, b) under addition.  Size-3 full-pattern
points are triples (a, b, c) with the product
(a,b,c)(a',b',c') = (a+a', b+b'+a*c', c+c').
"""

from itertools import product as iproduct


def plane_mul(x, y):
    return (x[0] + y[0], x[1] + y[1])


def u3_mul(x, y):
    return (x[0] + y[0], x[1] + y[1] + x[0] * y[2], x[2] + y[2])


def member_fn(gaps):
    gapset = set(gaps)

    def member(t):
        return all(v >= 0 for v in t) and t not in gapset

    return member


def box(dim, bound):
    return list(iproduct(range(bound), repeat=dim))


def nonidentity_box(dim, bound):
    return [t for t in box(dim, bound) if any(t)]


def frobenius_sets(gaps, mul, bound):
    """(F_left, F_right): the left set absorbs group multipliers on the
    right, mirroring the library convention."""
    member = member_fn(gaps)
    dim = len(next(iter(gaps)))
    others = nonidentity_box(dim, bound)
    f_left = sorted(a for a in gaps if all(member(mul(a, b)) for b in others))
    f_right = sorted(a for a in gaps if all(member(mul(b, a)) for b in others))
    return f_left, f_right


def pseudo_frobenius_sets(gaps, mul, bound):
    member = member_fn(gaps)
    dim = len(next(iter(gaps)))
    members = [t for t in nonidentity_box(dim, bound) if member(t)]
    pf_left = sorted(a for a in gaps if all(member(mul(a, b)) for b in members))
    pf_right = sorted(a for a in gaps if all(member(mul(b, a)) for b in members))
    return pf_left, pf_right


def special_gaps(gaps, mul, bound):
    pf_left, pf_right = pseudo_frobenius_sets(gaps, mul, bound)
    member = member_fn(gaps)
    return sorted(g for g in set(pf_left) & set(pf_right) if member(mul(g, g)))


def valid_gap_subsets(gaps, mul, bound):
    """Gap sets of all oversemigroups: subsets K of the gap set such that
    the complement submonoid stays closed.  Exponential in the gap count."""
    gaps = sorted(gaps)
    results = []
    for mask in range(1 << len(gaps)):
        kept = frozenset(g for i, g in enumerate(gaps) if mask >> i & 1)
        member = member_fn(kept)
        universe = [t for t in nonidentity_box(len(gaps[0]), bound) if member(t)]
        ok = True
        for x in universe:
            for y in universe:
                p = mul(x, y)
                if max(p) < bound and not member(p):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(kept)
    return results


def is_irreducible(gaps, mul, bound):
    """Reducible iff two proper oversemigroups intersect back to the monoid:
    their kept gap sets are proper and union to the full gap set."""
    full = frozenset(gaps)
    proper = [k for k in valid_gap_subsets(gaps, mul, bound) if k != full]
    for i, a in enumerate(proper):
        for b in proper[i + 1 :]:
            if a | b == full:
                return False
    return True


def count_below(gaps, top):
    """(members, gaps) in the entrywise box under top, identity included."""
    member = member_fn(gaps)
    inside = list(iproduct(*(range(v + 1) for v in top)))
    members = sum(1 for t in inside if member(t))
    return members, len(inside) - members

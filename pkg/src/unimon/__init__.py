"""Exact computations with unipotent numerical monoids.

The package works with complement-finite submonoids of the nonnegative
integer points of upper-triangular pattern groups.  Everything is exact:
searches run inside certified boxes and raise rather than guess.
"""

from .apery import (
    AperySet,
    apery,
    apery_contains,
    apery_in_box,
    apery_maximal,
    factor_via_apery,
)
from .classify import (
    ClassificationReport,
    classify,
    enumerate_irreducible,
    enumerate_monoids,
    is_irreducible,
    is_pseudo_symmetric,
    is_strongly_pseudo_symmetric,
    is_strongly_symmetric,
    is_symmetric,
    irreducibility_sufficient,
    one_sided_conditions,
    verify_theorems,
)
from .errors import (
    EmptyGaps,
    Infeasible,
    NotAnIdeal,
    NotClosed,
    NotCofinite,
    UnimonError,
    UnsupportedSide,
)
from .frobenius import (
    FrobeniusData,
    frobenius,
    frobenius_data,
    pf_of_cofinite_ideal,
    pseudo_frobenius,
    special_gaps,
    type_numbers,
)
from .ideals import (
    IdempotentLattice,
    RelativeIdeal,
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
from .matrices import PatternGroup, UniMatrix
from .monoid import Monoid, Undecided, from_generators, fundamental_monoid
from .orders import Order, ambient_order, count_below, count_n_g, extremal, interval
from .serialize import MalformedInput, export_dot

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact arithmetic for integer points of unipotent pattern groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iter_product

from .errors import (
    BadPosition,
    NegativeEntry,
    OutOfPattern,
    PatternNotClosed,
    SizeMismatch,
)


@lru_cache(maxsize=None)
def upper_positions(n):
    """Strictly-upper positions of an n by n matrix in row-major order."""
    return tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def _position_index(n):
    return {p: k for k, p in enumerate(upper_positions(n))}


@dataclass(frozen=True, order=True)
class UniMatrix:
    """Upper unitriangular integer matrix, stored by its strictly-upper entries.

    The diagonal is implicitly 1 and everything below it is 0.  ``cells``
    holds the strictly-upper entries in row-major position order; comparing
    ``cells`` lexicographically is the canonical order used for every
    set-valued output of the package.
    """

    n: int
    cells: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise BadPosition(f"matrix size must be at least 2, got {self.n}")
        if len(self.cells) != self.n * (self.n - 1) // 2:
            raise BadPosition(
                f"expected {self.n * (self.n - 1) // 2} strictly-upper entries, "
                f"got {len(self.cells)}"
            )

    @classmethod
    def identity(cls, n):
        return cls(n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_entries(cls, n, entries):
        """Build from a mapping of (row, col) to value; positions are 1-based."""
        idx = _position_index(n)
        cells = [0] * len(idx)
        for (i, j), value in entries.items():
            if (i, j) not in idx:
                raise BadPosition(f"({i},{j}) is not strictly upper in size {n}")
            cells[idx[(i, j)]] = int(value)
        return cls(n, tuple(cells))

    @classmethod
    def from_vector(cls, vector):
        """First-row shorthand: vector (a_2, ..., a_n) fills row one."""
        vector = tuple(int(v) for v in vector)
        n = len(vector) + 1
        return cls.from_entries(n, {(1, j): v for j, v in zip(range(2, n + 1), vector)})

    def entry(self, i, j):
        if i == j:
            return 1
        if i > j:
            return 0
        return self.cells[_position_index(self.n)[(i, j)]]

    def first_row(self):
        return tuple(self.entry(1, j) for j in range(2, self.n + 1))

    def is_identity(self):
        return not any(self.cells)

    def is_nonnegative(self):
        return all(v >= 0 for v in self.cells)

    def max_entry(self):
        """Largest strictly-upper entry; defined only for nonnegative matrices."""
        if not self.is_nonnegative():
            raise NegativeEntry(f"max entry undefined for {self}")
        return max(self.cells)

    def leq_entrywise(self, other):
        self._check_size(other)
        return all(a <= b for a, b in zip(self.cells, other.cells))

    def __mul__(self, other):
        self._check_size(other)
        n = self.n
        idx = _position_index(n)
        cells = []
        for i, j in upper_positions(n):
            v = self.cells[idx[(i, j)]] + other.cells[idx[(i, j)]]
            for k in range(i + 1, j):
                v += self.cells[idx[(i, k)]] * other.cells[idx[(k, j)]]
            cells.append(v)
        return UniMatrix(n, tuple(cells))

    def inverse(self):
        """Exact inverse, solved band by band from the unitriangular shape."""
        n = self.n
        idx = _position_index(n)
        out = [0] * len(idx)
        for width in range(1, n):
            for i in range(1, n - width + 1):
                j = i + width
                v = -self.cells[idx[(i, j)]]
                for k in range(i + 1, j):
                    v -= self.cells[idx[(i, k)]] * out[idx[(k, j)]]
                out[idx[(i, j)]] = v
        return UniMatrix(n, tuple(out))

    def entry_list(self):
        """Nonzero strictly-upper entries as sorted [row, col, value] triples."""
        return [
            [i, j, self.cells[k]]
            for k, (i, j) in enumerate(upper_positions(self.n))
            if self.cells[k]
        ]

    def _check_size(self, other):
        if self.n != other.n:
            raise SizeMismatch(f"sizes {self.n} and {other.n} differ")

    def __repr__(self):
        return f"UniMatrix({self.n}, {self.cells})"


def elementary(n, i, j, value=1):
    """Matrix with a single strictly-upper entry at (i, j)."""
    return UniMatrix.from_entries(n, {(i, j): value})


@dataclass(frozen=True)
class PatternGroup:
    """Closed set of strictly-upper positions defining a unipotent subgroup.

    Closure means that whenever (i, k) and (k, j) are positions, so is
    (i, j); this is exactly what makes the supported matrices stable under
    products and inverses.
    """

    n: int
    positions: frozenset = field(compare=True)
    tag: str = "custom"

    @classmethod
    def full(cls, n):
        return cls(n, frozenset(upper_positions(n)), "full")

    @classmethod
    def first_row(cls, n):
        return cls(n, frozenset((1, j) for j in range(2, n + 1)), "first_row")

    @classmethod
    def custom(cls, n, positions):
        positions = frozenset((int(i), int(j)) for i, j in positions)
        for i, j in positions:
            if not (1 <= i < j <= n):
                raise BadPosition(f"({i},{j}) is not strictly upper in size {n}")
        for i, k in positions:
            for k2, j in positions:
                if k == k2 and (i, j) not in positions:
                    raise PatternNotClosed(
                        f"positions ({i},{k}) and ({k},{j}) force ({i},{j})"
                    )
        if positions == frozenset(upper_positions(n)):
            return cls.full(n)
        if positions == frozenset((1, j) for j in range(2, n + 1)):
            return cls.first_row(n)
        return cls(n, positions, "custom")

    @property
    def dimension(self):
        return len(self.positions)

    def sorted_positions(self):
        return tuple(p for p in upper_positions(self.n) if p in self.positions)

    def identity(self):
        return UniMatrix.identity(self.n)

    def supports(self, matrix):
        """True when every nonzero entry of the matrix sits on the pattern."""
        if matrix.n != self.n:
            raise SizeMismatch(f"matrix size {matrix.n} does not match {self.n}")
        idx = _position_index(self.n)
        return all(
            matrix.cells[k] == 0
            for p, k in idx.items()
            if p not in self.positions
        )

    def contains_point(self, matrix):
        """Membership in the nonnegative points of the group."""
        return (
            matrix.n == self.n
            and matrix.is_nonnegative()
            and self.supports(matrix)
        )

    def require_point(self, matrix):
        if matrix.n != self.n:
            raise SizeMismatch(f"matrix size {matrix.n} does not match {self.n}")
        if not matrix.is_nonnegative():
            raise NegativeEntry(f"{matrix} has a negative entry")
        if not self.supports(matrix):
            raise OutOfPattern(f"{matrix} has support outside the pattern")
        return matrix

    def box(self, bound):
        return enumerate_box(self, bound)

    def label(self, matrix):
        """Compact entry-vector label over the pattern positions."""
        vec = ",".join(str(matrix.entry(i, j)) for i, j in self.sorted_positions())
        return f"({vec})"


def in_group(group, matrix):
    """Support test only; signs are not inspected."""
    return group.supports(matrix)


@lru_cache(maxsize=None)
def enumerate_box(group, bound):
    """All nonnegative in-pattern matrices with every entry below the bound.

    The result is canonically sorted because the cartesian product runs in
    row-major position order.
    """
    if bound < 1:
        return ()
    pos = upper_positions(group.n)
    ranges = [
        range(bound) if p in group.positions else range(1)
        for p in pos
    ]
    return tuple(UniMatrix(group.n, cells) for cells in iter_product(*ranges))


def entrywise_subbox(matrix):
    """All nonnegative matrices entrywise at most the given one."""
    n = matrix.n
    for cells in iter_product(*[range(v + 1) for v in matrix.cells]):
        yield UniMatrix(n, cells)

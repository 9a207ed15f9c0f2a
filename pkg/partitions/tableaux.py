"""
Standard tableaux, their dominance order and the dimensions they count.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from heckecentral.exceptions import InvariantViolation, RangeError, ShapeMismatch
from .shapes import Partition, dominance_leq, partitions_of, transpose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a standard tableau; entries 1..n increase along rows and down columns."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        shape = Partition(tuple(len(row) for row in rows))
        entries = sorted(a for row in rows for a in row)
        if entries != list(range(1, shape.degree + 1)):
            raise ShapeMismatch(f"Tableau {self.as_lists()} does not hold 1..{shape.degree}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ShapeMismatch(f"Tableau {self.as_lists()} has a decreasing row")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ShapeMismatch(f"Tableau {self.as_lists()} has a decreasing column")

    @classmethod
    def superstandard(cls, shape):
        """t^shape: 1..shape[0] along the first row, and so on."""
        rows, start = [], 1
        for part in shape.parts:
            rows.append(tuple(range(start, start + part)))
            start += part
        return cls(tuple(rows))

    @property
    def shape(self):
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def degree(self):
        return sum(len(row) for row in self.rows)

    def positions(self):
        """Map entry -> (row, column)."""
        return {
            entry: (i, j)
            for i, row in enumerate(self.rows)
            for j, entry in enumerate(row)
        }

    def as_lists(self):
        return [list(row) for row in self.rows]

    def __str__(self):
        return '/'.join(''.join(str(a) for a in row) for row in self.rows)


def restrict(s, m):
    """The tableau formed by the entries 1..m of s."""
    if not 0 <= m <= s.degree:
        raise RangeError(f"Cannot restrict a tableau of degree {s.degree} to {m}")
    rows = tuple(tuple(a for a in row if a <= m) for row in s.rows)
    return StandardTableau(tuple(row for row in rows if row))


def transpose_tableau(s):
    """Reflect s in its main diagonal."""
    columns = transpose(s.shape).parts
    return StandardTableau(tuple(
        tuple(s.rows[i][j] for i in range(height)) for j, height in enumerate(columns)
    ))


def _fillings(shape):
    n = shape.degree
    rows = [[] for _ in shape.parts]

    def place(entry):
        if entry > n:
            yield tuple(tuple(row) for row in rows)
            return
        for i, part in enumerate(shape.parts):
            if len(rows[i]) < part and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(entry)
                yield from place(entry + 1)
                rows[i].pop()

    yield from place(1)


@lru_cache(maxsize=None)
def _standard_tableaux(parts):
    return tuple(StandardTableau(rows) for rows in _fillings(Partition(parts)))


def standard_tableaux(shape):
    """All standard tableaux of the given shape; the superstandard one comes first."""
    return list(_standard_tableaux(shape.parts))


def tableau_dominance(s, t):
    """s is dominated by t: shape(s restricted to m) <= shape(t restricted to m) for every m."""
    if s.shape != t.shape:
        raise ShapeMismatch(f"Tableaux of shapes {s.shape} and {t.shape}")
    return all(
        dominance_leq(restrict(s, m).shape, restrict(t, m).shape)
        for m in range(1, s.degree + 1)
    )


def d_permutation(s):
    """
    One-line notation of the permutation d with s = d(t^shape).

    d sends each entry of the superstandard tableau to the entry of s in the
    same cell; d(t^shape) is the identity.
    """
    reference = StandardTableau.superstandard(s.shape)
    images = [0] * s.degree
    for row_ref, row_s in zip(reference.rows, s.rows):
        for a, b in zip(row_ref, row_s):
            images[a - 1] = b
    return tuple(images)


def hook_lengths(shape):
    """Hook length of every cell, row by row."""
    columns = transpose(shape).parts
    return [
        [part - j + columns[j] - i - 1 for j in range(part)]
        for i, part in enumerate(shape.parts)
    ]


def hook_formula(shape):
    product = 1
    for row in hook_lengths(shape):
        for hook in row:
            product *= hook
    return factorial(shape.degree) // product


@lru_cache(maxsize=None)
def _spec_dimension(parts):
    shape = Partition(parts)
    counted = len(_standard_tableaux(parts))
    formula = hook_formula(shape)
    if counted != formula:
        raise InvariantViolation(
            f"dim{shape}: {counted} standard tableaux but hook formula gives {formula}"
        )
    return counted


def spec_dimension(shape):
    """Number of standard tableaux of the shape, cross-checked with the hook formula."""
    return _spec_dimension(shape.parts)


def capital_N(n, m):
    """Sum of dim(shape)^2 over partitions of n with first part at least m."""
    if not 1 <= m <= n:
        raise RangeError(f"N({n},{m}) needs 1 <= m <= n")
    return sum(spec_dimension(lam) ** 2 for lam in partitions_of(n) if lam.first >= m)

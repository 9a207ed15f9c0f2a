"""
Integer lattices and Smith normal form.

Elementary divisors come from sympy's invariant_factors. Kernels are found
by unimodular row reduction of [m^T | I]: rows whose left part vanishes span
the integer nullspace, and because the transform is unimodular that span is
saturated. Lattice bases are kept in Hermite form so that equal lattices
compare equal.
"""

import logging
from dataclasses import dataclass

from sympy import primefactors
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from heckecentral.exceptions import AmbientMismatch, MixedDomains

logger = logging.getLogger(__name__)


def _unimodular_echelon(rows, width):
    """
    Hermite-form reduction of the first `width` columns by integer row operations.

    Pivoting uses the entry of least absolute value in the column; entries
    above each pivot are reduced into [0, pivot).

    Returns:
        (rows, pivot_columns) with the rows transformed in place order
    """
    rows = [list(row) for row in rows]
    pivots = []
    top = 0
    for column in range(width):
        while True:
            live = [i for i in range(top, len(rows)) if rows[i][column]]
            if not live:
                break
            best = min(live, key=lambda i: abs(rows[i][column]))
            rows[top], rows[best] = rows[best], rows[top]
            pivot_row = rows[top]
            cleared = True
            for i in range(top + 1, len(rows)):
                entry = rows[i][column]
                if entry:
                    factor = entry // pivot_row[column]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], pivot_row)]
                    if rows[i][column]:
                        cleared = False
            if cleared:
                break
        if top < len(rows) and rows[top][column]:
            if rows[top][column] < 0:
                rows[top] = [-a for a in rows[top]]
            pivot = rows[top][column]
            for i in range(top):
                factor = rows[i][column] // pivot
                if factor:
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[top])]
            pivots.append(column)
            top += 1
    return rows, pivots


def hermite_rows(vectors, ambient):
    """Hermite normal form basis (nonzero rows only) of the lattice spanned by vectors."""
    reduced, pivots = _unimodular_echelon(vectors, ambient)
    return tuple(tuple(int(a) for a in row) for row in reduced[:len(pivots)])


def integer_rows(matrix):
    """List of int rows of a DomainMatrix over ZZ (or a list of int rows)."""
    if isinstance(matrix, DomainMatrix):
        if matrix.domain != ZZ:
            raise MixedDomains(f"Integer lattice work needs ZZ, got {matrix.domain}")
        return [[int(a) for a in row] for row in matrix.to_list()], matrix.shape
    rows = [[int(a) for a in row] for row in matrix]
    return rows, (len(rows), len(rows[0]) if rows else 0)


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^ambient given by a Hermite form basis."""

    ambient: int
    basis: tuple
    divisors: tuple = ()
    is_kernel: bool = False

    @classmethod
    def span(cls, vectors, ambient, divisors=(), is_kernel=False):
        for vector in vectors:
            if len(vector) != ambient:
                raise AmbientMismatch(f"Vector of length {len(vector)} in Z^{ambient}")
        return cls(ambient, hermite_rows(vectors, ambient), tuple(divisors), is_kernel)

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, vector):
        """Membership by back substitution along the Hermite pivots."""
        if len(vector) != self.ambient:
            raise AmbientMismatch(f"Vector of length {len(vector)} in Z^{self.ambient}")
        residue = [int(a) for a in vector]
        for row in self.basis:
            pivot = next(j for j, a in enumerate(row) if a)
            factor, remainder = divmod(residue[pivot], row[pivot])
            if remainder:
                return False
            if factor:
                residue = [a - factor * b for a, b in zip(residue, row)]
        return not any(residue)

    def is_saturated(self):
        """Z^ambient / L is torsion free iff every invariant factor of the basis is 1."""
        if not self.basis:
            return True
        matrix = DomainMatrix([[ZZ(a) for a in row] for row in self.basis],
                              (self.rank, self.ambient), ZZ)
        return all(int(d) == 1 for d in invariant_factors(matrix))


def elementary_divisors(matrix):
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    rows, shape = integer_rows(matrix)
    if 0 in shape:
        return []
    domain_matrix = DomainMatrix([[ZZ(a) for a in row] for row in rows], shape, ZZ)
    return [abs(int(d)) for d in invariant_factors(domain_matrix) if d]


def integer_kernel(matrix):
    """Saturated lattice {v in Z^ncols : matrix * v = 0}."""
    rows, (nrows, ncols) = integer_rows(matrix)
    augmented = []
    for j in range(ncols):
        column = [rows[i][j] for i in range(nrows)]
        identity = [1 if k == j else 0 for k in range(ncols)]
        augmented.append(column + identity)
    reduced, pivots = _unimodular_echelon(augmented, nrows)
    kernel = [row[nrows:] for row in reduced[len(pivots):]]
    return IntegerLattice.span(kernel, ncols, is_kernel=True)


def smith_normal_form(matrix):
    """
    Elementary divisors and saturated integer kernel of an integer matrix.

    Returns:
        (divisors, IntegerLattice)
    """
    divisors = elementary_divisors(matrix)
    kernel = integer_kernel(matrix)
    logger.info(f"SNF: {len(divisors)} nonzero divisors, kernel rank {kernel.rank}")
    return divisors, IntegerLattice(kernel.ambient, kernel.basis, tuple(divisors), True)


def failing_primes(divisors):
    """Primes dividing some elementary divisor, ascending."""
    primes = set()
    for d in divisors:
        primes.update(primefactors(d))
    return sorted(primes)


def integer_rank(matrix):
    rows, shape = integer_rows(matrix)
    if 0 in shape:
        return 0
    return DomainMatrix([[QQ(a) for a in row] for row in rows], shape, QQ).rank()


def modular_rank(matrix, p):
    rows, shape = integer_rows(matrix)
    if 0 in shape:
        return 0
    field = GF(p, symmetric=False)
    return DomainMatrix([[field(a) for a in row] for row in rows], shape, field).rank()

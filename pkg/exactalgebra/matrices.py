"""
Exact linear algebra over fields.

Matrices are sympy DomainMatrix objects; this module adds the canonical
subspace type used throughout the engine, rref_nullspace, subspace_compare
and a blockwise row reduction for systems too tall to reduce in one go.
"""

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from heckecentral.exceptions import (
    AmbientMismatch,
    DomainNotField,
    MixedDomains,
)

EQUAL = 'equal'
U_IN_V = 'u_in_v'
V_IN_U = 'v_in_u'
INCOMPARABLE = 'incomparable'


def build_matrix(rows, domain, ncols=None):
    """
    Dense DomainMatrix from a list of rows.

    Entries that are not yet elements of the domain's ring are converted;
    `ncols` is needed when there are no rows.
    """
    ring = domain.ring
    converted = [[domain.convert(entry) for entry in row] for row in rows]
    width = len(converted[0]) if converted else (ncols or 0)
    for row in converted:
        if len(row) != width:
            raise MixedDomains("Ragged matrix rows")
    return DomainMatrix(converted, (len(converted), width), ring)


def sparse_matrix(entries, shape, domain):
    """
    Sparse DomainMatrix from {row: {column: value}} with values in the ring.
    """
    ring = domain.ring
    cleaned = {}
    for i, row in entries.items():
        kept = {j: value for j, value in row.items() if value}
        if kept:
            cleaned[i] = kept
    return DomainMatrix(cleaned, shape, ring)


def check_domain(matrix, domain):
    if matrix.domain != domain.ring:
        raise MixedDomains(f"Matrix over {matrix.domain} used as {domain.label}")


def _rref(matrix):
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return [], ()
    reduced, pivots = matrix.rref()
    rows = reduced.to_list()[:len(pivots)]
    return rows, tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of K^ambient, stored as its reduced row echelon basis.

    Two subspaces with the same row space have identical `rows`.
    """

    ambient: int
    domain: object
    rows: tuple
    pivots: tuple

    @classmethod
    def from_rows(cls, rows, ambient, domain):
        """Row space of the given vectors (any list or DomainMatrix)."""
        if not domain.is_field:
            raise DomainNotField(f"Subspaces need a field, not {domain.label}")
        if isinstance(rows, DomainMatrix):
            matrix = rows
        else:
            rows = list(rows)
            if not rows:
                return cls.zero(ambient, domain)
            matrix = build_matrix(rows, domain, ambient)
        if matrix.shape[1] != ambient:
            raise AmbientMismatch(f"Vectors of length {matrix.shape[1]} in ambient {ambient}")
        check_domain(matrix, domain)
        basis, pivots = _rref(matrix)
        return cls(ambient, domain, tuple(tuple(row) for row in basis), pivots)

    @classmethod
    def zero(cls, ambient, domain):
        return cls(ambient, domain, (), ())

    @classmethod
    def full(cls, ambient, domain):
        one, zero = domain.one, domain.zero
        rows = tuple(
            tuple(one if i == j else zero for j in range(ambient)) for i in range(ambient)
        )
        return cls(ambient, domain, rows, tuple(range(ambient)))

    @property
    def dimension(self):
        return len(self.rows)

    @property
    def matrix(self):
        return build_matrix(self.rows, self.domain, self.ambient)

    def __len__(self):
        return self.dimension

    def reduce(self, vector):
        """Remainder of a vector after clearing the pivot columns."""
        residue = list(vector)
        for row, pivot in zip(self.rows, self.pivots):
            factor = residue[pivot]
            if factor:
                residue = [a - factor * b for a, b in zip(residue, row)]
        return residue

    def contains(self, vector):
        if len(vector) != self.ambient:
            raise AmbientMismatch(f"Vector of length {len(vector)} in ambient {self.ambient}")
        return not any(self.reduce(vector))

    def coordinates(self, vector):
        """Coefficients of a member vector on the echelon basis."""
        return [vector[pivot] for pivot in self.pivots]

    def contains_subspace(self, other):
        self._check_compatible(other)
        return all(self.contains(row) for row in other.rows)

    def join(self, other):
        self._check_compatible(other)
        if not other.rows:
            return self
        if not self.rows:
            return other
        return Subspace.from_rows(list(self.rows) + list(other.rows), self.ambient, self.domain)

    def _check_compatible(self, other):
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"Ambient {self.ambient} against {other.ambient}")
        if other.domain != self.domain:
            raise MixedDomains(f"{self.domain.label} against {other.domain.label}")


def rref_nullspace(matrix, domain):
    """
    Rank and right nullspace {v : matrix * v = 0} of a matrix over a field.

    Returns:
        (rank, Subspace of K^ncols)
    """
    if not domain.is_field:
        raise DomainNotField(f"rref needs a field, not {domain.label}")
    check_domain(matrix, domain)
    ncols = matrix.shape[1]
    basis, pivots = _rref(matrix)
    pivot_set = set(pivots)
    zero, one = domain.zero, domain.one
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [zero] * ncols
        vector[free] = one
        for row, pivot in zip(basis, pivots):
            vector[pivot] = -row[free]
        vectors.append(vector)
    if not vectors:
        return len(pivots), Subspace.zero(ncols, domain)
    return len(pivots), Subspace.from_rows(vectors, ncols, domain)


def rank(matrix, domain):
    if not domain.is_field:
        raise DomainNotField(f"rank needs a field, not {domain.label}")
    return len(_rref(matrix)[1])


def reduced_row_space(blocks, ncols, domain):
    """
    Sparse matrix of the pivot rows of all `blocks` stacked, reduced block by block.

    Each block is {row key: {column: value}}. At most ncols rows are carried
    between blocks, so memory stays bounded by the width of the system.
    """
    if not domain.is_field:
        raise DomainNotField(f"rref needs a field, not {domain.label}")
    kept = {}
    for block in blocks:
        rows = [row for row in block.values() if any(row.values())]
        if not rows:
            continue
        entries = dict(kept)
        for k, row in enumerate(rows):
            entries[len(kept) + k] = row
        basis, _ = _rref(sparse_matrix(entries, (len(entries), ncols), domain))
        kept = {i: {j: v for j, v in enumerate(row) if v} for i, row in enumerate(basis)}
    return sparse_matrix(kept, (len(kept), ncols), domain)


def subspace_compare(u, v):
    """
    Containment relation between two subspaces.

    Returns one of 'equal', 'u_in_v', 'v_in_u', 'incomparable'.
    """
    u._check_compatible(v)
    u_in_v = v.contains_subspace(u)
    v_in_u = u.contains_subspace(v)
    if u_in_v and v_in_u:
        return EQUAL
    if u_in_v:
        return U_IN_V
    if v_in_u:
        return V_IN_U
    return INCOMPARABLE

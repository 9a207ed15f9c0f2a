"""
The Murphy basis of Hec(n) and the regular cell datum built from it.

For standard tableaux s, t of shape mu the Murphy element is

    x_st = T_d(s) x(mu) T_d(t)^*

and the regular datum indexes C^lam_st = sharp(x_st) by standard
lam'-tableaux s, t. A set tau of partitions spans an ideal A(tau) when it is
closed downwards under dominance; the cell module W(lam) is taken modulo the
ideal of the partitions strictly dominated by lam.
"""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache

from django.conf import settings

from exactalgebra.matrices import Subspace, build_matrix
from hecke.algebra import HeckeAlgebra, sharp_automorphism, x_element
from hecke.permutations import Perm
from heckecentral.exceptions import InvariantViolation, ShapeMismatch
from partitions.shapes import PartitionSet, dominance_leq, is_cosaturated, partitions_of, transpose
from partitions.tableaux import d_permutation, standard_tableaux
from permmodules.modules import ModuleRep

logger = logging.getLogger(__name__)


def murphy_element(algebra, s, t):
    """x_st = T_d(s) x(lam) T_d(t)^* for standard tableaux s, t of one shape lam."""
    if s.shape != t.shape:
        raise ShapeMismatch(f"Murphy element of tableaux with shapes {s.shape} and {t.shape}")
    left = algebra.T(Perm(d_permutation(s)))
    right = algebra.T(Perm(d_permutation(t)).inverse)
    return left * x_element(algebra, s.shape) * right


@dataclass(frozen=True, eq=False)
class CellDatum:
    """
    The regular cell datum of Hec(n).

    Attributes:
        algebra: the HeckeAlgebra
        index: lam -> tuple of standard lam'-tableaux, N(lam)
        murphy: (mu, s, t) -> x_st for standard mu-tableaux s, t
        cells: (lam, s, t) -> C^lam_st = sharp(x_st), s, t in N(lam)
    """

    algebra: HeckeAlgebra
    index: dict
    murphy: dict
    cells: dict

    @property
    def n(self):
        return self.algebra.n

    @property
    def domain(self):
        return self.algebra.domain

    def partitions(self):
        return partitions_of(self.n)

    def cell(self, lam, s, t):
        return self.cells[(lam, s, t)]

    def elements_of(self, lam):
        return [self.cells[(lam, s, t)] for s in self.index[lam] for t in self.index[lam]]

    def murphy_of(self, mu):
        tableaux = standard_tableaux(mu)
        return [self.murphy[(mu, s, t)] for s in tableaux for t in tableaux]

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class CellIdeal:
    tau: PartitionSet
    subspace: Subspace

    @property
    def dimension(self):
        return self.subspace.dimension


@lru_cache(maxsize=16)
def _regular_datum(algebra):
    murphy = {}
    for mu in partitions_of(algebra.n):
        tableaux = standard_tableaux(mu)
        for s in tableaux:
            for t in tableaux:
                murphy[(mu, s, t)] = murphy_element(algebra, s, t)
    index, cells = {}, {}
    for lam in partitions_of(algebra.n):
        conjugate = transpose(lam)
        index[lam] = tuple(standard_tableaux(conjugate))
        for s in index[lam]:
            for t in index[lam]:
                cells[(lam, s, t)] = sharp_automorphism(murphy[(conjugate, s, t)])
    datum = CellDatum(algebra, index, murphy, cells)
    if len(datum) != algebra.dimension:
        raise InvariantViolation(f"{len(datum)} cell basis elements for Hec({algebra.n})")
    logger.info(f"Regular cell datum of {algebra.describe()}: {len(datum)} elements")
    return datum


def regular_cell_basis(n, q, domain):
    """The regular cell datum of Hec(n) over `domain` with parameter q."""
    return _regular_datum(HeckeAlgebra(n, domain, q))


def datum_for(algebra):
    return _regular_datum(algebra)


def _span(elements, algebra):
    rows = [element.coordinates() for element in elements]
    return Subspace.from_rows(rows, algebra.dimension, algebra.domain)


def basis_rank(datum):
    """Rank of the T_w coordinate matrix of all C^lam_st."""
    return _span(list(datum.cells.values()), datum.algebra).dimension


def cell_ideal(datum, tau):
    """
    A(tau): the span of C^lam_st for lam in tau, in T_w coordinates.

    Args:
        datum: CellDatum over a field
        tau: PartitionSet (or iterable of partitions) of degree n
    """
    if not isinstance(tau, PartitionSet):
        tau = PartitionSet(datum.n, tuple(tau))
    elements = [c for lam in tau for c in datum.elements_of(lam)]
    ideal = CellIdeal(tau, _span(elements, datum.algebra))
    expected = sum(len(datum.index[lam]) ** 2 for lam in tau)
    if ideal.dimension != expected:
        raise InvariantViolation(f"A({tau}) has dimension {ideal.dimension}, expected {expected}")
    return ideal


def murphy_ideal(datum, sigma):
    """The span of the Murphy elements x_st with shape in sigma."""
    if not isinstance(sigma, PartitionSet):
        sigma = PartitionSet(datum.n, tuple(sigma))
    elements = [x for mu in sigma for x in datum.murphy_of(mu)]
    return CellIdeal(sigma, _span(elements, datum.algebra))


def is_ideal_set(tau):
    """A(tau) is an ideal of the regular datum when tau is closed downwards under dominance."""
    return is_cosaturated(tau.complement())


def ideal_law_holds(ideal, algebra, samples=4):
    """Randomized check that a * A(tau) and A(tau) * a stay in A(tau)."""
    if not ideal.dimension:
        return True
    rng = random.Random(settings.HECKE_RANDOM_SEED)
    subspace = ideal.subspace
    for _ in range(samples):
        member = algebra.from_coordinates(rng.choice(subspace.rows))
        a = algebra.T(rng.choice(algebra.basis)) + algebra.T(rng.choice(algebra.basis))
        for product in (a * member, member * a):
            if not subspace.contains(product.coordinates()):
                return False
    return True


def strictly_below(lam):
    return PartitionSet(lam.degree, tuple(
        mu for mu in partitions_of(lam.degree) if mu != lam and dominance_leq(mu, lam)
    ))


def _solve_in_span(vectors, target, domain):
    """Coefficients a with sum a_k vectors[k] = target, for independent vectors."""
    k = len(vectors)
    augmented = [[v[j] for v in vectors] + [target[j]] for j in range(len(target))]
    reduced, pivots = build_matrix(augmented, domain, k + 1).rref()
    if k in pivots:
        return None
    rows = reduced.to_list()
    return [rows[i][k] for i in range(k)]


def cell_module(datum, lam, v0=None):
    """
    W(lam): T_i acting on the classes of C^lam_{u, v0} modulo the ideal of
    partitions strictly dominated by lam.

    ModuleRep columns hold the images of basis vectors, as for Young modules.
    """
    algebra = datum.algebra
    domain = datum.domain
    tableaux = datum.index[lam]
    v0 = v0 or tableaux[0]
    lower = cell_ideal(datum, strictly_below(lam)).subspace
    residues = [lower.reduce(datum.cell(lam, u, v0).coordinates()) for u in tableaux]
    d = len(tableaux)
    generators = []
    for i in range(1, algebra.n):
        T = algebra.generator(i)
        columns = []
        for u in tableaux:
            image = lower.reduce((T * datum.cell(lam, u, v0)).coordinates())
            column = _solve_in_span(residues, image, domain)
            if column is None:
                raise InvariantViolation(f"T_{i} C^{lam}_(u,v0) leaves the cell span of {lam}")
            columns.append(column)
        rows = [[columns[c][r] for c in range(d)] for r in range(d)]
        generators.append(build_matrix(rows, domain, d))
    labels = [str(u) for u in tableaux]
    module = ModuleRep(algebra, labels, generators, name=f"W{lam}")
    logger.info(f"Cell module W{lam} over {domain.label}: dimension {d}")
    return module


def cell_module_is_independent(datum, lam):
    """The action matrices agree for the first and last choice of v0."""
    tableaux = datum.index[lam]
    first = cell_module(datum, lam, tableaux[0])
    last = cell_module(datum, lam, tableaux[-1])
    return first.generators == last.generators


def cell_basis_export(datum):
    """JSON-ready list of {lambda, s, t, element} with elements in T_w coordinates."""
    domain = datum.domain
    return [
        {
            'lambda': lam.as_list(),
            's': s.as_lists(),
            't': t.as_lists(),
            'element': [domain.to_str(c) for c in element.coordinates()],
        }
        for (lam, s, t), element in datum.cells.items()
    ]

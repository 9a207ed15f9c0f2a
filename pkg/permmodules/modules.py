"""
Explicit representations of the Hecke algebra.

A ModuleRep stores one d x d DomainMatrix per generator T_i, with
rho(T_i)[t][s] the coefficient of basis vector t in T_i * b_s. Matrices of
every T_w are derived on demand and cached.
"""

import logging
from dataclasses import dataclass
from threading import Lock

from sympy.polys.matrices import DomainMatrix

from exactalgebra.matrices import sparse_matrix
from hecke.permutations import all_perms, coset_factorise, min_coset_reps
from heckecentral.exceptions import (
    InvalidPartition,
    MixedParameters,
    NotAHookSum,
    NotAYoungSum,
)
from partitions.shapes import Partition, PartitionSet, is_hook

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Summand:
    """A Young summand M(partition) or M_s(partition), repeated `mult` times."""

    partition: Partition
    mult: int = 1
    signed: bool = False

    def label(self):
        prefix = 'M_s' if self.signed else 'M'
        suffix = f'^{self.mult}' if self.mult != 1 else ''
        return f"{prefix}{self.partition}{suffix}"


class ModuleRep:
    """
    A left module for Hec(n) given by generator matrices.

    Attributes:
        algebra: the HeckeAlgebra acting
        labels: basis labels, length d
        generators: list of DomainMatrix rho(T_1) .. rho(T_{n-1})
        summands: tuple of Summand when built from Young summands, else None
    """

    def __init__(self, algebra, labels, generators, summands=None, name=''):
        self.algebra = algebra
        self.labels = list(labels)
        self.generators = list(generators)
        self.summands = tuple(summands) if summands is not None else None
        self.name = name
        self._table = {}
        self._lock = Lock()

    @property
    def n(self):
        return self.algebra.n

    @property
    def domain(self):
        return self.algebra.domain

    @property
    def q(self):
        return self.algebra.q

    @property
    def dimension(self):
        return len(self.labels)

    def identity_matrix(self):
        return DomainMatrix.eye(self.dimension, self.domain.ring).to_dense()

    def matrix(self, w):
        """rho(T_w), built as rho(T_i) rho(T_{s_i w}) for a left descent i."""
        cached = self._table.get(w)
        if cached is not None:
            return cached
        if w.is_identity():
            value = self.identity_matrix()
        else:
            i = w.reduced_word[0]
            value = self.generators[i - 1] * self.matrix(w.left_simple(i))
        with self._lock:
            self._table.setdefault(w, value)
        return self._table[w]

    def action_table(self):
        """rho(T_w) for every w, in canonical basis order of the algebra."""
        return [self.matrix(w) for w in all_perms(self.n)]

    def act(self, element):
        """rho(element) as a DomainMatrix."""
        total = DomainMatrix.zeros((self.dimension, self.dimension), self.domain.ring).to_dense()
        for w, c in element.terms.items():
            total = total + self.matrix(w) * c
        return total

    def check_relations(self):
        """
        True when the generator matrices satisfy the quadratic and braid relations.
        """
        one = self.identity_matrix()
        q = self.q
        for k, g in enumerate(self.generators):
            if g * g != g * (q - self.domain.ring.one) + one * q:
                return False
            if k + 1 < len(self.generators):
                h = self.generators[k + 1]
                if g * h * g != h * g * h:
                    return False
            for far in self.generators[k + 2:]:
                if g * far != far * g:
                    return False
        return True

    def describe(self):
        if self.summands is not None:
            parts = ' + '.join(s.label() for s in self.summands)
        else:
            parts = self.name or f"module of dimension {self.dimension}"
        return f"{parts} over {self.domain.label}, q = {self.domain.to_str(self.q)}"

    def __repr__(self):
        return f"ModuleRep({self.describe()})"


def _reduced_terms(algebra, i, d):
    """T_i T_d as a list of (permutation, coefficient)."""
    v = d.left_simple(i)
    if d.left_length_increases(i):
        return [(v, algebra.ring.one)]
    return [(v, algebra.q), (d, algebra.q - algebra.ring.one)]


def _build(algebra, shape, signed):
    if shape.degree != algebra.n:
        raise InvalidPartition(f"{shape} is not a partition of {algebra.n}")
    reps = min_coset_reps(shape)
    position = {d: k for k, d in enumerate(reps)}
    ring = algebra.ring
    d = len(reps)
    generators = []
    for i in range(1, algebra.n):
        entries = {}
        for column, rep in enumerate(reps):
            for w, c in _reduced_terms(algebra, i, rep):
                minimal, v = coset_factorise(w, shape)
                if signed:
                    factor = -ring.one if v.length % 2 else ring.one
                else:
                    factor = algebra.q_power(v.length)
                row = position[minimal]
                entries.setdefault(row, {})
                entries[row][column] = entries[row].get(column, ring.zero) + c * factor
        generators.append(sparse_matrix(entries, (d, d), algebra.domain).to_dense())
    labels = [tuple(rep.images) for rep in reps]
    return ModuleRep(algebra, labels, generators, (Summand(shape, 1, signed),))


def build_young_module(shape, algebra):
    """M(shape) on the basis T_d x(shape), d in D_shape."""
    module = _build(algebra, shape, signed=False)
    logger.info(f"Built {module.describe()}, dimension {module.dimension}")
    return module


def build_signed_module(shape, algebra):
    """M_s(shape) on the basis T_d y(shape), d in D_shape."""
    module = _build(algebra, shape, signed=True)
    logger.info(f"Built {module.describe()}, dimension {module.dimension}")
    return module


def block_sum(modules):
    """Block diagonal direct sum of modules over one algebra."""
    if not modules:
        raise MixedParameters("A direct sum needs at least one summand")
    algebra = modules[0].algebra
    for module in modules[1:]:
        if module.algebra != algebra:
            raise MixedParameters(
                f"Cannot add {module.describe()} to a module over {algebra.describe()}"
            )
    sizes = [module.dimension for module in modules]
    total = sum(sizes)
    generators = []
    for i in range(algebra.n - 1):
        entries = {}
        offset = 0
        for module, size in zip(modules, sizes):
            block = module.generators[i].to_list()
            for r in range(size):
                for c in range(size):
                    if block[r][c]:
                        entries.setdefault(offset + r, {})[offset + c] = block[r][c]
            offset += size
        generators.append(sparse_matrix(entries, (total, total), algebra.domain).to_dense())
    labels = [(k, label) for k, module in enumerate(modules) for label in module.labels]
    if all(module.summands is not None for module in modules):
        summands = tuple(s for module in modules for s in module.summands)
    else:
        summands = None
    return ModuleRep(algebra, labels, generators, summands)


def direct_sum(summands, algebra):
    """
    The module sum of M(partition) / M_s(partition) with multiplicities.

    Args:
        summands: iterable of Summand
        algebra: HeckeAlgebra shared by every summand
    """
    summands = list(summands)
    for summand in summands:
        if summand.partition.degree != algebra.n:
            raise MixedParameters(f"{summand.label()} does not live over Hec({algebra.n})")
    modules = []
    for summand in summands:
        builder = build_signed_module if summand.signed else build_young_module
        single = builder(summand.partition, algebra)
        modules.extend([single] * summand.mult)
    module = block_sum(modules)
    module.summands = tuple(summands)
    return module


def young_sum(partitions, algebra, signed=False):
    """Direct sum with one copy of M(lam) (or M_s(lam)) per listed partition."""
    return direct_sum([Summand(p, 1, signed) for p in partitions], algebra)


def zeta_and_index(module):
    """
    zeta(M) and idx(M) of a Young (or signed) sum.

    Returns:
        (PartitionSet, idx) with idx None unless every summand is a hook
    """
    if module.summands is None:
        raise NotAYoungSum(f"{module.describe()} carries no Young summand description")
    kinds = {s.signed for s in module.summands if s.mult}
    if len(kinds) > 1:
        raise NotAYoungSum(f"{module.describe()} mixes signed and unsigned summands")
    members = tuple(s.partition for s in module.summands if s.mult)
    zeta = PartitionSet(module.n, members)
    if all(is_hook(p) for p in zeta):
        return zeta, min(p.first for p in zeta)
    return zeta, None


def hook_index(module):
    zeta, idx = zeta_and_index(module)
    if idx is None:
        raise NotAHookSum(f"{module.describe()} has a summand that is not a hook")
    return zeta, idx


def sharp_twist(module):
    """
    M^sharp: the same space with T_i acting as -rho(T_i) + (q - 1).

    Young summands become signed summands and vice versa.
    """
    one = module.identity_matrix()
    shift = module.q - module.domain.ring.one
    generators = [one * shift - g for g in module.generators]
    summands = None
    if module.summands is not None:
        summands = tuple(Summand(s.partition, s.mult, not s.signed) for s in module.summands)
    return ModuleRep(module.algebra, module.labels, generators, summands,
                     name=f"twist of {module.name}" if module.name else '')

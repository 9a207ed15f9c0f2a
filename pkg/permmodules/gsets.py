"""
Finite Sym(m)-sets and their permutation modules.

A GSetModule keeps the points of X in a fixed canonical order and the
action of each adjacent transposition s_i as an index map.
"""

import logging
from itertools import product
from math import factorial

from hecke.algebra import HeckeAlgebra
from hecke.permutations import Perm, all_perms, coset_factorise, min_coset_reps
from heckecentral.exceptions import InvariantViolation, NotAYoungSum, RangeError
from partitions.shapes import (
    Partition,
    PartitionSet,
    composition_to_partition,
    dominance_upward_closure,
)
from exactalgebra.domains import ScalarDomain
from exactalgebra.matrices import sparse_matrix
from .modules import ModuleRep

logger = logging.getLogger(__name__)


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        del self.rank[y]

    def reps(self):
        return set(self.rank)


def find_orbits(generators, space, action):
    """Orbits of the group generated by `generators` on `space`."""
    uf = UnionFind(space)
    for g in generators:
        for x in space:
            uf.union(x, action(g, x))
    orbits = {rep: [] for rep in uf.reps()}
    for x in space:
        orbits[uf.find(x)].append(x)
    return sorted((sorted(orbit) for orbit in orbits.values()), key=lambda o: o[0])


class GSetModule:
    """
    The permutation module F[X] of a finite Sym(m)-set X.

    Attributes:
        m: degree of the acting symmetric group
        points: point labels in canonical order
        generators: for each s_i a tuple sending point index k to the index of s_i . x_k
        domain: ScalarDomain of the module
    """

    def __init__(self, m, points, generators, domain, name=''):
        self.m = m
        self.points = list(points)
        self.generators = [tuple(g) for g in generators]
        self.domain = domain
        self.name = name
        self._actions = {}
        for g in self.generators:
            if sorted(g) != list(range(len(self.points))):
                raise InvariantViolation(f"A generator of {name or 'the G-set'} is not a bijection")

    @property
    def size(self):
        return len(self.points)

    def with_domain(self, domain):
        return GSetModule(self.m, self.points, self.generators, domain, self.name)

    def permutation_of(self, w):
        """Index map of the group element w, composed from generator maps."""
        cached = self._actions.get(w)
        if cached is not None:
            return cached
        if w.is_identity():
            value = tuple(range(self.size))
        else:
            i = w.reduced_word[0]
            rest = self.permutation_of(w.left_simple(i))
            value = tuple(self.generators[i - 1][k] for k in rest)
        self._actions[w] = value
        return value

    def orbits(self):
        indices = list(range(self.size))
        return find_orbits(self.generators, indices, lambda g, k: g[k])

    def stabiliser(self, k):
        return [w for w in all_perms(self.m) if self.permutation_of(w)[k] == k]

    def point_stabiliser_types(self):
        """
        For every point, the partition lam with stabiliser conjugate to Sigma(lam).

        Entries are None where the stabiliser is not a Young subgroup.
        """
        types = []
        for k in range(self.size):
            stabiliser = self.stabiliser(k)
            uf = UnionFind(range(1, self.m + 1))
            for w in stabiliser:
                for a in range(1, self.m + 1):
                    uf.union(a, w(a))
            sizes = {}
            for a in range(1, self.m + 1):
                root = uf.find(a)
                sizes[root] = sizes.get(root, 0) + 1
            order = 1
            for size in sizes.values():
                order *= factorial(size)
            if order == len(stabiliser):
                types.append(composition_to_partition(list(sizes.values())))
            else:
                types.append(None)
        return types

    def young_zeta(self):
        """zeta(X): the stabiliser types of a Young Sym(m)-set."""
        types = self.point_stabiliser_types()
        if any(t is None for t in types):
            raise NotAYoungSum(f"{self.describe()} has a point whose stabiliser is not a Young subgroup")
        return PartitionSet(self.m, tuple(set(types)))

    def as_module(self, q=1):
        """F[X] as a module for Hec(m) at q = 1 (the group algebra)."""
        algebra = HeckeAlgebra(self.m, self.domain, q)
        if algebra.q != self.domain.one:
            raise RangeError("Permutation modules of G-sets are modules for q = 1 only")
        one = self.domain.one
        d = self.size
        matrices = []
        for g in self.generators:
            entries = {}
            for s, t in enumerate(g):
                entries.setdefault(t, {})[s] = one
            matrices.append(sparse_matrix(entries, (d, d), self.domain).to_dense())
        return ModuleRep(algebra, self.points, matrices, name=self.name)

    def describe(self):
        return f"{self.name or 'G-set'} of size {self.size} over {self.domain.label}"

    def __repr__(self):
        return f"GSetModule({self.describe()})"


def _from_orbit(m, start, step, domain, name):
    """Breadth-first orbit closure of `start` under s_1 .. s_{m-1}."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for point in frontier:
            for i in range(1, m):
                image = step(i, point)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    points = sorted(seen)
    index = {point: k for k, point in enumerate(points)}
    generators = [tuple(index[step(i, point)] for point in points) for i in range(1, m)]
    return GSetModule(m, points, generators, domain, name)


def subgroup_closure(generators, m):
    identity = Perm.identity(m)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                b = a * g
                if b not in elements:
                    elements.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(elements, key=Perm.sort_key)


def coset_space_module(m, subgroup_generators, domain):
    """
    F[Sym(m)/T] for the subgroup T generated by `subgroup_generators`.

    A coset gT is labelled by the one-line notation of its least element.
    """
    subgroup = subgroup_closure([g if isinstance(g, Perm) else Perm(g) for g in subgroup_generators], m)

    def label(g):
        return min((g * t).images for t in subgroup)

    def step(i, point):
        return label(Perm(point).left_simple(i))

    gens = ', '.join(str(g) for g in subgroup_generators) or 'e'
    module = _from_orbit(m, label(Perm.identity(m)), step, domain, f"Sym({m})/<{gens}>")
    logger.info(f"Coset space {module.name}: {module.size} points")
    return module


def _check_tensor_range(n, r, m):
    if n < 1 or r < 1 or not 1 <= m <= n:
        raise RangeError(f"Tensor space needs n, r >= 1 and 1 <= m <= n (got {n}, {r}, {m})")


def tensor_space_module(n, r, m, domain):
    """F[I(n, r)]: r-tuples over 1..n with Sym(m) permuting the values 1..m."""
    _check_tensor_range(n, r, m)
    points = list(product(range(1, n + 1), repeat=r))

    def swap(i, a):
        return i + 1 if a == i else i if a == i + 1 else a

    index = {point: k for k, point in enumerate(points)}
    generators = [
        tuple(index[tuple(swap(i, a) for a in point)] for point in points)
        for i in range(1, m)
    ]
    return GSetModule(m, points, generators, domain, f"I({n},{r}) over Sym({m})")


def tensor_closed_form(n, r, m):
    """zeta and idx of I(n, r) restricted to Sym(m), from the counting formulas."""
    _check_tensor_range(n, r, m)
    top = min(r, m)
    low = 1 if m == n else 0
    members = {composition_to_partition([m - b] + [1] * b) for b in range(low, top + 1)}
    return PartitionSet(m, tuple(members)), max(1, m - top)


def tensor_orbit_profile(n, r, m):
    """
    zeta and idx of I(n, r) as a Sym(m)-set, computed from point stabilisers.

    The result is checked against tensor_closed_form.
    """
    gset = tensor_space_module(n, r, m, ScalarDomain.rationals())
    zeta = gset.young_zeta()
    idx = min(p.first for p in zeta)
    expected = tensor_closed_form(n, r, m)
    if (zeta, idx) != expected:
        raise InvariantViolation(
            f"I({n},{r}) over Sym({m}): stabilisers give {zeta}, idx {idx}; "
            f"formulas give {expected[0]}, idx {expected[1]}"
        )
    return zeta, idx


def orbital_count(gset):
    """Number of Sym(m)-orbits on X x X: the dimension of End of F[X]."""
    pairs = list(product(range(gset.size), repeat=2))
    orbits = find_orbits(gset.generators, pairs, lambda g, pair: (g[pair[0]], g[pair[1]]))
    return len(orbits)


def young_gset(partitions, m, domain):
    """The disjoint union of Sym(m)/Sigma(lam) over the listed partitions."""
    shapes = [p if isinstance(p, Partition) else Partition.of(p, m) for p in partitions]
    points = []
    for k, shape in enumerate(shapes):
        points.extend((k, d.images) for d in min_coset_reps(shape))
    index = {point: j for j, point in enumerate(points)}
    generators = []
    for i in range(1, m):
        images = []
        for k, d in points:
            minimal, _ = coset_factorise(Perm(d).left_simple(i), shapes[k])
            images.append(index[(k, minimal.images)])
        generators.append(tuple(images))
    name = ' + '.join(f"Sym({m})/Sigma{shape}" for shape in shapes)
    return GSetModule(m, points, generators, domain, name)


def cosaturation_gset(gset):
    """C(X): one coset space Sym(m)/Sigma(lam) for each lam in the dominance closure of zeta(X)."""
    closure = dominance_upward_closure(gset.young_zeta())
    return young_gset(list(closure), gset.m, gset.domain)

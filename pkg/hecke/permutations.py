"""
Permutations of {1..n} in one-line notation.

Composition is (u * w)(i) = u(w(i)). Left multiplication by s_i swaps the
values i and i + 1; right multiplication swaps the positions i and i + 1.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations, product
from math import factorial

from heckecentral.exceptions import DegreeMismatch, RangeError, RankMismatch
from partitions.shapes import Composition, Partition


@dataclass(frozen=True)
class Perm:
    images: tuple

    def __post_init__(self):
        images = tuple(int(a) for a in self.images)
        object.__setattr__(self, 'images', images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise RangeError(f"{list(images)} is not a permutation in one-line notation")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i, n):
        """The adjacent transposition s_i = (i, i+1)."""
        if not 1 <= i < n:
            raise RankMismatch(f"s_{i} does not exist in Sym({n})")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word, n):
        """s_{word[0]} * s_{word[1]} * ..."""
        w = cls.identity(n)
        for i in word:
            w = w.right_simple(i)
        return w

    @classmethod
    def from_cycles(cls, cycles, n):
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        if other.n != self.n:
            raise RankMismatch(f"Cannot compose permutations of {self.n} and {other.n}")
        return Perm(tuple(self.images[a - 1] for a in other.images))

    @cached_property
    def inverse(self):
        images = [0] * self.n
        for position, value in enumerate(self.images, start=1):
            images[value - 1] = position
        return Perm(tuple(images))

    @cached_property
    def length(self):
        """Number of inversions."""
        return sum(
            1 for i, j in combinations(range(self.n), 2) if self.images[i] > self.images[j]
        )

    @cached_property
    def reduced_word(self):
        """
        A reduced word (i1, ..., ik) with self = s_i1 * ... * s_ik.

        Found by bubble sorting the one-line notation from the right.
        """
        images = list(self.images)
        recorded = []
        while True:
            descent = next(
                (i for i in range(len(images) - 1) if images[i] > images[i + 1]), None
            )
            if descent is None:
                break
            images[descent], images[descent + 1] = images[descent + 1], images[descent]
            recorded.append(descent + 1)
        return tuple(reversed(recorded))

    def left_simple(self, i):
        """s_i * self."""
        swap = {i: i + 1, i + 1: i}
        return Perm(tuple(swap.get(a, a) for a in self.images))

    def right_simple(self, i):
        """self * s_i."""
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Perm(tuple(images))

    def left_length_increases(self, i):
        """l(s_i * self) > l(self): the value i appears before i + 1."""
        return self.images.index(i) < self.images.index(i + 1)

    def is_identity(self):
        return all(a == i for i, a in enumerate(self.images, start=1))

    def is_involution(self):
        return not self.is_identity() and (self * self).is_identity()

    def cycles(self):
        seen, result = set(), []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle, a = [], start
            while a not in seen:
                seen.add(a)
                cycle.append(a)
                a = self(a)
            result.append(tuple(cycle))
        return result

    def sort_key(self):
        return (self.length, self.images)

    def as_list(self):
        return list(self.images)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(str(a) for a in cycle) + ')' for cycle in cycles)


@lru_cache(maxsize=None)
def _all_perms(n):
    return tuple(sorted((Perm(p) for p in permutations(range(1, n + 1))), key=Perm.sort_key))


def all_perms(n):
    """Sym(n) sorted by (length, one-line notation)."""
    return list(_all_perms(n))


@dataclass(frozen=True)
class YoungSubgroupData:
    composition: Composition
    generators: tuple
    elements: tuple

    @property
    def order(self):
        return len(self.elements)


def _check_degree(alpha, n):
    if alpha.degree != n:
        raise DegreeMismatch(f"Composition {list(alpha.entries)} does not have degree {n}")


@lru_cache(maxsize=None)
def _young_subgroup(entries):
    alpha = Composition(entries)
    n = alpha.degree
    blocks = [list(block) for block in alpha.blocks()]
    generators = tuple(i for block in blocks for i in block[:-1])
    elements = []
    for arrangement in product(*(permutations(block) for block in blocks)):
        images = list(range(1, n + 1))
        for block, values in zip(blocks, arrangement):
            for position, value in zip(block, values):
                images[position - 1] = value
        elements.append(Perm(tuple(images)))
    elements.sort(key=Perm.sort_key)
    return YoungSubgroupData(alpha, generators, tuple(elements))


def young_subgroup(alpha, n=None):
    """Sigma(alpha): permutations preserving each consecutive block of positions."""
    alpha = Composition.of(alpha)
    if n is not None:
        _check_degree(alpha, n)
    return _young_subgroup(alpha.entries)


@lru_cache(maxsize=None)
def _min_coset_reps(parts):
    shape = Partition(parts)
    n = shape.degree
    blocks = [list(block) for block in Composition.of(shape).blocks()]
    reps = []

    def fill(k, remaining, images):
        if k == len(blocks):
            reps.append(Perm(tuple(images)))
            return
        for chosen in combinations(remaining, len(blocks[k])):
            for position, value in zip(blocks[k], chosen):
                images[position - 1] = value
            fill(k + 1, [v for v in remaining if v not in chosen], images)

    fill(0, list(range(1, n + 1)), [0] * n)
    reps.sort(key=Perm.sort_key)
    return tuple(reps)


def min_coset_reps(shape):
    """
    D_shape: minimal length representatives of the left cosets w Sigma(shape).

    These are the permutations whose values increase within every block.
    """
    reps = _min_coset_reps(shape.parts)
    expected = factorial(shape.degree)
    for part in shape.parts:
        expected //= factorial(part)
    assert len(reps) == expected
    return list(reps)


def coset_factorise(w, alpha):
    """
    Split w = d * v with d minimal in w Sigma(alpha) and v in Sigma(alpha).

    Returns:
        (d, v) with l(w) = l(d) + l(v)
    """
    alpha = Composition.of(alpha)
    _check_degree(alpha, w.n)
    images = list(w.images)
    for block in alpha.blocks():
        start, stop = block.start - 1, block.stop - 1
        images[start:stop] = sorted(images[start:stop])
    d = Perm(tuple(images))
    return d, d.inverse * w


def double_coset_count(lam, mu):
    """|Sigma(lam) \\ Sym(n) / Sigma(mu)|, by orbits of Sigma(lam) on D_mu."""
    left = young_subgroup(lam).elements
    seen, orbits = set(), 0
    for d in min_coset_reps(mu):
        if d in seen:
            continue
        orbits += 1
        for u in left:
            seen.add(coset_factorise(u * d, mu)[0])
    return orbits

"""
Partitions, compositions and sets of partitions.

All set-valued results are PartitionSet instances sorted in reverse
lexicographic order, so (4) comes before (3, 1) before (2, 2).
"""

from dataclasses import dataclass
from functools import lru_cache

from heckecentral.exceptions import DegreeMismatch, InvalidPartition


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, 'parts', parts)
        if any(p <= 0 for p in parts):
            raise InvalidPartition(f"Partition {list(parts)} has a non-positive part")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartition(f"Partition {list(parts)} is not weakly decreasing")

    @classmethod
    def of(cls, parts, degree=None):
        partition = cls(tuple(parts))
        if degree is not None and partition.degree != degree:
            raise InvalidPartition(f"{partition} is not a partition of {degree}")
        return partition

    @classmethod
    def parse(cls, text, degree=None):
        """Read '3,1' or '3 1'."""
        pieces = str(text).replace(',', ' ').split()
        try:
            parts = [int(piece) for piece in pieces]
        except ValueError as exc:
            raise InvalidPartition(f"Cannot read a partition from '{text}'") from exc
        return cls.of(parts, degree)

    @property
    def degree(self):
        return sum(self.parts)

    @property
    def first(self):
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return '(' + ','.join(str(p) for p in self.parts) + ')'

    def prefix_sums(self, length=None):
        length = len(self.parts) if length is None else length
        sums, total = [], 0
        for i in range(length):
            total += self.parts[i] if i < len(self.parts) else 0
            sums.append(total)
        return sums

    def as_list(self):
        return list(self.parts)


@dataclass(frozen=True)
class Composition:
    """
    A finite sequence of non-negative integers.

    Zero entries are kept: they name empty blocks of a Young subgroup.
    """

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, 'entries', entries)
        if any(a < 0 for a in entries):
            raise InvalidPartition(f"Composition {list(entries)} has a negative entry")

    @classmethod
    def of(cls, entries):
        if isinstance(entries, Partition):
            return cls(entries.parts)
        if isinstance(entries, Composition):
            return entries
        return cls(tuple(entries))

    @property
    def degree(self):
        return sum(self.entries)

    def blocks(self):
        """Consecutive position blocks, 1-based, one range per non-zero entry."""
        start = 1
        for size in self.entries:
            if size:
                yield range(start, start + size)
            start += size

    def __iter__(self):
        return iter(self.entries)


def composition_to_partition(alpha):
    """Sort the entries of a composition and drop its zeros."""
    entries = Composition.of(alpha).entries
    return Partition(tuple(sorted((a for a in entries if a), reverse=True)))


@dataclass(frozen=True)
class PartitionSet:
    """A duplicate-free set of partitions of one degree, canonically ordered."""

    degree: int
    members: tuple = ()

    def __post_init__(self):
        for member in self.members:
            if member.degree != self.degree:
                raise DegreeMismatch(f"{member} does not have degree {self.degree}")
        ordered = tuple(sorted(set(self.members), reverse=True))
        object.__setattr__(self, 'members', ordered)

    @classmethod
    def of(cls, degree, partitions):
        return cls(degree, tuple(
            p if isinstance(p, Partition) else Partition.of(p) for p in partitions
        ))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, partition):
        return partition in set(self.members)

    def union(self, other):
        _check_degree(self.degree, other.degree)
        return PartitionSet(self.degree, self.members + other.members)

    def difference(self, other):
        _check_degree(self.degree, other.degree)
        dropped = set(other.members)
        return PartitionSet(self.degree, tuple(p for p in self.members if p not in dropped))

    def complement(self):
        """Par(n) minus this set."""
        return partitions_of(self.degree).difference(self)

    def issubset(self, other):
        _check_degree(self.degree, other.degree)
        return set(self.members) <= set(other.members)

    def minimal_members(self):
        """Members with no strictly smaller member under dominance."""
        return [
            p for p in self.members
            if not any(q != p and dominance_leq(q, p) for q in self.members)
        ]

    def as_lists(self):
        return [p.as_list() for p in self.members]

    def __str__(self):
        return '{' + ', '.join(str(p) for p in self.members) + '}'


def _check_degree(a, b):
    if a != b:
        raise DegreeMismatch(f"Partitions of {a} compared with partitions of {b}")


@lru_cache(maxsize=None)
def _partitions_with_max(n, largest):
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_with_max(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions_of(n):
    """All partitions of n in canonical order."""
    if n < 0:
        raise InvalidPartition(f"No partitions of the negative number {n}")
    return PartitionSet(n, tuple(Partition(parts) for parts in _partitions_with_max(n, n)))


def dominance_leq(lam, mu):
    """lam is dominated by mu: every prefix sum of lam is at most that of mu."""
    _check_degree(lam.degree, mu.degree)
    length = max(len(lam), len(mu))
    return all(a <= b for a, b in zip(lam.prefix_sums(length), mu.prefix_sums(length)))


def transpose(lam):
    """The conjugate partition."""
    if not lam.parts:
        return lam
    return Partition(tuple(
        sum(1 for part in lam.parts if part > column) for column in range(lam.first)
    ))


def is_hook(lam):
    """True for partitions of the form (a, 1, ..., 1)."""
    return all(part == 1 for part in lam.parts[1:])


def hook_partition(a, n):
    """The hook (a, 1^(n-a))."""
    if not 1 <= a <= n:
        raise InvalidPartition(f"No hook with first part {a} in degree {n}")
    return Partition((a,) + (1,) * (n - a))


def simple_coarsenings(lam):
    """Partitions obtained from lam by merging exactly two of its parts."""
    parts = lam.parts
    found = set()
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            rest = parts[:i] + parts[i + 1:j] + parts[j + 1:]
            merged = tuple(sorted(rest + (parts[i] + parts[j],), reverse=True))
            found.add(Partition(merged))
    return PartitionSet(lam.degree, tuple(found))


def coarsening_closure(sigma):
    """Smallest superset of sigma closed under merging two parts."""
    seen = set(sigma.members)
    frontier = list(sigma.members)
    while frontier:
        lam = frontier.pop()
        for mu in simple_coarsenings(lam):
            if mu not in seen:
                seen.add(mu)
                frontier.append(mu)
    return PartitionSet(sigma.degree, tuple(seen))


def dominance_upward_closure(sigma):
    """All partitions dominating some member of sigma."""
    if not sigma.members:
        return sigma
    return PartitionSet(sigma.degree, tuple(
        mu for mu in partitions_of(sigma.degree)
        if any(dominance_leq(lam, mu) for lam in sigma.members)
    ))


def is_cosaturated(sigma):
    """True when sigma is closed upward under dominance."""
    return dominance_upward_closure(sigma) == sigma

"""
The Hecke algebra of Sym(n) on the basis T_w.

Relations: T_i^2 = (q - 1) T_i + q T_e, and
T_i T_w = T_{s_i w} when l(s_i w) > l(w), else q T_{s_i w} + (q - 1) T_w.
Products are computed by multiplying from the left one generator at a time
along a reduced word of the left factor.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb
from threading import Lock

from exactalgebra.domains import Scalar, ScalarDomain, specialize
from heckecentral.exceptions import (
    DomainMismatch,
    MixedParameters,
    RankMismatch,
    ZeroParameter,
)
from .permutations import Perm, all_perms, young_subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HeckeAlgebra:
    """Hec(n) over a scalar domain with parameter q (a ring element of the domain)."""

    n: int
    domain: object
    q: object

    def __post_init__(self):
        object.__setattr__(self, 'q', self.domain.convert(self.q))
        if not self.q:
            raise ZeroParameter("The Hecke parameter must be a unit")
        object.__setattr__(self, '_sharp_lock', Lock())

    @classmethod
    def generic(cls, n, p=None):
        """Hec(n) over Q(t) or F_p(t) with q = t."""
        domain = ScalarDomain.function_field(p)
        return cls(n, domain, domain.generator())

    @cached_property
    def basis(self):
        """Sym(n) in canonical order; coordinates of elements follow this order."""
        return all_perms(self.n)

    @cached_property
    def index(self):
        return {w: k for k, w in enumerate(self.basis)}

    @cached_property
    def _sharp_cache(self):
        return {}

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def ring(self):
        return self.domain.ring

    def q_power(self, exponent):
        return self.domain.power(self.q, exponent)

    def parameter(self):
        return Scalar(self.domain, self.q)

    def describe(self):
        return f"Hec({self.n}) over {self.domain.label}, q = {self.domain.to_str(self.q)}"

    # Elements

    def element(self, terms):
        return HeckeElement(self, terms)

    def zero(self):
        return HeckeElement(self, {})

    def one(self):
        return self.T(Perm.identity(self.n))

    def T(self, w):
        if not isinstance(w, Perm):
            w = Perm(tuple(w))
        if w.n != self.n:
            raise RankMismatch(f"T_w with w in Sym({w.n}) used in Hec({self.n})")
        return HeckeElement(self, {w: self.ring.one})

    def generator(self, i):
        return self.T(Perm.simple(i, self.n))

    def from_coordinates(self, vector):
        return HeckeElement(self, dict(zip(self.basis, vector)))


class HeckeElement:
    """A finite sum of scalars times T_w; zero coefficients are never stored."""

    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra, terms):
        self.algebra = algebra
        convert = algebra.domain.convert
        self.terms = {w: convert(c) for w, c in terms.items() if c}

    @property
    def n(self):
        return self.algebra.n

    def coefficient(self, w):
        return self.terms.get(w, self.algebra.ring.zero)

    def coordinates(self):
        zero = self.algebra.ring.zero
        return [self.terms.get(w, zero) for w in self.algebra.basis]

    def support(self):
        return sorted(self.terms, key=Perm.sort_key)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        _check_same_algebra(self.algebra, other.algebra)

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, self.algebra.ring.zero) + c
        return HeckeElement(self.algebra, terms)

    def __neg__(self):
        return HeckeElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = self.algebra.domain.convert(scalar)
        return HeckeElement(self.algebra, {w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return '0'
        return ' + '.join(
            f"({self.algebra.domain.to_str(self.terms[w])})T{list(w.images)}"
            for w in self.support()
        )


def _check_same_algebra(a, b):
    if a.n != b.n:
        raise RankMismatch(f"Elements of Hec({a.n}) and Hec({b.n}) combined")
    if a.domain != b.domain:
        raise DomainMismatch(f"Elements over {a.domain.label} and {b.domain.label} combined")
    if a.q != b.q:
        raise MixedParameters("Elements with different Hecke parameters combined")


def left_generator(i, element):
    """T_i * element."""
    algebra = element.algebra
    q = algebra.q
    ring = algebra.ring
    terms = {}
    for w, c in element.terms.items():
        v = w.left_simple(i)
        if w.left_length_increases(i):
            terms[v] = terms.get(v, ring.zero) + c
        else:
            terms[v] = terms.get(v, ring.zero) + q * c
            terms[w] = terms.get(w, ring.zero) + (q - ring.one) * c
    return HeckeElement(algebra, terms)


def hecke_multiply(a, b):
    """The product a * b."""
    _check_same_algebra(a.algebra, b.algebra)
    algebra = a.algebra
    ring = algebra.ring
    total = {}
    for u, c in a.terms.items():
        partial = b
        for i in reversed(u.reduced_word):
            partial = left_generator(i, partial)
        for w, coefficient in partial.terms.items():
            total[w] = total.get(w, ring.zero) + c * coefficient
    return HeckeElement(algebra, total)


def star_involution(a):
    """The anti-automorphism fixing every T_i: T_w -> T_{w^-1}."""
    return HeckeElement(a.algebra, {w.inverse: c for w, c in a.terms.items()})


def _sharp_generator_action(i, element):
    """(-T_i + (q - 1)) * element."""
    algebra = element.algebra
    shift = algebra.q - algebra.ring.one
    return element.scale(shift) - left_generator(i, element)


def sharp_basis_image(algebra, w):
    """sharp(T_w), cached per algebra."""
    cache = algebra._sharp_cache
    if w in cache:
        return cache[w]
    image = algebra.one()
    for i in reversed(w.reduced_word):
        image = _sharp_generator_action(i, image)
    with algebra._sharp_lock:
        cache.setdefault(w, image)
    return cache[w]


def sharp_automorphism(a):
    """The automorphism with sharp(T_i) = -T_i + (q - 1)."""
    algebra = a.algebra
    result = algebra.zero()
    for w, c in a.terms.items():
        result = result + sharp_basis_image(algebra, w).scale(c)
    return result


def dagger_involution(a):
    """
    The anti-automorphism with dagger(T_i) = -T_i + (q - 1).

    Evaluated on T_w by multiplying the generator images in reversed word order.
    """
    algebra = a.algebra
    result = algebra.zero()
    for w, c in a.terms.items():
        image = algebra.one()
        for i in w.reduced_word:
            image = _sharp_generator_action(i, image)
        result = result + image.scale(c)
    return result


def x_element(algebra, alpha):
    """Sum of T_w over the Young subgroup Sigma(alpha)."""
    subgroup = young_subgroup(alpha, algebra.n)
    one = algebra.ring.one
    return HeckeElement(algebra, {w: one for w in subgroup.elements})


def y_element(algebra, alpha):
    """Sum of (-q)^(N - l(w)) T_w over Sigma(alpha), with N = n(n-1)/2."""
    subgroup = young_subgroup(alpha, algebra.n)
    top = comb(algebra.n, 2)
    minus_q = -algebra.q
    return HeckeElement(algebra, {
        w: algebra.domain.power(minus_q, top - w.length) for w in subgroup.elements
    })


def pairing(a, b):
    """
    The symmetric form <a, b>: coefficient of T_e in a * b^*.

    Computed as sum over w of a_w b_w q^l(w).
    """
    _check_same_algebra(a.algebra, b.algebra)
    algebra = a.algebra
    total = algebra.ring.zero
    for w, c in a.terms.items():
        other = b.terms.get(w)
        if other:
            total += c * other * algebra.q_power(w.length)
    return Scalar(algebra.domain, total)


def specialise_element(a, target):
    """
    Image of an element of a generic algebra (q = t) under t -> target.q.

    Args:
        a: HeckeElement over Q(t), F_p(t) or Laurent polynomials, with q = t
        target: HeckeAlgebra of the same rank over the constant field
    """
    source = a.algebra
    if source.n != target.n:
        raise RankMismatch(f"Cannot specialise Hec({source.n}) into Hec({target.n})")
    if not source.domain.is_generic or source.q != source.domain.generator():
        raise DomainMismatch(f"{source.describe()} is not generic")
    qbar = target.parameter()
    terms = {}
    for w, c in a.terms.items():
        image = specialize(Scalar(source.domain, c), qbar)
        terms[w] = target.domain.convert(image.value)
    return HeckeElement(target, terms)

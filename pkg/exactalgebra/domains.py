"""
Exact scalar domains.

A ScalarDomain names one of the coefficient rings the engine works over and
hands out the matching sympy domain: QQ, GF(p), ZZ, the rational function
fields QQ(t) and GF(p)(t), and Laurent polynomials over QQ or GF(p). Values
are plain sympy domain elements; Scalar pairs a value with its domain at API
boundaries (parsing, specialisation, JSON output).
"""

from dataclasses import dataclass
from functools import lru_cache

from sympy import Symbol, isprime, sympify
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.polyerrors import CoercionFailed

from heckecentral.exceptions import (
    DenominatorVanishes,
    DomainMismatch,
    HeckeCentralError,
    ZeroParameter,
)

# The indeterminate of every function domain
T = Symbol('t')

RATIONAL = 'Q'
PRIME_FIELD = 'Fp'
RATIONAL_FUNCTION = 'Qt'
PRIME_FUNCTION = 'Fpt'
INTEGER = 'Z'
LAURENT = 'Laurent'

DOMAIN_KINDS = [
    (RATIONAL, 'Rational numbers'),
    (PRIME_FIELD, 'Prime field F_p'),
    (RATIONAL_FUNCTION, 'Rational functions over Q'),
    (PRIME_FUNCTION, 'Rational functions over F_p'),
    (INTEGER, 'Integers'),
    (LAURENT, 'Laurent polynomials'),
]

_NEEDS_PRIME = {PRIME_FIELD, PRIME_FUNCTION}
_NO_PRIME = {RATIONAL, RATIONAL_FUNCTION, INTEGER}


@lru_cache(maxsize=None)
def _sympy_ring(kind, p):
    if kind == RATIONAL:
        return QQ
    if kind == PRIME_FIELD:
        return GF(p, symmetric=False)
    if kind == INTEGER:
        return ZZ
    if kind == RATIONAL_FUNCTION or (kind == LAURENT and p is None):
        return QQ.frac_field(T)
    # PRIME_FUNCTION, or LAURENT over F_p
    return GF(p, symmetric=False).frac_field(T)


@dataclass(frozen=True)
class ScalarDomain:
    """A coefficient ring, identified by its kind and (for F_p) its prime."""

    kind: str
    p: int = None

    def __post_init__(self):
        kinds = [choice[0] for choice in DOMAIN_KINDS]
        if self.kind not in kinds:
            raise HeckeCentralError(f"Unknown scalar domain '{self.kind}'")
        if self.kind in _NEEDS_PRIME and self.p is None:
            raise HeckeCentralError(f"Domain {self.kind} needs a prime")
        if self.kind in _NO_PRIME and self.p is not None:
            raise HeckeCentralError(f"Domain {self.kind} has characteristic 0 and takes no prime")
        if self.p is not None and not isprime(self.p):
            raise HeckeCentralError(f"{self.p} is not a prime")

    # Constructors

    @classmethod
    def rationals(cls):
        return cls(RATIONAL)

    @classmethod
    def prime_field(cls, p):
        return cls(PRIME_FIELD, p)

    @classmethod
    def integers(cls):
        return cls(INTEGER)

    @classmethod
    def function_field(cls, p=None):
        """Q(t) when p is None, F_p(t) otherwise."""
        if p is None:
            return cls(RATIONAL_FUNCTION)
        return cls(PRIME_FUNCTION, p)

    @classmethod
    def laurent(cls, p=None):
        return cls(LAURENT, p)

    @classmethod
    def parse(cls, text):
        """
        Parse a field flag: Q, Fp:p, Qt, Fpt:p, Z, Lt or Lt:p.
        """
        text = (text or '').strip()
        name, _, prime = text.partition(':')
        try:
            prime = int(prime) if prime else None
        except ValueError:
            raise HeckeCentralError(f"Cannot read the prime in '{text}'")
        table = {
            'Q': RATIONAL,
            'Fp': PRIME_FIELD,
            'Qt': RATIONAL_FUNCTION,
            'Fpt': PRIME_FUNCTION,
            'Z': INTEGER,
            'Lt': LAURENT,
        }
        if name not in table:
            raise HeckeCentralError(f"Unknown field '{text}'")
        return cls(table[name], prime)

    # Properties

    @property
    def ring(self):
        """The sympy domain holding the values."""
        return _sympy_ring(self.kind, self.p)

    @property
    def is_field(self):
        return self.kind not in (INTEGER, LAURENT)

    @property
    def is_generic(self):
        """True when the domain carries the indeterminate t."""
        return self.kind in (RATIONAL_FUNCTION, PRIME_FUNCTION, LAURENT)

    @property
    def characteristic(self):
        return self.p or 0

    @property
    def label(self):
        base = 'Q' if self.p is None else f'F{self.p}'
        return {
            RATIONAL: 'Q',
            PRIME_FIELD: base,
            RATIONAL_FUNCTION: 'Q(t)',
            PRIME_FUNCTION: f'{base}(t)',
            INTEGER: 'Z',
            LAURENT: f'{base}[t,1/t]',
        }[self.kind]

    def fraction_domain(self):
        """The smallest field containing this domain."""
        if self.kind == INTEGER:
            return ScalarDomain.rationals()
        if self.kind == LAURENT:
            return ScalarDomain.function_field(self.p)
        return self

    def descriptor(self):
        return {'domain': self.kind, 'p': self.p, 'label': self.label}

    # Elements

    @property
    def zero(self):
        return self.ring.zero

    @property
    def one(self):
        return self.ring.one

    def generator(self):
        """The indeterminate t of a function domain."""
        if not self.is_generic:
            raise DomainMismatch(f"{self.label} has no indeterminate")
        return self.ring.from_sympy(T)

    def convert(self, value):
        """Bring an int, a sympy expression or a domain element into the ring."""
        ring = self.ring
        if ring.of_type(value):
            return value
        if isinstance(value, int):
            return ring.convert(value)
        expr = sympify(value)
        try:
            if expr.is_Rational and not expr.is_Integer:
                return ring.convert(int(expr.p)) / self._nonzero(ring.convert(int(expr.q)), expr)
            return ring.from_sympy(expr)
        except CoercionFailed as exc:
            raise DomainMismatch(f"Cannot read {expr} in {self.label}") from exc

    def _nonzero(self, value, source):
        if not value:
            raise DenominatorVanishes(f"Denominator of {source} vanishes in {self.label}")
        return value

    def parse_value(self, text):
        """Read a scalar written like 1/2, -1, t or (t**2-1)/(t-1)."""
        text = str(text).replace('^', '**')
        return self.convert(sympify(text, locals={'t': T}))

    def to_str(self, value):
        return str(self.ring.to_sympy(value))

    def power(self, value, exponent):
        """value**exponent, allowing negative exponents for units."""
        if exponent >= 0:
            return value ** exponent
        return (self.one / value) ** (-exponent)


@dataclass(frozen=True)
class Scalar:
    """A value together with the domain it lives in."""

    domain: ScalarDomain
    value: object

    @classmethod
    def of(cls, domain, value):
        return cls(domain, domain.convert(value))

    def _check(self, other):
        if not isinstance(other, Scalar):
            return Scalar.of(self.domain, other)
        if other.domain != self.domain:
            raise DomainMismatch(f"{self.domain.label} and {other.domain.label} scalars mixed")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.domain, self.value + other.value)

    def __sub__(self, other):
        other = self._check(other)
        return Scalar(self.domain, self.value - other.value)

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.domain, self.value * other.value)

    def __neg__(self):
        return Scalar(self.domain, -self.value)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError(f"0 has no inverse in {self.domain.label}")
        return Scalar(self.domain, self.domain.one / self.value)

    @property
    def is_zero(self):
        return not self.value

    def __str__(self):
        return self.domain.to_str(self.value)


def _ground_value(coefficient, ground, target):
    """Map a coefficient of t into the target constant field."""
    if ground == QQ:
        if target.characteristic == 0:
            return target.convert(QQ.to_sympy(coefficient))
        numerator = target.convert(int(QQ.numer(coefficient)))
        denominator = target.convert(int(QQ.denom(coefficient)))
        if not denominator:
            raise DenominatorVanishes(
                f"Coefficient {coefficient} has no image in {target.label}"
            )
        return numerator / denominator
    # coefficients in F_p only specialise into F_p
    if target.characteristic != ground.mod:
        raise DomainMismatch(f"Cannot map F{ground.mod} coefficients into {target.label}")
    return target.convert(int(coefficient))


def _evaluate(poly, ground, point, target):
    total = target.zero
    for (exponent,), coefficient in poly.terms():
        total += _ground_value(coefficient, ground, target) * point.value ** exponent
    return total


def specialize(s, qbar):
    """
    Image of a rational function or Laurent polynomial under t -> qbar.

    Args:
        s: Scalar in a function domain (Q(t), F_p(t) or Laurent)
        qbar: Scalar in the target constant field

    Returns:
        Scalar in qbar's domain

    Raises:
        ZeroParameter if qbar is zero, DenominatorVanishes at a pole.
    """
    if not s.domain.is_generic:
        raise DomainMismatch(f"{s.domain.label} has no indeterminate to specialise")
    if qbar.is_zero:
        raise ZeroParameter("Cannot specialise t to 0")
    target = qbar.domain
    numerator, denominator = s.value.numer.cancel(s.value.denom)
    ground = s.domain.ring.domain
    bottom = _evaluate(denominator, ground, qbar, target)
    if not bottom:
        raise DenominatorVanishes(
            f"Denominator {s.domain.to_str(s.domain.ring.convert(denominator))} "
            f"vanishes at t = {qbar}"
        )
    top = _evaluate(numerator, ground, qbar, target)
    return Scalar(target.fraction_domain(), top / bottom)


def laurent_bounds(s):
    """
    Lowest and highest exponent of t in a Laurent polynomial.

    Returns None for zero.
    """
    if s.is_zero:
        return None
    numerator, denominator = s.value.numer.cancel(s.value.denom)
    terms = denominator.terms()
    if len(terms) != 1:
        raise DomainMismatch(f"{s} is not a Laurent polynomial")
    (shift,), _ = terms[0]
    exponents = [exponent for (exponent,), _ in numerator.terms()]
    return min(exponents) - shift, max(exponents) - shift


def is_unit_monomial(value, domain, q, bound=64):
    """
    True when value equals +-q**N for some N >= 0.

    Over a function field with q = t this is a check on the shape of the
    fraction; for numeric q the powers are tried up to `bound`.
    """
    if not value:
        return False
    if domain.is_generic and q == domain.generator():
        numerator, denominator = value.numer.cancel(value.denom)
        terms = numerator.terms()
        if len(terms) != 1 or not denominator.is_ground:
            return False
        coefficient = terms[0][1] / denominator.LC
        ground = domain.ring.domain
        return coefficient in (ground.one, -ground.one)
    power = domain.one
    for _ in range(bound + 1):
        if value == power or value == -power:
            return True
        power = power * q
    return False

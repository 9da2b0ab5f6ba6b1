"""Exact scalars: Laurent polynomials in v, the field Q(v), cyclotomic
fields Q(z) = Q[x]/Phi_l and rational specializations v -> q.

Every quantity with a division in it (quantum binomials, module structure
constants, Jones-Wenzl coefficients) is computed over Z[v, v^-1] or Q(v)
first and specialized afterwards.
"""

import re
import math
from fractions import Fraction
from functools import lru_cache, reduce
from dataclasses import dataclass

from .errors import DenominatorVanishes, IntegralityFailure, InvalidInput


class LaurentPoly:
    """Immutable Laurent polynomial {exponent: int coefficient}, no zeros stored."""

    __slots__ = ('coeffs', '_hash')

    def __init__(self, coeffs=None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def from_list(cls, cs, shift=0):
        return cls({i + shift: c for i, c in enumerate(cs)})

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == {0: 1}

    def valuation(self):
        return min(self.coeffs)

    def degree(self):
        return max(self.coeffs)

    def to_list(self):
        """Ascending coefficient list starting at the valuation."""
        lo, hi = self.valuation(), self.degree()
        return [self.coeffs.get(k, 0) for k in range(lo, hi + 1)]

    def shift(self, k):
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def bar(self):
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def content(self):
        return reduce(math.gcd, self.coeffs.values(), 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self.coeffs.items()})
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def exact_div(self, other):
        """Quotient in Z[v, v^-1], or None when other does not divide self."""
        if other.is_zero():
            raise ZeroDivisionError('division by the zero polynomial')
        if self.is_zero():
            return LaurentPoly()
        q = _pexact_div(self.to_list(), other.to_list())
        if q is None:
            return None
        return LaurentPoly.from_list(q, self.valuation() - other.valuation())

    def to_text(self):
        if not self.coeffs:
            return '0'
        return ' + '.join(f'{self.coeffs[k]}*v^{k}' for k in sorted(self.coeffs, reverse=True))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == '0':
            return cls()
        out = {}
        for term in text.split(' + '):
            m = re.fullmatch(r'\s*(-?\d+)\*v\^(-?\d+)\s*', term)
            if not m:
                raise InvalidInput(f'bad Laurent term {term!r}')
            k = int(m.group(2))
            out[k] = out.get(k, 0) + int(m.group(1))
        return cls(out)

    def __repr__(self):
        return f'LaurentPoly({self.to_text()})'


V = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


# ascending coefficient lists

def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _pdivmod(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    _trim(a), _trim(b)
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[:len(b) - 1])


def _pexact_div(a, b):
    q, r = _pdivmod(a, b)
    if r or any(c.denominator != 1 for c in q):
        return None
    return [int(c) for c in q]


def _primitive(a):
    """Scale a rational list to coprime integers with positive leading term."""
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (Fraction(c).denominator for c in a), 1)
    ints = [int(Fraction(c) * den) for c in a]
    g = reduce(math.gcd, ints, 0) or 1
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _pgcd(a, b):
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _primitive(a)


def _reduce_fraction(num, den):
    if den.is_zero():
        raise ZeroDivisionError('zero denominator')
    if num.is_zero():
        return ZERO, ONE
    k = den.valuation()
    if k:
        num, den = num.shift(-k), den.shift(-k)
    if len(den.coeffs) > 1:
        nv = num.valuation()
        p, d = num.to_list(), den.to_list()
        g = _pgcd(p, d)
        if len(g) > 1:
            p, d = _pexact_div(p, g), _pexact_div(d, g)
        num, den = LaurentPoly.from_list(p, nv), LaurentPoly.from_list(d)
    g = math.gcd(num.content(), den.content())
    if den.coeffs[0] < 0:
        g = -g
    if g != 1:
        num = LaurentPoly({e: c // g for e, c in num.coeffs.items()})
        den = LaurentPoly({e: c // g for e, c in den.coeffs.items()})
    return num, den


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Phi_n as an ascending integer tuple, from x^n - 1 = prod_{d | n} Phi_d."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _pexact_div(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


@lru_cache(maxsize=None)
def _power_table(ell):
    """x^k mod Phi_ell for 0 <= k < max(ell, 2 deg Phi_ell - 1)."""
    phi = cyclotomic_polynomial(ell)
    n = len(phi) - 1
    table = []
    cur = [0] * n
    cur[0] = 1
    for _ in range(max(ell, 2 * n - 1)):
        table.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return table


@dataclass(frozen=True)
class ScalarContext:
    """generic (v transcendental), cyclotomic (v = z, z primitive of odd
    order ell >= 3) or rational (v = q)."""

    kind: str = 'generic'
    ell: int = None
    q: Fraction = None

    def __post_init__(self):
        if self.kind == 'cyclotomic':
            if not isinstance(self.ell, int) or self.ell < 3 or self.ell % 2 == 0:
                raise InvalidInput(f'root of unity order must be odd and >= 3, got {self.ell}')
        elif self.kind == 'rational':
            if self.q is None or Fraction(self.q) == 0:
                raise InvalidInput('rational specialization needs q != 0')
            object.__setattr__(self, 'q', Fraction(self.q))
        elif self.kind != 'generic':
            raise InvalidInput(f'unknown context kind {self.kind!r}')

    @classmethod
    def generic(cls):
        return cls('generic')

    @classmethod
    def cyclotomic(cls, ell):
        return cls('cyclotomic', ell=ell)

    @classmethod
    def rational(cls, q):
        return cls('rational', q=Fraction(q))

    @classmethod
    def from_label(cls, label):
        if label == 'generic':
            return cls.generic()
        if label.startswith('l='):
            return cls.cyclotomic(int(label[2:]))
        if label.startswith('q='):
            return cls.rational(Fraction(label[2:]))
        raise InvalidInput(f'unknown context label {label!r}')

    @property
    def label(self):
        if self.kind == 'cyclotomic':
            return f'l={self.ell}'
        if self.kind == 'rational':
            return f'q={self.q}'
        return 'generic'

    @property
    def is_generic(self):
        return self.kind == 'generic'

    @property
    def is_cyclotomic(self):
        return self.kind == 'cyclotomic'

    @property
    def order(self):
        """ell for roots of unity, None for the semisimple contexts."""
        return self.ell if self.kind == 'cyclotomic' else None

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, x):
        x = Fraction(x)
        if self.kind == 'generic':
            if x.denominator == 1:
                return GenericScalar(LaurentPoly.constant(int(x)), ONE, _reduced=True)
            return GenericScalar(LaurentPoly.constant(x.numerator), LaurentPoly.constant(x.denominator))
        if self.kind == 'cyclotomic':
            return CyclotomicScalar(self, (x,))
        return RationalScalar(self, x)

    def v_power(self, k):
        return self.specialize(LaurentPoly.monomial(k))

    def specialize(self, x):
        """Ring homomorphism v -> z (or v -> q) on polynomials and generic fractions."""
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, GenericScalar):
            if self.kind == 'generic':
                return x
            num, den = self.specialize(x.num), self.specialize(x.den)
            if den.is_zero():
                raise DenominatorVanishes(f'{x.to_text()} has a pole at {self.label}')
            return num / den
        if self.kind == 'generic':
            return GenericScalar(x, ONE, _reduced=True)
        if self.kind == 'cyclotomic':
            table = _power_table(self.ell)
            n = len(cyclotomic_polynomial(self.ell)) - 1
            out = [0] * n
            for k, c in x.coeffs.items():
                for i, t in enumerate(table[k % self.ell]):
                    out[i] += c * t
            return CyclotomicScalar(self, tuple(Fraction(c) for c in out))
        return RationalScalar(self, sum((c * self.q ** k for k, c in x.coeffs.items()), Fraction(0)))

    def parse(self, text):
        return parse_scalar(text, self)


class Scalar:
    """Common operator plumbing; subclasses implement _add, _mul, inverse."""

    __slots__ = ()

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise ValueError(f'mixing contexts {self.ctx.label} and {other.ctx.label}')
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._add(-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else self._mul(other.inverse())

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.ctx.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f'{type(self).__name__}({self.to_text()})'


class GenericScalar(Scalar):
    """Element num/den of Q(v), kept reduced: den has valuation 0 and a
    positive constant term, num and den share no factor or integer content."""

    __slots__ = ('num', 'den')

    ctx = ScalarContext.generic()

    def __init__(self, num, den=ONE, _reduced=False):
        if not _reduced:
            num, den = _reduce_fraction(num, den)
        self.num, self.den = num, den

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def _add(self, other):
        if self.den.is_one() and other.den.is_one():
            return GenericScalar(self.num + other.num, ONE, _reduced=True)
        if self.den == other.den:
            return GenericScalar(self.num + other.num, self.den)
        return GenericScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return GenericScalar(-self.num, self.den, _reduced=True)

    def _mul(self, other):
        if self.den.is_one() and other.den.is_one():
            return GenericScalar(self.num * other.num, ONE, _reduced=True)
        return GenericScalar(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError('inverse of zero in Q(v)')
        return GenericScalar(self.den, self.num)

    def divide_exact(self, p):
        """self / p inside Z[v, v^-1]; IntegralityFailure otherwise."""
        q = self.num.exact_div(p) if self.den.is_one() else None
        if q is None:
            raise IntegralityFailure(f'{self.to_text()} is not divisible by {p.to_text()}')
        return GenericScalar(q, ONE, _reduced=True)

    def bar(self):
        return GenericScalar(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        return isinstance(other, GenericScalar) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_text(self):
        return f'({self.num.to_text()})/({self.den.to_text()})'


class CyclotomicScalar(Scalar):
    """Element of Q[x]/Phi_ell as a rational coefficient tuple of length < deg Phi_ell."""

    __slots__ = ('ctx', 'coeffs')

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = tuple(_trim(list(coeffs)))

    def is_zero(self):
        return not self.coeffs

    def _add(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return CyclotomicScalar(self.ctx, tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self):
        return CyclotomicScalar(self.ctx, tuple(-c for c in self.coeffs))

    def _mul(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CyclotomicScalar(self.ctx, ())
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        table = _power_table(self.ctx.ell)
        n = len(table[0])
        out = prod[:n] + [Fraction(0)] * max(0, n - len(prod))
        for k in range(n, len(prod)):
            if prod[k]:
                for i, t in enumerate(table[k]):
                    out[i] += prod[k] * t
        return CyclotomicScalar(self.ctx, out)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError(f'inverse of zero in Q(z), {self.ctx.label}')
        # extended Euclid: s*a + t*phi = 1
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.ctx.ell)], list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        c = r1[0]
        return CyclotomicScalar(self.ctx, tuple(x / c for x in s1))._mul(CyclotomicScalar(self.ctx, (Fraction(1),)))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        return isinstance(other, CyclotomicScalar) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def to_text(self):
        if not self.coeffs:
            return '0'
        return ' + '.join(f'{c}*z^{k}' for k, c in reversed(list(enumerate(self.coeffs))) if c)


class RationalScalar(Scalar):
    __slots__ = ('ctx', 'value')

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.value = Fraction(value)

    def is_zero(self):
        return self.value == 0

    def _add(self, other):
        return RationalScalar(self.ctx, self.value + other.value)

    def __neg__(self):
        return RationalScalar(self.ctx, -self.value)

    def _mul(self, other):
        return RationalScalar(self.ctx, self.value * other.value)

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError(f'inverse of zero, {self.ctx.label}')
        return RationalScalar(self.ctx, 1 / self.value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return isinstance(other, RationalScalar) and self.ctx == other.ctx and self.value == other.value

    def __hash__(self):
        return hash((self.ctx, self.value))

    def to_text(self):
        return str(self.value)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def parse_scalar(text, ctx):
    text = text.strip()
    if ctx.kind == 'generic':
        m = re.fullmatch(r'\((.*)\)/\((.*)\)', text)
        if not m:
            raise InvalidInput(f'bad generic scalar {text!r}')
        return GenericScalar(LaurentPoly.parse(m.group(1)), LaurentPoly.parse(m.group(2)))
    if ctx.kind == 'cyclotomic':
        if text == '0':
            return ctx.zero()
        n = len(cyclotomic_polynomial(ctx.ell)) - 1
        out = [Fraction(0)] * n
        for term in text.split(' + '):
            m = re.fullmatch(r'\s*(-?\d+(?:/\d+)?)\*z\^(\d+)\s*', term)
            if not m or int(m.group(2)) >= n:
                raise InvalidInput(f'bad cyclotomic term {term!r}')
            out[int(m.group(2))] += Fraction(m.group(1))
        return CyclotomicScalar(ctx, out)
    try:
        return RationalScalar(ctx, Fraction(text))
    except ValueError as e:
        raise InvalidInput(f'bad rational scalar {text!r}') from e


@lru_cache(maxsize=None)
def qint_poly(a):
    """[a] = (v^a - v^-a)/(v - v^-1) over Z[v, v^-1]."""
    n = abs(a)
    sign = 1 if a >= 0 else -1
    return LaurentPoly({n - 1 - 2 * k: sign for k in range(n)})


@lru_cache(maxsize=None)
def qbinom_poly(a, b):
    if b < 0:
        raise ValueError(f'qbinom needs b >= 0, got {b}')
    num, den = ONE, ONE
    for i in range(b):
        num = num * qint_poly(a - i)
        den = den * qint_poly(i + 1)
    q = num.exact_div(den)
    if q is None:
        raise IntegralityFailure(f'[{a} choose {b}] is not a Laurent polynomial')
    return q


@lru_cache(maxsize=None)
def qint(a, ctx):
    return ctx.specialize(qint_poly(a))


@lru_cache(maxsize=None)
def qfact(b, ctx):
    if b < 0:
        raise ValueError(f'qfact needs b >= 0, got {b}')
    out = ONE
    for i in range(1, b + 1):
        out = out * qint_poly(i)
    return ctx.specialize(out)


@lru_cache(maxsize=None)
def qbinom(a, b, ctx):
    return ctx.specialize(qbinom_poly(a, b))


def specialize(x, ctx):
    return ctx.specialize(x)

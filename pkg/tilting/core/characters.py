"""Characters of U_q(sl2)-modules and tilting multiplicities.

A character is a dense numpy integer array over the weights lo, lo+1, ...
so that products are plain convolutions. Contexts enter only through the
root of unity order l (None for the semisimple contexts).
"""

from math import comb
from dataclasses import dataclass

import numpy as np
import bittensor as bt

from .errors import InconsistentCharacter, InvalidInput
from .roots import alcove_index, in_closure, is_linked, is_singular, linkage_class, translate
from .scalars import LaurentPoly


class Character:
    __slots__ = ('lo', 'coeffs')

    def __init__(self, lo, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        nz = np.flatnonzero(coeffs)
        if len(nz) == 0:
            self.lo, self.coeffs = 0, np.zeros(0, dtype=np.int64)
        else:
            self.lo, self.coeffs = lo + int(nz[0]), coeffs[nz[0]:nz[-1] + 1].copy()

    @classmethod
    def from_dict(cls, d):
        d = {w: m for w, m in d.items() if m}
        if not d:
            return cls(0, [])
        lo, hi = min(d), max(d)
        arr = np.zeros(hi - lo + 1, dtype=np.int64)
        for w, m in d.items():
            arr[w - lo] = m
        return cls(lo, arr)

    @classmethod
    def from_weights(cls, weights):
        d = {}
        for w in weights:
            d[w] = d.get(w, 0) + 1
        return cls.from_dict(d)

    def to_dict(self):
        return {self.lo + int(i): int(m) for i, m in enumerate(self.coeffs) if m}

    def __getitem__(self, w):
        i = w - self.lo
        return int(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0

    def is_zero(self):
        return len(self.coeffs) == 0

    @property
    def top(self):
        return self.lo + len(self.coeffs) - 1

    @property
    def dim(self):
        return int(self.coeffs.sum())

    def is_symmetric(self):
        return self.is_zero() or (self.lo == -self.top and np.array_equal(self.coeffs, self.coeffs[::-1]))

    def is_nonnegative(self):
        return bool((self.coeffs >= 0).all())

    def _aligned(self, other):
        if self.is_zero():
            return other.lo, np.zeros_like(other.coeffs), other.coeffs
        if other.is_zero():
            return self.lo, self.coeffs, np.zeros_like(self.coeffs)
        lo = min(self.lo, other.lo)
        hi = max(self.top, other.top)
        a = np.zeros(hi - lo + 1, dtype=np.int64)
        b = np.zeros(hi - lo + 1, dtype=np.int64)
        a[self.lo - lo:self.lo - lo + len(self.coeffs)] = self.coeffs
        b[other.lo - lo:other.lo - lo + len(other.coeffs)] = other.coeffs
        return lo, a, b

    def __add__(self, other):
        lo, a, b = self._aligned(other)
        return Character(lo, a + b)

    def __sub__(self, other):
        lo, a, b = self._aligned(other)
        return Character(lo, a - b)

    def scale(self, m):
        return Character(self.lo, self.coeffs * m)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Character(0, [])
        return Character(self.lo + other.lo, np.convolve(self.coeffs, other.coeffs))

    def __pow__(self, n):
        out = Character(0, [1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Character) and self.lo == other.lo and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f'Character({self.to_dict()})'


def weyl_character(lam):
    if lam < 0:
        raise ValueError(f'weyl character needs lam >= 0, got {lam}')
    arr = np.zeros(2 * lam + 1, dtype=np.int64)
    arr[::2] = 1
    return Character(-lam, arr)


def tilting_weyl_mult(lam, mu, l):
    """(T(lam) : Delta(mu)); l None means the semisimple case."""
    if mu == lam:
        return 1
    if l is None or in_closure(lam, l) or is_singular(lam, l):
        return 0
    b = (lam + 1) % l
    return int(mu == lam - 2 * b)


def translated_pair(lam, mu, l, base=0):
    """Move a linked pair off the walls into the orbit of the regular weight
    base; (T(lam) : Delta(mu)) is unchanged by the move."""
    if l is None:
        raise InvalidInput('translation needs a root of unity order')
    if not is_linked(lam, mu, l):
        raise InvalidInput(f'{lam} and {mu} are not linked at l={l}')
    return translate(lam, l, base), translate(mu, l, base)


def tilting_weyl_poly(lam, mu, l):
    """Graded multiplicity n_{mu lam}(v) = v^(number of walls between)."""
    m = tilting_weyl_mult(lam, mu, l)
    if not m:
        return LaurentPoly()
    return LaurentPoly.monomial(0 if mu == lam else 1)


def tilting_weyl_factors(lam, l):
    return [mu for mu in range(lam, -1, -2) if tilting_weyl_mult(lam, mu, l)]


def tilting_character(lam, l):
    out = Character(0, [])
    for mu in tilting_weyl_factors(lam, l):
        out = out + weyl_character(mu)
    return out


def power_character(d):
    return weyl_character(1) ** d


def tensor_character(weights, l):
    out = Character(0, [1])
    for lam in weights:
        out = out * tilting_character(lam, l)
    return out


@dataclass(frozen=True)
class TiltingMultiset:
    """m_lam copies of T(lam) at root of unity order ell (None: semisimple)."""

    entries: dict
    ell: int = None

    def items(self):
        return sorted(self.entries.items(), reverse=True)

    def get(self, lam, default=0):
        return self.entries.get(lam, default)

    def character(self):
        out = Character(0, [])
        for lam, m in self.entries.items():
            out = out + tilting_character(lam, self.ell).scale(m)
        return out

    def weyl_multiplicities(self):
        """(T : Delta(mu)) = sum_lam m_lam (T(lam) : Delta(mu))."""
        out = {}
        for lam, m in self.entries.items():
            for mu in tilting_weyl_factors(lam, self.ell):
                out[mu] = out.get(mu, 0) + m
        return dict(sorted(out.items()))

    def end_dimension(self):
        """dim End(T) = sum_mu (T : Delta(mu)) (T : nabla(mu)); both factors agree for tiltings."""
        return sum(m * m for m in self.weyl_multiplicities().values())

    def to_json(self):
        return {str(lam): m for lam, m in self.items()}


def decompose_tilting(ch, l):
    """Peel tilting characters off ch from the top weight down."""
    if not ch.is_symmetric():
        raise InconsistentCharacter(f'character {ch.to_dict()} is not symmetric')
    if not ch.is_nonnegative():
        raise InconsistentCharacter(f'character {ch.to_dict()} has negative entries')
    entries = {}
    rest = ch
    while not rest.is_zero():
        top = rest.top
        m = rest[top]
        if m < 0 or top < 0:
            raise InconsistentCharacter(f'peeling left {rest.to_dict()} at l={l}')
        entries[top] = m
        bt.logging.trace(f'peel T({top}) x{m} at l={l}')
        rest = rest - tilting_character(top, l).scale(m)
        if not rest.is_nonnegative():
            raise InconsistentCharacter(f'T({top}) x{m} overshoots the character at l={l}')
    return TiltingMultiset(dict(sorted(entries.items(), reverse=True)), l)


def catalan(d):
    return comb(2 * d, d) // (d + 1)


def standard_count(d, lam):
    """Number of standard tableaux of the two-row shape with d nodes and row difference lam."""
    if lam < 0 or lam > d or (d - lam) % 2:
        return 0
    k = (d - lam) // 2
    return comb(d, k) - (comb(d, k - 1) if k else 0)


def simple_dimension_formula(lam, d, l):
    """dim L(lam) for End(V^d) as an alternating sum over the dot-orbit of lam."""
    if l is None or is_singular(lam, l):
        return standard_count(d, lam)
    if lam > d or (d - lam) % 2:
        return 0
    total = 0
    for mu in linkage_class(lam, l, d):
        if mu >= lam:
            sign = -1 if (alcove_index(mu, l) - alcove_index(lam, l)) % 2 else 1
            total += sign * standard_count(d, mu)
    return total

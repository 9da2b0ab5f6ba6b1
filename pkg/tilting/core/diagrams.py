"""Temperley-Lieb diagrams and their linear combinations.

A diagram with n bottom and m top points is a planar perfect matching of
the points 0..n-1 (bottom, left to right) and n..n+m-1 (top, left to
right). y * x stacks y on top of x; every closed loop costs delta = [2].
Jones-Wenzl elements are expanded over Q(v) and specialized.
"""

import re
from functools import lru_cache
from dataclasses import dataclass

import bittensor as bt

from .cellular import verify_cell_axioms
from .characters import catalan
from .errors import CoefficientPole, DenominatorVanishes, InvalidInput, NotIdempotentable, StrandMismatch
from .scalars import ScalarContext, qint


class TLDiagram:
    __slots__ = ('bottom', 'top', 'pairs', '_match', '_hash')

    def __init__(self, bottom, top, pairs, check=True):
        self.bottom, self.top = bottom, top
        self.pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
        self._match = None
        self._hash = None
        if check:
            points = sorted(p for pair in self.pairs for p in pair)
            if points != list(range(bottom + top)):
                raise InvalidInput(f'not a perfect matching of {bottom}+{top} points: {self.pairs}')
            if not self.is_planar():
                raise InvalidInput(f'matching {self.to_text()} is not planar')

    @classmethod
    def identity(cls, n):
        return cls(n, n, [(i, n + i) for i in range(n)], check=False)

    @classmethod
    def cap(cls, n, i):
        """n -> n-2 with strands i, i+1 (1-based) joined."""
        pairs = [(i - 1, i)]
        for k in range(n):
            if k < i - 1:
                pairs.append((k, n + k))
            elif k > i:
                pairs.append((k, n + k - 2))
        return cls(n, n - 2, pairs, check=False)

    @classmethod
    def cup(cls, n, i):
        """n -> n+2 with a new pair at positions i, i+1 (1-based)."""
        return cls.cap(n + 2, i).flip()

    @classmethod
    def generator(cls, i, n):
        """U_i on n strands."""
        return cls.cup(n - 2, i).compose(cls.cap(n, i))[0]

    @property
    def match(self):
        if self._match is None:
            m = {}
            for a, b in self.pairs:
                m[a], m[b] = b, a
            self._match = m
        return self._match

    def position(self, p):
        """Circular order: bottom left to right, then top right to left."""
        return p if p < self.bottom else self.bottom + (self.bottom + self.top - 1 - p)

    def is_planar(self):
        arcs = sorted(tuple(sorted((self.position(a), self.position(b)))) for a, b in self.pairs)
        stack = []
        for pos in range(self.bottom + self.top):
            for a, b in arcs:
                if a == pos:
                    stack.append(b)
                elif b == pos:
                    if not stack or stack[-1] != b:
                        return False
                    stack.pop()
        return not stack

    @property
    def through(self):
        return sum(1 for a, b in self.pairs if a < self.bottom <= b)

    def compose(self, other):
        """(self on top of other, number of closed loops)."""
        if other.top != self.bottom:
            raise StrandMismatch(f'cannot stack {self.bottom}-point bottom on a {other.top}-point top')
        n, m, k = other.bottom, other.top, self.top
        xm, ym = other.match, self.match
        seen = set()

        def walk(side, p):
            while True:
                if side == 'x':
                    q = xm[p]
                    if q < n:
                        return q
                    seen.add(q - n)
                    side, p = 'y', q - n
                else:
                    q = ym[p]
                    if q >= m:
                        return n + q - m
                    seen.add(q)
                    side, p = 'x', n + q

        pairs = set()
        for i in range(n):
            pairs.add(tuple(sorted((i, walk('x', i)))))
        for j in range(k):
            pairs.add(tuple(sorted((n + j, walk('y', m + j)))))
        loops = 0
        for t in range(m):
            if t in seen:
                continue
            loops += 1
            cur = t
            while cur not in seen:
                seen.add(cur)
                u = xm[n + cur] - n
                seen.add(u)
                cur = ym[u]
        return TLDiagram(n, k, pairs, check=False), loops

    def tensor(self, other):
        """self to the left of other."""
        n1, m1, n2, m2 = self.bottom, self.top, other.bottom, other.top
        n = n1 + n2

        def left(p):
            return p if p < n1 else n + p - n1

        def right(p):
            return n1 + p if p < n2 else n + m1 + p - n2

        pairs = [(left(a), left(b)) for a, b in self.pairs] + [(right(a), right(b)) for a, b in other.pairs]
        return TLDiagram(n, m1 + m2, pairs, check=False)

    def flip(self):
        n, m = self.bottom, self.top

        def move(p):
            return m + p if p < n else p - n

        return TLDiagram(m, n, [(move(a), move(b)) for a, b in self.pairs], check=False)

    def __eq__(self, other):
        return (isinstance(other, TLDiagram) and self.bottom == other.bottom
                and self.top == other.top and self.pairs == other.pairs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.bottom, self.top, self.pairs))
        return self._hash

    def __lt__(self, other):
        return (self.bottom, self.top, self.pairs) < (other.bottom, other.top, other.pairs)

    def to_text(self):
        head = str(self.bottom) if self.bottom == self.top else f'{self.bottom},{self.top}'
        return f'{head}; ' + ' '.join(f'({a + 1},{b + 1})' for a, b in self.pairs)

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r'\s*(\d+)(?:,(\d+))?\s*;(.*)', text)
        if not m:
            raise InvalidInput(f'bad diagram {text!r}')
        n = int(m.group(1))
        k = int(m.group(2)) if m.group(2) else n
        pairs = [(int(a) - 1, int(b) - 1) for a, b in re.findall(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)', m.group(3))]
        return cls(n, k, pairs)

    def __repr__(self):
        return f'TLDiagram({self.to_text()})'


def _noncrossing(points):
    if not points:
        yield []
        return
    a = points[0]
    for k in range(1, len(points), 2):
        inner, outer = points[1:k], points[k + 1:]
        for x in _noncrossing(inner):
            for y in _noncrossing(outer):
                yield [(a, points[k])] + x + y


@lru_cache(maxsize=None)
def half_diagrams(n, m):
    """All planar diagrams with n bottom and m top points, sorted."""
    if (n + m) % 2:
        return ()
    frame = TLDiagram(n, m, [], check=False)
    total = n + m
    point = {frame.position(p): p for p in range(total)}
    out = [TLDiagram(n, m, [(point[a], point[b]) for a, b in arcs], check=False)
           for arcs in _noncrossing(list(range(total)))]
    return tuple(sorted(out))


def tl_basis(d):
    """All planar (d, d) diagrams; Catalan(d) of them."""
    if d < 1:
        raise InvalidInput(f'TL needs d >= 1, got {d}')
    out = half_diagrams(d, d)
    assert len(out) == catalan(d)
    return list(out)


class TLElement:
    """Finite linear combination of diagrams of one shape over a ScalarContext."""

    __slots__ = ('terms', 'ctx', 'bottom', 'top')

    def __init__(self, terms, ctx, bottom, top):
        self.terms = {D: c for D, c in terms.items() if c}
        self.ctx, self.bottom, self.top = ctx, bottom, top

    @classmethod
    def from_diagram(cls, D, ctx, coeff=None):
        return cls({D: ctx.one() if coeff is None else coeff}, ctx, D.bottom, D.top)

    @classmethod
    def identity(cls, n, ctx):
        return cls.from_diagram(TLDiagram.identity(n), ctx)

    @classmethod
    def generator(cls, i, n, ctx):
        return cls.from_diagram(TLDiagram.generator(i, n), ctx)

    @classmethod
    def zero(cls, bottom, top, ctx):
        return cls({}, ctx, bottom, top)

    @property
    def delta(self):
        return qint(2, self.ctx)

    def _same_shape(self, other):
        if (self.bottom, self.top) != (other.bottom, other.top):
            raise StrandMismatch(f'{self.bottom}->{self.top} vs {other.bottom}->{other.top} diagrams')

    def __add__(self, other):
        self._same_shape(other)
        out = dict(self.terms)
        for D, c in other.terms.items():
            out[D] = out[D] + c if D in out else c
        return TLElement(out, self.ctx, self.bottom, self.top)

    def __neg__(self):
        return TLElement({D: -c for D, c in self.terms.items()}, self.ctx, self.bottom, self.top)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TLElement({D: c * x for D, x in self.terms.items()}, self.ctx, self.bottom, self.top)

    def __mul__(self, other):
        """self stacked on top of other."""
        if other.top != self.bottom:
            raise StrandMismatch(f'cannot compose {self.bottom}-strand bottom with {other.top}-strand top')
        delta = self.delta
        out = {}
        for Dy, a in self.terms.items():
            for Dx, b in other.terms.items():
                D, loops = Dy.compose(Dx)
                c = a * b * delta ** loops if loops else a * b
                out[D] = out[D] + c if D in out else c
        return TLElement(out, self.ctx, other.bottom, self.top)

    def __matmul__(self, other):
        out = {}
        for D1, a in self.terms.items():
            for D2, b in other.terms.items():
                D = D1.tensor(D2)
                out[D] = out[D] + a * b if D in out else a * b
        return TLElement(out, self.ctx, self.bottom + other.bottom, self.top + other.top)

    def flip(self):
        return TLElement({D.flip(): c for D, c in self.terms.items()}, self.ctx, self.top, self.bottom)

    def coefficient(self, D):
        return self.terms.get(D, self.ctx.zero())

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def specialize(self, ctx):
        try:
            return TLElement({D: ctx.specialize(c) for D, c in self.terms.items()}, ctx, self.bottom, self.top)
        except DenominatorVanishes as e:
            raise CoefficientPole(str(e)) from e

    def __eq__(self, other):
        return (isinstance(other, TLElement) and (self.bottom, self.top) == (other.bottom, other.top)
                and self.terms == other.terms)

    __hash__ = None

    def to_json(self):
        return [[D.to_text(), c.to_text()] for D, c in self.items()]

    def __repr__(self):
        return f'TLElement({len(self.terms)} terms, {self.bottom}->{self.top}, {self.ctx.label})'


def compose(y, x):
    return y * x


def check_poles(k, ctx):
    """CoefficientPole unless [j] != 0 in ctx for 2 <= j <= k."""
    for j in range(2, k + 1):
        if not qint(j, ctx):
            raise CoefficientPole(f'[{j}] = 0 at {ctx.label}: JW_{k} does not exist')


@lru_cache(maxsize=None)
def _jw_generic(d):
    ctx = ScalarContext.generic()
    if d == 0:
        return TLElement.from_diagram(TLDiagram(0, 0, []), ctx)
    if d == 1:
        return TLElement.identity(1, ctx)
    prev = _jw_generic(d - 1) @ TLElement.identity(1, ctx)
    u = TLElement.generator(d - 1, d, ctx)
    c = qint(d - 1, ctx) / qint(d, ctx)
    return prev - (prev * u * prev).scale(c)


def jones_wenzl(d, ctx):
    """JW_d = JW_(d-1) (x) 1 - [d-1]/[d] (JW_(d-1) (x) 1) U_(d-1) (JW_(d-1) (x) 1)."""
    check_poles(d, ctx)
    return _jw_generic(d).specialize(ctx)


def sign_sequences(d):
    """All eps in {+1, -1}^d with nonnegative partial sums, +1 tried first."""
    out = []

    def grow(prefix, s):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for e in (1, -1):
            if s + e >= 0:
                grow(prefix + [e], s + e)

    grow([], 0)
    return out


def _validate_signs(eps):
    s = 0
    for e in eps:
        if e not in (1, -1):
            raise InvalidInput(f'sign vector entries must be +1 or -1, got {e}')
        s += e
        if s < 0:
            raise InvalidInput(f'sign vector {eps} has a negative partial sum')
    if not eps:
        raise InvalidInput('empty sign vector')
    return max(_partial_sums(eps))


def _partial_sums(eps):
    out, s = [], 0
    for e in eps:
        s += e
        out.append(s)
    return out


@lru_cache(maxsize=None)
def _half_generic(eps):
    ctx = ScalarContext.generic()
    if len(eps) == 1:
        return TLElement.identity(1, ctx)
    prev = _half_generic(eps[:-1])
    i = sum(eps[:-1])
    step = prev @ TLElement.identity(1, ctx)
    if eps[-1] == 1:
        return _jw_generic(i + 1) * step
    cap = TLElement.identity(i - 1, ctx) @ TLElement.from_diagram(TLDiagram.cap(2, 1), ctx)
    return _jw_generic(i - 1) * cap * step


def half_jw(eps, ctx):
    """t_eps: d strands down to sum(eps) strands."""
    check_poles(_validate_signs(tuple(eps)), ctx)
    return _half_generic(tuple(eps)).specialize(ctx)


def generalized_jw(eps, ctx):
    """JW_eps = flip(t_eps) t_eps."""
    eps = tuple(eps)
    check_poles(_validate_signs(eps), ctx)
    t = _half_generic(eps)
    return (t.flip() * t).specialize(ctx)


def tl_semisimplicity(d, ctx):
    """TL_d(delta) is semisimple iff d < l at a root of unity of order l."""
    ell = ctx.order
    return ell is None or d < ell


def rescale_to_idempotents(elements, ctx):
    """Scalars a with (a x)^2 = a x, checked pairwise orthogonal and summing to 1."""
    out = []
    for x in elements:
        sq = x * x
        if x.is_zero():
            raise NotIdempotentable('zero element')
        D, c0 = x.items()[0]
        c = sq.coefficient(D) / c0
        if not c or sq != x.scale(c):
            raise NotIdempotentable(f'x^2 is not a nonzero multiple of x for {x!r}')
        out.append(x.scale(c.inverse()))
    n = out[0].bottom if out else 0
    for a, e in enumerate(out):
        for b, f in enumerate(out):
            if a != b and not (e * f).is_zero():
                raise NotIdempotentable(f'idempotents {a} and {b} are not orthogonal')
    total = TLElement.zero(n, n, ctx)
    for e in out:
        total = total + e
    if out and total != TLElement.identity(n, ctx):
        raise NotIdempotentable('idempotents do not sum to 1')
    bt.logging.debug(f'{len(out)} orthogonal idempotents at {ctx.label}')
    return out


@dataclass(frozen=True)
class Tableau:
    """Standard two-row tableau; rows hold 1-based entries."""

    rows: tuple

    @classmethod
    def from_signs(cls, eps):
        first = tuple(k + 1 for k, e in enumerate(eps) if e == 1)
        second = tuple(k + 1 for k, e in enumerate(eps) if e == -1)
        return cls((first, second))

    def signs(self):
        first = set(self.rows[0])
        return tuple(1 if k in first else -1 for k in range(1, self.size + 1))

    @property
    def size(self):
        return len(self.rows[0]) + len(self.rows[1])

    @property
    def shape(self):
        return len(self.rows[0]), len(self.rows[1])

    @property
    def weight(self):
        return len(self.rows[0]) - len(self.rows[1])

    def is_standard(self):
        first, second = self.rows
        if sorted(first + second) != list(range(1, self.size + 1)):
            return False
        if list(first) != sorted(first) or list(second) != sorted(second) or len(second) > len(first):
            return False
        return all(a < b for a, b in zip(first, second))

    def __str__(self):
        return ' '.join(map(str, self.rows[0])) + ' / ' + ' '.join(map(str, self.rows[1]))


def standard_tableaux(d, lam):
    """Standard tableaux with d nodes and row difference lam."""
    return [Tableau.from_signs(eps) for eps in sign_sequences(d) if sum(eps) == lam]


def tableau_to_half_diagram(t):
    """Cap each second-row entry with the largest unmatched smaller first-row entry."""
    if not t.is_standard():
        raise InvalidInput(f'tableau {t} is not standard')
    d, k = t.size, t.weight
    second = set(t.rows[1])
    stack, pairs = [], []
    for p in range(1, d + 1):
        if p in second:
            pairs.append((stack.pop() - 1, p - 1))
        else:
            stack.append(p)
    pairs += [(p - 1, d + n) for n, p in enumerate(stack)]
    return TLDiagram(d, k, pairs)


@dataclass
class TLCellDatum:
    """Cell datum on TL_d with elements keyed (lam, s, t), lam the row difference."""

    d: int
    ctx: object
    blocks: dict
    basis: dict
    degree_map: dict = None

    @property
    def poset(self):
        return sorted(self.blocks)

    @property
    def index_sets(self):
        return {lam: list(range(1, len(b) + 1)) for lam, b in sorted(self.blocks.items())}

    def keys(self):
        return list(self.basis)

    def __len__(self):
        return len(self.basis)

    def involution(self, x):
        return x.flip()

    def less(self, mu, lam):
        return mu < lam

    def vector(self, x):
        index = _diagram_index(self.d)
        return {index[D]: c for D, c in x.terms.items()}

    def product(self, a, b):
        return a * b

    def identity(self):
        return TLElement.identity(self.d, self.ctx)

    def dimension(self):
        return catalan(self.d)

    @property
    def graded(self):
        return self.degree_map is not None

    def degree(self, key):
        if self.degree_map is None:
            return None
        lam, i, j = key
        return self.degree_map[(lam, i)] + self.degree_map[(lam, j)]

    def degrees(self):
        return [self.degree(k) for k in self.keys()]


@lru_cache(maxsize=None)
def _diagram_index(d):
    return {D: n for n, D in enumerate(tl_basis(d))}


def graham_lehrer_basis(d, ctx):
    """c_st = flip(x_s) x_t over standard tableaux of every two-row shape, fewest columns first."""
    blocks, basis = {}, {}
    for lam in range(d % 2, d + 1, 2):
        tabs = standard_tableaux(d, lam)
        halves = [tableau_to_half_diagram(t) for t in tabs]
        blocks[lam] = tabs
        for s, xs in enumerate(halves):
            for t, xt in enumerate(halves):
                D, loops = xs.flip().compose(xt)
                assert not loops
                basis[(lam, s, t)] = TLElement.from_diagram(D, ctx)
    return TLCellDatum(d, ctx, blocks, basis)


def two_row_shapes(d):
    """(lam1, lam2) with lam1 + lam2 = d, fewest columns first."""
    return [((d + lam) // 2, (d - lam) // 2) for lam in range(d % 2, d + 1, 2)]


def verify_tl_cell_axioms(cd, generators=None):
    """The cell datum checks of End(T), run over the diagram basis."""
    if generators is None:
        generators = [cd.identity()] + [TLElement.generator(i, cd.d, cd.ctx) for i in range(1, cd.d)]
    return verify_cell_axioms(cd, generators)

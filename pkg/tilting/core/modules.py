"""Finite-dimensional U_q(sl2)-modules as weight-graded exact matrices.

A module stores its weights and the divided powers E^(j), F^(j) for
j = 1..maxdp, maxdp = max |weight|. Structure constants are produced over
Q(v) and specialized; a specialized module remembers its generic lift so
tensor products can divide by [j]! before specializing. Tilting models
built at a root of unity have no lift and use the integral coproduct of
divided powers instead.
"""

from functools import lru_cache

import bittensor as bt

from .errors import AsymmetricForm
from .characters import Character
from .linalg import Matrix, inverse, matrix_rank, nullspace
from .scalars import ScalarContext, qbinom, qbinom_poly, qint, qint_poly


class WeightModule:
    def __init__(self, weights, E, F, ctx, form=None, lift=None, label=''):
        self.weights = tuple(weights)
        self.E = tuple(E)
        self.F = tuple(F)
        self.ctx = ctx
        self.form = form
        self.lift = lift
        self.label = label
        self._spaces = None

    @property
    def dim(self):
        return len(self.weights)

    @property
    def maxdp(self):
        return len(self.E)

    @property
    def spaces(self):
        if self._spaces is None:
            spaces = {}
            for i, w in enumerate(self.weights):
                spaces.setdefault(w, []).append(i)
            self._spaces = spaces
        return self._spaces

    def weight_space(self, w):
        return self.spaces.get(w, [])

    def character(self):
        return Character.from_weights(self.weights)

    def K(self, power=1):
        return Matrix.diagonal([self.ctx.v_power(power * w) for w in self.weights], self.ctx)

    def Ediv(self, j):
        if j == 0:
            return Matrix.identity(self.dim, self.ctx)
        if j > self.maxdp:
            return Matrix.zeros(self.dim, self.dim, self.ctx)
        return self.E[j - 1]

    def Fdiv(self, j):
        if j == 0:
            return Matrix.identity(self.dim, self.ctx)
        if j > self.maxdp:
            return Matrix.zeros(self.dim, self.dim, self.ctx)
        return self.F[j - 1]

    def generator_powers(self):
        """Divided powers generating the action: E, F and, at a root of unity, E^(l), F^(l)."""
        powers = [1] if self.maxdp else []
        ell = self.ctx.order
        if ell is not None and ell <= self.maxdp:
            powers.append(ell)
        return powers

    def specialize(self, ctx):
        if not self.ctx.is_generic:
            raise ValueError('only generic modules can be specialized')
        if ctx.is_generic:
            return self
        return WeightModule(self.weights,
                            [m.specialize(ctx) for m in self.E],
                            [m.specialize(ctx) for m in self.F],
                            ctx,
                            form=self.form.specialize(ctx) if self.form is not None else None,
                            lift=self, label=self.label)

    def __repr__(self):
        return f'WeightModule({self.label or "?"}, dim={self.dim}, {self.ctx.label})'


class Intertwiner:
    """Weight-graded matrix source -> target commuting with the action."""

    __slots__ = ('source', 'target', 'matrix')

    def __init__(self, source, target, matrix):
        self.source, self.target, self.matrix = source, target, matrix

    def __matmul__(self, other):
        return Intertwiner(other.source, self.target, self.matrix @ other.matrix)

    def __add__(self, other):
        return Intertwiner(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other):
        return Intertwiner(self.source, self.target, self.matrix - other.matrix)

    def scale(self, c):
        return Intertwiner(self.source, self.target, self.matrix.scale(c))

    def is_zero(self):
        return self.matrix.is_zero()

    def __eq__(self, other):
        return isinstance(other, Intertwiner) and self.matrix == other.matrix

    __hash__ = None

    def check(self, all_powers=True):
        return is_intertwiner(self.matrix, self.source, self.target, all_powers)

    def __repr__(self):
        return f'Intertwiner({self.source.label} -> {self.target.label}, {self.matrix!r})'


def _weyl_generic(i):
    ctx = ScalarContext.generic()
    E, F = [], []
    for j in range(1, i + 1):
        E.append(Matrix.from_entries(i + 1, i + 1, ctx, (
            (k - j, k, ctx.specialize(qbinom_poly(i - k + j, j))) for k in range(j, i + 1))))
        F.append(Matrix.from_entries(i + 1, i + 1, ctx, (
            (k + j, k, ctx.specialize(qbinom_poly(k + j, j))) for k in range(0, i + 1 - j))))
    # <m_k, m_k> = (-1)^k v^(k^2 + k - ki) [i choose k]
    form = Matrix.diagonal([ctx.specialize(qbinom_poly(i, k)) * ((-1) ** k) * ctx.v_power(k * k + k - k * i)
                            for k in range(i + 1)], ctx)
    return WeightModule([i - 2 * k for k in range(i + 1)], E, F, ctx, form=form, label=f'Delta({i})')


@lru_cache(maxsize=None)
def weyl_module(i, ctx):
    """Delta(i) with basis m_0..m_i, m_k of weight i - 2k."""
    if i < 0:
        raise ValueError(f'Weyl module needs i >= 0, got {i}')
    return _weyl_generic(i).specialize(ctx)


def trivial_module(ctx):
    return weyl_module(0, ctx)


def dual(M):
    """D(M): u acts by the transpose of sigma(u), sigma(E) = -KF, sigma(F) = -EK^-1."""
    ctx = M.ctx
    E, F = [], []
    for j in range(1, M.maxdp + 1):
        sign = ctx.from_int((-1) ** j)
        E.append((M.K(j) @ M.Fdiv(j)).scale(sign * ctx.v_power(j * (j - 1))).transpose())
        F.append((M.Ediv(j) @ M.K(-j)).scale(sign * ctx.v_power(-j * (j - 1))).transpose())
    lift = dual(M.lift) if M.lift is not None else None
    label = M.label[6:-1] if M.label.startswith('Delta(') else M.label
    name = f'nabla({label})' if M.label.startswith('Delta(') else f'D({M.label})'
    return WeightModule(M.weights, E, F, ctx, lift=lift, label=name)


@lru_cache(maxsize=None)
def dual_weyl_module(i, ctx):
    return dual(weyl_module(i, ctx))


def _tensor_generic(M, N):
    """Divided powers as E^j/[j]! on Q(v); every division must stay in Z[v, v^-1]."""
    ctx = M.ctx
    IM, IN = Matrix.identity(M.dim, ctx), Matrix.identity(N.dim, ctx)
    maxdp = M.maxdp + N.maxdp
    E1 = M.Ediv(1).kron(IN) + M.K().kron(N.Ediv(1))
    F1 = M.Fdiv(1).kron(N.K(-1)) + IM.kron(N.Fdiv(1))
    E, F = [E1], [F1]
    for j in range(2, maxdp + 1):
        p = qint_poly(j)
        E.append((E[-1] @ E1).map_entries(lambda x: x.divide_exact(p)))
        F.append((F[-1] @ F1).map_entries(lambda x: x.divide_exact(p)))
    return E[:maxdp], F[:maxdp]


def _tensor_integral(M, N):
    """Divided powers from Delta(E^(r)) = sum v^(ab) E^(a)K^b (x) E^(b) and
    Delta(F^(r)) = sum v^(-ab) F^(a) (x) K^(-a)F^(b)."""
    ctx = M.ctx
    maxdp = M.maxdp + N.maxdp
    E, F = [], []
    for r in range(1, maxdp + 1):
        e = Matrix.zeros(M.dim * N.dim, M.dim * N.dim, ctx)
        f = Matrix.zeros(M.dim * N.dim, M.dim * N.dim, ctx)
        for a in range(max(0, r - N.maxdp), min(r, M.maxdp) + 1):
            b = r - a
            e = e + (M.Ediv(a) @ M.K(b)).kron(N.Ediv(b)).scale(ctx.v_power(a * b))
            f = f + M.Fdiv(a).kron(N.K(-a) @ N.Fdiv(b)).scale(ctx.v_power(-a * b))
        E.append(e)
        F.append(f)
    return E, F


def tensor(M, N):
    if M.ctx != N.ctx:
        raise ValueError(f'tensor of modules over {M.ctx.label} and {N.ctx.label}')
    ctx = M.ctx
    label = f'{M.label}*{N.label}'
    if not ctx.is_generic and M.lift is not None and N.lift is not None:
        out = tensor(M.lift, N.lift).specialize(ctx)
        out.label = label
        return out
    if ctx.is_generic:
        E, F = _tensor_generic(M, N)
    else:
        E, F = _tensor_integral(M, N)
    weights = [a + b for a in M.weights for b in N.weights]
    form = M.form.kron(N.form) if M.form is not None and N.form is not None else None
    return WeightModule(weights, E, F, ctx, form=form, label=label)


@lru_cache(maxsize=None)
def tensor_power(d, ctx):
    """V^(x)d, left-bracketed; V^(x)0 is the trivial module."""
    if d == 0:
        return trivial_module(ctx)
    if d == 1:
        return weyl_module(1, ctx)
    out = tensor(tensor_power(d - 1, ctx), weyl_module(1, ctx))
    out.label = f'V^{d}'
    return out


def check_relations(M):
    """Defining relations as exact matrix identities; returns failure strings."""
    ctx = M.ctx
    failures = []
    for j in range(1, M.maxdp + 1):
        for name, X, shift in (('E', M.Ediv(j), 2 * j), ('F', M.Fdiv(j), -2 * j)):
            for r, c, _ in X.items():
                if M.weights[r] != M.weights[c] + shift:
                    failures.append(f'{name}^({j}) maps weight {M.weights[c]} to {M.weights[r]}')
                    break
            sign = 1 if name == 'E' else -1
            if M.K() @ X != (X @ M.K()).scale(ctx.v_power(sign * 2 * j)):
                failures.append(f'K {name}^({j}) != v^{sign * 2 * j} {name}^({j}) K')
    if M.maxdp:
        comm = M.Ediv(1) @ M.Fdiv(1) - M.Fdiv(1) @ M.Ediv(1)
        if comm != Matrix.diagonal([qint(w, ctx) for w in M.weights], ctx):
            failures.append('[E, F] != (K - K^-1)/(v - v^-1)')
    for a in range(1, M.maxdp):
        for b in range(1, M.maxdp - a + 1):
            c = qbinom(a + b, a, ctx)
            if M.Ediv(a) @ M.Ediv(b) != M.Ediv(a + b).scale(c):
                failures.append(f'E^({a}) E^({b}) != [{a + b} choose {a}] E^({a + b})')
            if M.Fdiv(a) @ M.Fdiv(b) != M.Fdiv(a + b).scale(c):
                failures.append(f'F^({a}) F^({b}) != [{a + b} choose {a}] F^({a + b})')
    return failures


def is_weight_graded(X, M, N):
    return all(N.weights[r] == M.weights[c] for r, c, _ in X.items())


def is_intertwiner(X, M, N, all_powers=True):
    """X: M -> N commutes with K and every divided power (or just the generators)."""
    if not is_weight_graded(X, M, N):
        return False
    top = max(M.maxdp, N.maxdp)
    powers = range(1, top + 1) if all_powers else sorted(set(M.generator_powers()) | set(N.generator_powers()))
    for j in powers:
        if X @ M.Ediv(j) != N.Ediv(j) @ X or X @ M.Fdiv(j) != N.Fdiv(j) @ X:
            return False
    return True


def hom_equations(M, N):
    """Variables X[r, c] with equal weights; rows of X g_M - g_N X = 0 for the generators."""
    variables = {}
    for w, cols in M.spaces.items():
        for r in N.weight_space(w):
            for c in cols:
                variables[(r, c)] = len(variables)
    powers = sorted(set(M.generator_powers()) | set(N.generator_powers()))
    rows = []
    for j in powers:
        for A, B in ((M.Ediv(j), N.Ediv(j)), (M.Fdiv(j), N.Fdiv(j))):
            eqs = {}
            for k, c, a in A.items():
                for r in N.weight_space(M.weights[k]):
                    eq = eqs.setdefault((r, c), {})
                    v = variables[(r, k)]
                    eq[v] = eq[v] + a if v in eq else a
            for r, k, b in B.items():
                for c in M.weight_space(N.weights[k]):
                    eq = eqs.setdefault((r, c), {})
                    v = variables[(k, c)]
                    eq[v] = eq[v] - b if v in eq else -b
            for key in sorted(eqs):
                eq = {v: x for v, x in eqs[key].items() if x}
                if eq:
                    rows.append(eq)
    return variables, rows


def hom_space(M, N):
    """Ordered reduced-echelon basis of Hom(M, N)."""
    if M.ctx != N.ctx:
        raise ValueError('hom_space across contexts')
    variables, rows = hom_equations(M, N)
    bt.logging.trace(f'hom({M.label}, {N.label}): {len(variables)} unknowns, {len(rows)} equations')
    inv = {v: rc for rc, v in variables.items()}
    out = []
    for vec in nullspace(rows, len(variables), M.ctx):
        X = Matrix.from_entries(N.dim, M.dim, M.ctx, ((*inv[v], x) for v, x in vec.items()))
        out.append(Intertwiner(M, N, X))
    return out


def highest_weight_vectors(M, lam):
    """Basis of {w in M_lam : E^(j) w = 0}, identified with Hom(Delta(lam), M)."""
    idx = M.weight_space(lam)
    pos = {c: a for a, c in enumerate(idx)}
    rows = []
    for j in M.generator_powers():
        X = M.Ediv(j)
        for r in sorted(X.rows):
            eq = {pos[c]: x for c, x in X.rows[r].items() if c in pos}
            if eq:
                rows.append(eq)
    return [{idx[a]: x for a, x in vec.items()} for vec in nullspace(rows, len(idx), M.ctx)]


def weyl_map(M, lam, w):
    """The homomorphism Delta(lam) -> M sending m_0 to the primitive vector w."""
    cols = [w] + [M.Fdiv(k).apply(w) for k in range(1, lam + 1)]
    return Intertwiner(weyl_module(lam, M.ctx), M, Matrix.from_columns(M.dim, cols, M.ctx))


class Duality:
    """Symmetric contravariant form G on a module, i(phi) = G^-1 phi^T G."""

    def __init__(self, module, form, adjusted=False, source='carried'):
        self.module = module
        self.form = form
        self.form_inv = inverse(form)
        self.adjusted = adjusted
        self.source = source

    def __call__(self, phi):
        return self.form_inv @ phi.transpose() @ self.form

    def pairing(self, x, y):
        gy = self.form.apply(y)
        acc = self.module.ctx.zero()
        for k, a in x.items():
            if k in gy:
                acc = acc + a * gy[k]
        return acc


def adjoint(phi, source_duality, target_duality):
    """i(phi): B -> A for phi: A -> B, so that <phi x, y>_B = <x, i(phi) y>_A."""
    return source_duality.form_inv @ phi.transpose() @ target_duality.form


def is_contravariant(G, M):
    return is_intertwiner(G.transpose(), M, dual(M), all_powers=False)


def _usable(G, M):
    return G.is_symmetric() and matrix_rank(G) == M.dim


def duality_involution(T):
    """Symmetric nondegenerate contravariant form on T and the induced i."""
    if T.form is not None and _usable(T.form, T) and is_contravariant(T.form, T):
        return Duality(T, T.form, adjusted=False, source='carried')
    forms = [h.matrix.transpose() for h in hom_space(T, dual(T))]
    if forms and _usable(forms[0], T):
        return Duality(T, forms[0], adjusted=False, source='solved')
    sym = [G + G.transpose() for G in forms]
    sym = [S for S in sym if not S.is_zero()]
    candidates = list(sym)
    acc = None
    for S in sym:
        acc = S if acc is None else acc + S
        candidates.append(acc)
    for a in range(len(sym)):
        for b in range(a + 1, len(sym)):
            for c in range(2, 5):
                candidates.append(sym[a] + sym[b].scale(T.ctx.from_int(c)))
    for G in candidates:
        if matrix_rank(G) == T.dim:
            bt.logging.warning(f'invariant form on {T.label} needed symmetrization')
            return Duality(T, G, adjusted=True, source='solved')
    raise AsymmetricForm(f'no symmetric nondegenerate invariant form on {T.label} ({len(forms)} solutions)')

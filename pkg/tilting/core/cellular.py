"""Cellular bases of End(T) for a tilting module T.

For every lam with (T : Delta(lam)) > 0 the highest weight vectors w_i of
weight lam give g_i: Delta(lam) -> T. Each g_i is lifted to
gbar_i: T(lam) -> T, f_j = i(gbar_j) and c_ij = gbar_i f_j. The anti-
involution i is the adjoint for the invariant form on T, so i(c_ij) = c_ji
holds by construction; everything else is checked, not assumed.
"""

from dataclasses import dataclass, field, replace

import pandas as pd
import bittensor as bt

from .characters import decompose_tilting
from .errors import AmbiguousSummand, InconsistentCharacter, InvalidInput, LiftUnsolvable
from .linalg import Echelon, Matrix, matrix_rank, solve
from .modules import (Intertwiner, adjoint, duality_involution, highest_weight_vectors,
                      hom_space, weyl_map, weyl_module)
from .roots import dominates, is_singular
from .tilting import build_tilting, has_weyl_model, split_summands


@dataclass
class CellBlock:
    lam: int
    vectors: list
    g: list
    gbar: list
    fbar: list
    degrees: list = None

    @property
    def size(self):
        return len(self.vectors)


@dataclass
class CellDatum:
    module: object
    decomposition: object
    duality: object
    blocks: dict
    basis: dict
    splitting: object = None

    @property
    def ctx(self):
        return self.module.ctx

    @property
    def poset(self):
        return sorted(self.blocks)

    @property
    def index_sets(self):
        return {lam: list(range(1, b.size + 1)) for lam, b in sorted(self.blocks.items())}

    def keys(self):
        """(lam, i, j) in export order: lam ascending, then i, then j (0-based indices)."""
        return list(self.basis)

    def __len__(self):
        return len(self.basis)

    def involution(self, phi):
        return self.duality(phi)

    def less(self, mu, lam):
        return mu != lam and dominates(lam, mu)

    @property
    def graded(self):
        return all(b.degrees is not None for b in self.blocks.values())

    def degree(self, key):
        lam, i, j = key
        b = self.blocks[lam]
        if b.degrees is None:
            return None
        return b.degrees[i] + b.degrees[j]

    def degrees(self):
        return [self.degree(k) for k in self.keys()]

    def element(self, key):
        return self.basis[key]

    def vector(self, phi):
        return phi.vectorize()

    def product(self, a, b):
        return a @ b

    def identity(self):
        return Matrix.identity(self.module.dim, self.ctx)

    def dimension(self):
        return self.decomposition.end_dimension()

    def coordinates(self, phi):
        return coordinates(self, phi)


@dataclass
class Check:
    name: str
    passed: bool
    witness: str = ''


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness=''):
        self.checks.append(Check(name, bool(passed), witness))
        if not passed:
            bt.logging.warning(f'{name} failed: {witness}')

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_frame(self):
        return pd.DataFrame([[c.name, c.passed, c.witness] for c in self.checks],
                            columns=['check', 'passed', 'witness'])


def _lift(T, model, w):
    """gbar: T(lam) -> T with gbar(top) = w, free coefficients zero."""
    lam = model.lam
    if model.weyl:
        return weyl_map(T, lam, w)
    if T is model.module:
        return Intertwiner(T, T, Matrix.identity(T.dim, T.ctx).scale(w[model.top]))
    homs = hom_space(model.module, T)
    idx = T.weight_space(lam)
    values = [h.matrix.column(model.top) for h in homs]
    rows = [{k: v[r] for k, v in enumerate(values) if r in v} for r in idx]
    rhs = [w.get(r, T.ctx.zero()) for r in idx]
    coeffs = solve(rows, rhs, len(homs), T.ctx)
    if coeffs is None:
        raise LiftUnsolvable(f'no T({lam}) -> {T.label} lifting a highest weight vector')
    out = Matrix.zeros(T.dim, model.dim, T.ctx)
    for k, a in sorted(coeffs.items()):
        out = out + homs[k].matrix.scale(a)
    return Intertwiner(model.module, T, out)


def _graded_vectors(T, lam, vectors, splitting):
    """Rebase the highest weight vectors along the summands: T(lam) part first
    (degree 0), then the parts inside higher T(mu) (degree 1)."""
    ell = T.ctx.order
    if ell is None or is_singular(lam, ell):
        return vectors, [0] * len(vectors)
    out, degrees = [], []
    ech = Echelon(T.ctx)
    for mu in [lam] + sorted(mu for mu in splitting.multiplicities() if mu > lam):
        P = splitting.projector(mu)
        part = Echelon(T.ctx)
        for w in vectors:
            part.add(P.apply(w))
        for v in part.basis():
            if ech.add(v):
                out.append(v)
                degrees.append(0 if mu == lam else 1)
    if len(out) != len(vectors):
        raise AmbiguousSummand(f'weight {lam} vectors of {T.label} do not split along summands')
    return out, degrees


def cellular_basis(T, decomposition=None, duality=None, graded=False, cache=None, rebase=None):
    """Cell datum {c_ij^lam} of End(T).

    graded rebases the highest weight vectors against the summand
    idempotents of T and attaches degrees; rebase, if given, maps the list
    of highest weight vectors of each lam to another basis of the same space.
    """
    ctx = T.ctx
    if decomposition is None:
        decomposition = decompose_tilting(T.character(), ctx.order)
    duality = duality or duality_involution(T)
    splitting = split_summands(T, cache=cache) if graded else None
    blocks, basis = {}, {}
    for lam, mult in decomposition.weyl_multiplicities().items():
        vectors = highest_weight_vectors(T, lam)
        if len(vectors) != mult:
            raise InconsistentCharacter(f'{len(vectors)} highest weight vectors of weight {lam}, expected {mult}')
        if rebase is not None:
            vectors = rebase(vectors)
        degrees = None
        if graded:
            vectors, degrees = _graded_vectors(T, lam, vectors, splitting)
        model = build_tilting(lam, ctx, cache)
        g = [weyl_map(T, lam, w) for w in vectors]
        gbar = [_lift(T, model, w) for w in vectors]
        fbar = [Intertwiner(T, model.module, adjoint(h.matrix, model.duality, duality)) for h in gbar]
        blocks[lam] = CellBlock(lam, vectors, g, gbar, fbar, degrees)
        for i, a in enumerate(gbar):
            for j, b in enumerate(fbar):
                basis[(lam, i, j)] = a.matrix @ b.matrix
        bt.logging.debug(f'cell lam={lam}: {mult} vectors, {mult * mult} elements')
    bt.logging.info(f'cellular basis of End({T.label}) at {ctx.label}: {len(basis)} elements')
    return CellDatum(T, decomposition, duality, blocks, basis, splitting)


def _tracked_basis(cd):
    ech = Echelon(cd.ctx, track=True)
    for key in cd.keys():
        ech.add(cd.vector(cd.basis[key]))
    return ech


def coordinates(cd, phi, ech=None):
    """{key: coefficient} of phi in the cellular basis, None outside its span."""
    ech = ech or _tracked_basis(cd)
    coords = ech.coordinates(cd.vector(phi))
    if coords is None:
        return None
    keys = cd.keys()
    return {keys[k]: x for k, x in coords.items()}


def verify_cell_axioms(cd, generators=None):
    """Basis rank, i(c_ij) = c_ji and the left multiplication rule with j-independent r."""
    report = Report()
    keys = cd.keys()
    expected = cd.dimension()
    ech = _tracked_basis(cd)
    report.add('basis rank', ech.rank == len(keys) == expected,
               f'rank {ech.rank}, {len(keys)} elements, dim End = {expected}')
    bad = [k for k in keys if cd.involution(cd.basis[k]) != cd.basis[(k[0], k[2], k[1])]]
    report.add('involution', not bad, f'i(c) != c^T at {bad[:3]}' if bad else '')
    if isinstance(cd, CellDatum):
        bad = [k for k in keys if any(abs(cd.module.weights[c]) > k[0] for _, c, _ in cd.basis[k].items())]
        report.add('weight support', not bad, f'support above lam at {bad[:3]}' if bad else '')
    if generators is None:
        generators = [cd.identity()] + [cd.basis[k] for k in keys]
    if ech.rank < len(keys):
        report.add('cell rule', False, 'basis is not independent')
        return report
    witness = ''
    for n, phi in enumerate(generators):
        for (lam, i, j) in keys:
            coords = ech.coordinates(cd.vector(cd.product(phi, cd.basis[(lam, i, j)])))
            if coords is None:
                witness = f'generator {n} times c^{lam}_{i + 1}{j + 1} leaves End(T)'
                break
            r = {}
            for k, x in coords.items():
                mu, a, b = keys[k]
                if mu == lam and b == j:
                    r[a] = x
                elif mu == lam or not cd.less(mu, lam):
                    witness = f'generator {n} times c^{lam}_{i + 1}{j + 1} hits c^{mu}_{a + 1}{b + 1}'
                    break
            if witness:
                break
            if j == 0:
                ref = r
            elif r != ref:
                witness = f'generator {n}: r(c^{lam}_{i + 1}{j + 1}) depends on j'
                break
        if witness:
            break
    report.add('cell rule', not witness, witness)
    return report


@dataclass
class CellModule:
    lam: int
    vectors: list
    gram: Matrix
    ctx: object

    def action(self, phi):
        """Matrix A with phi g_i = sum_k A[k, i] g_k."""
        ech = Echelon(self.ctx, track=True)
        for w in self.vectors:
            ech.add(w)
        cols = []
        for w in self.vectors:
            coords = ech.coordinates(phi.apply(w))
            if coords is None:
                raise ValueError(f'{phi!r} does not preserve the weight {self.lam} highest weight vectors')
            cols.append(coords)
        return Matrix.from_columns(len(self.vectors), cols, self.ctx)

    @property
    def dim(self):
        return len(self.vectors)

    def rank(self):
        return matrix_rank(self.gram)

    def radical_dimension(self):
        return self.dim - self.rank()


def cell_module(cd, lam):
    b = cd.blocks[lam]
    n = b.size
    entries = []
    for i in range(n):
        for j in range(n):
            x = cd.duality.pairing(b.vectors[j], b.vectors[i])
            if x:
                entries.append((i, j, x))
    return CellModule(lam, b.vectors, Matrix.from_entries(n, n, cd.ctx, entries), cd.ctx)


def pairing_check(cd, lam):
    """i(g_j) g_i == theta(g_i, g_j) c^lam for all i, j."""
    b = cd.blocks[lam]
    c = weyl_module(lam, cd.ctx).form
    gram = cell_module(cd, lam).gram
    for i, gi in enumerate(b.g):
        for j, gj in enumerate(b.g):
            if gj.matrix.transpose() @ cd.duality.form @ gi.matrix != c.scale(gram[i, j]):
                return False
    return True


def simple_dimensions(cd):
    """{lam: (dim C(lam), gram rank, m_lam)}."""
    out = {}
    for lam in cd.poset:
        cm = cell_module(cd, lam)
        out[lam] = (cm.dim, cm.rank(), cd.decomposition.get(lam))
    return out


def summand_test(cd, lam):
    """T(lam) is a summand of T iff the cellular pairing is nonzero."""
    if lam not in cd.blocks:
        return False
    return not cell_module(cd, lam).gram.is_zero()


def semisimplicity_test(cd):
    """End(T) is semisimple iff every summand T(lam) of T is simple."""
    return all(has_weyl_model(lam, cd.ctx) for lam, m in cd.decomposition.items() if m)


def gram_semisimplicity(cd):
    return all(cm.rank() == cm.dim for cm in (cell_module(cd, lam) for lam in cd.poset))


def assign_degrees(cd, l=None):
    """{(lam, i): degree} for a datum built with graded=True. The root of unity
    order is the datum's context order; an explicit l must agree with it."""
    if not cd.graded:
        raise ValueError('cell datum was built without summand data; pass graded=True')
    if l is not None and l != cd.ctx.order:
        raise InvalidInput(f'l={l} does not match the order of {cd.ctx.label}')
    return {(lam, i): d for lam, b in sorted(cd.blocks.items()) for i, d in enumerate(b.degrees)}


def multiplication_table(cd):
    """DataFrame of c_a c_b expanded in the cellular basis."""
    ech = _tracked_basis(cd)
    keys = cd.keys()
    rows = []
    for a in keys:
        for b in keys:
            coords = coordinates(cd, cd.product(cd.basis[a], cd.basis[b]), ech)
            rows.append([label(a), label(b), ' + '.join(f'({x.to_text()})*{label(k)}' for k, x in sorted(coords.items()))
                         if coords else '0'])
    return pd.DataFrame(rows, columns=['left', 'right', 'product'])


def label(key):
    lam, i, j = key
    return f'c^{lam}_{i + 1}{j + 1}'


def grading_diagnostic(cd):
    """Products c_a c_b with a component outside degree deg a + deg b."""
    ech = _tracked_basis(cd)
    out = []
    for a in cd.keys():
        for b in cd.keys():
            coords = coordinates(cd, cd.product(cd.basis[a], cd.basis[b]), ech) or {}
            deg = cd.degree(a) + cd.degree(b)
            off = [k for k in coords if cd.degree(k) != deg]
            if off:
                out.append((a, b, off))
    if out:
        bt.logging.info(f'{len(out)} inhomogeneous products in End({cd.module.label})')
    return out


def in_lower_span(cd, other):
    """Every c~^lam_ij of other lies in span{c^mu : mu <= lam} of cd."""
    ech = _tracked_basis(cd)
    keys = cd.keys()
    for (lam, i, j), phi in other.basis.items():
        coords = ech.coordinates(cd.vector(phi))
        if coords is None or any(keys[k][0] != lam and not cd.less(keys[k][0], lam) for k in coords):
            return False
    return True


def swapped(cd, a, b):
    """Copy of cd with the basis elements at keys a and b exchanged."""
    basis = dict(cd.basis)
    basis[a], basis[b] = cd.basis[b], cd.basis[a]
    return replace(cd, basis=basis)


def gram_contravariance(cd, lam, phi):
    """theta(phi g, h) == theta(g, i(phi) h) on the cell module of lam."""
    cm = cell_module(cd, lam)
    A, B = cm.action(phi), cm.action(cd.involution(phi))
    return A.transpose() @ cm.gram == cm.gram @ B

"""Explicit models of the indecomposable tilting modules T(lam).

T(lam) is the Weyl module whenever that is already tilting (semisimple
contexts, the closed fundamental alcove, singular weights). Otherwise it
is cut out of T(lam-1) (x) V by peeling every lower summand off with
pairs phi: T(mu) -> M, psi: M -> T(mu), psi phi = id.
"""

from dataclasses import dataclass, field

import bittensor as bt

from .characters import decompose_tilting, tilting_character
from .errors import PeelingStalled
from .linalg import Echelon, Matrix, inverse
from .modules import (Intertwiner, WeightModule, dual_weyl_module, duality_involution,
                      hom_space, tensor, weyl_map, weyl_module)
from .roots import in_closure, is_singular


@dataclass
class TiltingModel:
    """T(lam) with iota: Delta(lam) -> T(lam), pi: T(lam) -> nabla(lam), pi iota = c^lam."""

    lam: int
    module: WeightModule
    top: int
    iota: Intertwiner = None
    pi: Intertwiner = None
    duality: object = None
    weyl: bool = True
    peeled: dict = field(default_factory=dict)

    @property
    def ctx(self):
        return self.module.ctx

    @property
    def dim(self):
        return self.module.dim

    def top_vector(self):
        return {self.top: self.ctx.one()}


@dataclass(frozen=True)
class Summand:
    lam: int
    phi: Intertwiner
    psi: Intertwiner

    @property
    def idempotent(self):
        return (self.phi @ self.psi).matrix


@dataclass
class Splitting:
    module: WeightModule
    summands: list
    remainder: Matrix

    def projector(self, lam):
        """Sum of the idempotents of every T(lam) copy."""
        out = Matrix.zeros(self.module.dim, self.module.dim, self.module.ctx)
        for s in self.summands:
            if s.lam == lam:
                out = out + s.idempotent
        return out

    def multiplicities(self):
        out = {}
        for s in self.summands:
            out[s.lam] = out.get(s.lam, 0) + 1
        return out


def _find_split(P, phis, psis, model):
    top = model.top
    for a in phis:
        pa = P @ a.matrix
        if pa.is_zero():
            continue
        for b in psis:
            x = b.matrix @ pa
            if x[top, top]:
                return pa, inverse(x) @ b.matrix @ P
    return None


def split_summands(M, skip=(), cache=None):
    """Decompose M into tilting summands from the top weight down.

    Weights in skip are left inside the remainder idempotent; with an
    empty skip the remainder is zero.
    """
    ctx = M.ctx
    mult = decompose_tilting(M.character(), ctx.order)
    P = Matrix.identity(M.dim, ctx)
    summands = []
    for mu, m in mult.items():
        if mu in skip:
            continue
        model = build_tilting(mu, ctx, cache)
        phis, psis = hom_space(model.module, M), hom_space(M, model.module)
        for n in range(m):
            pair = _find_split(P, phis, psis, model)
            if pair is None:
                raise PeelingStalled(f'no split of T({mu}) copy {n + 1}/{m} from {M.label}')
            phi, psi = pair
            summands.append(Summand(mu, Intertwiner(model.module, M, phi), Intertwiner(M, model.module, psi)))
            P = P - phi @ psi
        bt.logging.trace(f'split {m} x T({mu}) off {M.label}')
    return Splitting(M, summands, P)


def image_module(M, P, label=''):
    """The submodule im(P) in its reduced column echelon basis, with the inclusion matrix."""
    ctx = M.ctx
    ech = Echelon(ctx)
    for j, col in sorted(P.columns().items()):
        ech.add(col)
    pivots, basis = ech.pivots, ech.basis()
    incl = Matrix.from_columns(M.dim, basis, ctx)
    restrict = Matrix.from_entries(len(pivots), M.dim, ctx, ((a, p, ctx.one()) for a, p in enumerate(pivots)))
    weights = [M.weights[p] for p in pivots]
    maxdp = max((abs(w) for w in weights), default=0)
    E = [restrict @ M.Ediv(j) @ incl for j in range(1, maxdp + 1)]
    F = [restrict @ M.Fdiv(j) @ incl for j in range(1, maxdp + 1)]
    return WeightModule(weights, E, F, ctx, label=label), incl


def has_weyl_model(lam, ctx):
    ell = ctx.order
    return ell is None or in_closure(lam, ell) or is_singular(lam, ell)


def _finish(model):
    """Attach the normalized form, iota and pi to a model."""
    T, ctx = model.module, model.ctx
    duality = duality_involution(T)
    G = duality.form
    scale = G[model.top, model.top].inverse()
    if scale != ctx.one():
        G = G.scale(scale)
    if T.form is None or T.form != G:
        T.form = G
        duality = duality_involution(T)
    model.duality = duality
    model.iota = weyl_map(T, model.lam, model.top_vector())
    delta = weyl_module(model.lam, ctx)
    model.pi = Intertwiner(T, dual_weyl_module(model.lam, ctx), model.iota.matrix.transpose() @ G)
    assert (model.pi @ model.iota).matrix == delta.form, f'pi iota != c^{model.lam}'
    return model


_MODELS = {}


def build_tilting(lam, ctx, cache=None):
    """T(lam) over ctx; write-once per (lam, ctx), optionally persisted in cache."""
    key = (lam, ctx)
    if key in _MODELS:
        return _MODELS[key]
    if lam < 0:
        raise ValueError(f'tilting module needs lam >= 0, got {lam}')
    persist = cache is not None and not has_weyl_model(lam, ctx)
    model = cache.get(lam, ctx) if persist else None
    if model is not None:
        model = _finish(model)
    else:
        model = _construct(lam, ctx, cache)
        if persist:
            cache.put(model)
    _MODELS[key] = model
    return model


def _construct(lam, ctx, cache):
    if has_weyl_model(lam, ctx):
        delta = weyl_module(lam, ctx)
        return _finish(TiltingModel(lam, delta, 0, weyl=True))
    prev = build_tilting(lam - 1, ctx, cache)
    M = tensor(prev.module, weyl_module(1, ctx))
    split = split_summands(M, skip=(lam,), cache=cache)
    T, _ = image_module(M, split.remainder, label=f'T({lam})')
    if T.character() != tilting_character(lam, ctx.order):
        raise PeelingStalled(f'peeling T({lam - 1})*V left character {T.character().to_dict()}')
    top = T.weight_space(lam)[0]
    bt.logging.debug(f'built T({lam}) at {ctx.label}: dim {T.dim}, peeled {split.multiplicities()}')
    return _finish(TiltingModel(lam, T, top, weyl=False, peeled=split.multiplicities()))


def tilting_models(lams, ctx, cache=None):
    return {lam: build_tilting(lam, ctx, cache) for lam in lams}

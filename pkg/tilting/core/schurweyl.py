"""The Schur-Weyl map TL_d(delta) -> End(V^d) and transport of cell data.

U_i goes to cup cap on the factors i, i+1. The cap and cup below close a
circle to +delta and satisfy U_i U_(i+1) U_i = U_i, but a single snake is
-1, so a diagram is sent through a loop-free word in the U_i rather than
through its own cups and caps.
"""

from collections import deque
from functools import lru_cache

import bittensor as bt

from .cellular import Report
from .const import CAP, CUP
from .diagrams import TLCellDatum, TLDiagram, TLElement, tl_basis
from .linalg import Echelon, Matrix
from .modules import Intertwiner, tensor, tensor_power, trivial_module, weyl_module


def cap_matrix(ctx):
    """cap: V (x) V -> K as a 1 x 4 matrix."""
    return Matrix.from_entries(1, 4, ctx, ((0, 2 * a + b, ctx.v_power(k) * c) for (a, b), (c, k) in CAP.items()))


def cup_matrix(ctx):
    """cup: K -> V (x) V as a 4 x 1 matrix."""
    return Matrix.from_entries(4, 1, ctx, ((2 * a + b, 0, ctx.v_power(k) * c) for (a, b), (c, k) in CUP.items()))


def cap_intertwiner(ctx):
    V = weyl_module(1, ctx)
    return Intertwiner(tensor(V, V), trivial_module(ctx), cap_matrix(ctx))


def cup_intertwiner(ctx):
    V = weyl_module(1, ctx)
    return Intertwiner(trivial_module(ctx), tensor(V, V), cup_matrix(ctx))


def generator_image(i, d, ctx):
    """U_i (1-based) acting on V^d."""
    u = cup_matrix(ctx) @ cap_matrix(ctx)
    left = Matrix.identity(2 ** (i - 1), ctx)
    right = Matrix.identity(2 ** (d - i - 1), ctx)
    return left.kron(u).kron(right)


@lru_cache(maxsize=None)
def _words(d):
    """{diagram: (parent, i)} with diagram = parent * U_i loop-free; BFS from the identity."""
    ident = TLDiagram.identity(d)
    gens = [TLDiagram.generator(i, d) for i in range(1, d)]
    tree = {ident: None}
    todo = deque([ident])
    while todo:
        D = todo.popleft()
        for i, U in enumerate(gens, 1):
            E, loops = D.compose(U)
            if not loops and E not in tree:
                tree[E] = (D, i)
                todo.append(E)
    return tree


@lru_cache(maxsize=None)
def diagram_images(d, ctx):
    """{diagram: matrix on V^d} for every TL_d diagram."""
    tree = _words(d)
    gens = {i: generator_image(i, d, ctx) for i in range(1, d)}
    out = {TLDiagram.identity(d): Matrix.identity(2 ** d, ctx)}
    for D in sorted(tree, key=lambda D: _depth(tree, D)):
        if D not in out:
            parent, i = tree[D]
            out[D] = out[parent] @ gens[i]
    if len(out) != len(tl_basis(d)):
        raise RuntimeError(f'{len(out)} of {len(tl_basis(d))} diagrams reached by loop-free words')
    return out


def _depth(tree, D):
    n = 0
    while tree[D] is not None:
        D = tree[D][0]
        n += 1
    return n


def schur_weyl(x, ctx=None):
    """Phi(x) as an endomorphism of V^d."""
    ctx = ctx or x.ctx
    d = x.bottom
    images = diagram_images(d, ctx)
    T = tensor_power(d, ctx)
    out = Matrix.zeros(T.dim, T.dim, ctx)
    for D, c in x.items():
        out = out + images[D].scale(c)
    return Intertwiner(T, T, out)


def _tracked_images(d, ctx):
    ech = Echelon(ctx, track=True)
    basis = tl_basis(d)
    images = diagram_images(d, ctx)
    for D in basis:
        ech.add(images[D].vectorize())
    return ech, basis


def schur_weyl_rank(d, ctx):
    return _tracked_images(d, ctx)[0].rank


def schur_weyl_inverse(phi, d, ctx, ech=None):
    """The TL element mapping to phi, None outside the image."""
    if ech is None:
        ech, basis = _tracked_images(d, ctx)
    else:
        basis = tl_basis(d)
    coords = ech.coordinates(phi.vectorize())
    if coords is None:
        return None
    return TLElement({basis[k]: c for k, c in coords.items()}, ctx, d, d)


def pullback_cell_datum(cd, d):
    """Transport a cell datum on End(V^d) to TL_d; returns (datum, report)."""
    ctx = cd.ctx
    ech, basis = _tracked_images(d, ctx)
    report = Report()
    report.add('schur-weyl rank', ech.rank == len(basis), f'rank {ech.rank} of {len(basis)}')
    pulled = {}
    for key in cd.keys():
        x = schur_weyl_inverse(cd.basis[key], d, ctx, ech)
        if x is None:
            report.add('pullback', False, f'{key} outside the image')
            return None, report
        pulled[key] = x
    bad = [k for k in pulled if pulled[k].flip() != pulled[(k[0], k[2], k[1])]]
    report.add('involution is flip', not bad, f'flip mismatch at {bad[:3]}' if bad else '')
    ident = TLElement.identity(d, ctx)
    hits = [k for k, x in pulled.items() if x == ident]
    report.add('identity not in basis', d < 2 or not hits, f'identity at {hits}' if hits else '')
    degree_map = None
    if cd.graded:
        degree_map = {(lam, i): deg for lam, b in cd.blocks.items() for i, deg in enumerate(b.degrees)}
    blocks = {lam: list(range(b.size)) for lam, b in cd.blocks.items()}
    bt.logging.debug(f'pulled {len(pulled)} cellular elements back to TL_{d} at {ctx.label}')
    return TLCellDatum(d, ctx, blocks, pulled, degree_map), report

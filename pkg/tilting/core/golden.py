"""Named reproduction checks for every worked example the engine covers.

Each check returns (expected, actual); run_golden tabulates them with
pandas and writes one events.log record per check when an events logger is
configured.
"""

import time

import pandas as pd
import bittensor as bt

from ..utils.logging import log_check
from .cellular import (cellular_basis, semisimplicity_test, gram_semisimplicity,
                       simple_dimensions, summand_test, verify_cell_axioms)
from .characters import (catalan, decompose_tilting, power_character, simple_dimension_formula, tilting_weyl_mult,
                         translated_pair)
from .diagrams import (TLDiagram, TLElement, Tableau, generalized_jw, graham_lehrer_basis, jones_wenzl,
                       tableau_to_half_diagram, tl_basis, tl_semisimplicity, verify_tl_cell_axioms)
from .errors import CoefficientPole
from .modules import hom_space, tensor_power, weyl_module, dual_weyl_module
from .roots import a2_fixture_checks, linkage_class
from .scalars import ScalarContext, qint
from .schurweyl import pullback_cell_datum, schur_weyl, schur_weyl_rank
from .tilting import build_tilting

GENERIC = ScalarContext.generic()
L3 = ScalarContext.cyclotomic(3)
L5 = ScalarContext.cyclotomic(5)
L7 = ScalarContext.cyclotomic(7)

CHECKS = []


def golden(name):
    def register(fn):
        CHECKS.append((name, fn))
        return fn
    return register


def _decomposition(d, ctx):
    return decompose_tilting(power_character(d), ctx.order).to_json()


def _cell(d, ctx, cache=None, graded=False):
    return cellular_basis(tensor_power(d, ctx), graded=graded, cache=cache)


@golden('decompose V^3 l=3')
def _(cache):
    return {'3': 1, '1': 1}, _decomposition(3, L3)


@golden('decompose V^3 generic')
def _(cache):
    return {'3': 1, '1': 2}, _decomposition(3, GENERIC)


@golden('decompose V^3 l=5')
def _(cache):
    return {'3': 1, '1': 2}, _decomposition(3, L5)


@golden('decompose V^4 l=3')
def _(cache):
    return {'4': 1, '2': 3, '0': 1}, _decomposition(4, L3)


@golden('decompose V^2 l=3')
def _(cache):
    return {'2': 1, '0': 1}, _decomposition(2, L3)


@golden('dim End(V^d) is Catalan, d <= 8')
def _(cache):
    contexts = (GENERIC, L3, L5, L7)
    expected = {(ctx.label, d): catalan(d) for ctx in contexts for d in range(1, 9)}
    actual = {(ctx.label, d): decompose_tilting(power_character(d), ctx.order).end_dimension()
              for ctx in contexts for d in range(1, 9)}
    return expected, actual


@golden('cellular basis rank is Catalan, d <= 4')
def _(cache):
    contexts = (GENERIC, L3, L5)
    expected = {(ctx.label, d): catalan(d) for ctx in contexts for d in range(1, 5)}
    actual = {}
    for ctx in contexts:
        for d in range(1, 5):
            cd = _cell(d, ctx, cache)
            actual[(ctx.label, d)] = len(cd) if verify_cell_axioms(cd).passed else -1
    return expected, actual


@golden('T(3) at l=3 has dimension 6')
def _(cache):
    return 6, build_tilting(3, L3, cache).dim


@golden('End(T(3)) at l=3 multiplication')
def _(cache):
    cd = cellular_basis(build_tilting(3, L3, cache).module, cache=cache)
    one, c1, c3 = L3.one(), (1, 0, 0), (3, 0, 0)
    expected = {(c1, c1): {}, (c1, c3): {c1: one}, (c3, c1): {c1: one}, (c3, c3): {c3: one}}
    actual = {(a, b): cd.coordinates(cd.product(cd.basis[a], cd.basis[b])) for a, b in expected}
    return expected, actual


@golden('Hom dimensions')
def _(cache):
    expected = {'Delta(3) -> V^3 at l=3': 1, 'Delta(1) -> V^3 generic': 2, 'Delta(0) -> Delta(2) generic': 0,
                'Delta(3) -> nabla(3) at l=3': 1}
    actual = {
        'Delta(3) -> V^3 at l=3': len(hom_space(weyl_module(3, L3), tensor_power(3, L3))),
        'Delta(1) -> V^3 generic': len(hom_space(weyl_module(1, GENERIC), tensor_power(3, GENERIC))),
        'Delta(0) -> Delta(2) generic': len(hom_space(weyl_module(0, GENERIC), weyl_module(2, GENERIC))),
        'Delta(3) -> nabla(3) at l=3': len(hom_space(weyl_module(3, L3), dual_weyl_module(3, L3))),
    }
    return expected, actual


@golden('simples V^3 generic')
def _(cache):
    return {3: (1, 1, 1), 1: (2, 2, 2)}, simple_dimensions(_cell(3, GENERIC, cache))


@golden('simples V^3 l=3')
def _(cache):
    return {3: (1, 1, 1), 1: (2, 1, 1)}, simple_dimensions(_cell(3, L3, cache))


@golden('alternating-sum simple dimensions at l=3, d <= 8')
def _(cache):
    expected, actual = {}, {}
    for d in range(1, 9):
        ms = decompose_tilting(power_character(d), 3)
        for lam in range(d % 2, d + 1, 2):
            expected[(d, lam)] = ms.get(lam)
            actual[(d, lam)] = simple_dimension_formula(lam, d, 3)
    return expected, actual


@golden('multiplicities survive translation off the walls, l = 3, 5')
def _(cache):
    expected, actual = {}, {}
    for l in (3, 5):
        for lam in range(4 * l):
            for mu in linkage_class(lam, l, lam):
                expected[(l, lam, mu)] = tilting_weyl_mult(lam, mu, l)
                actual[(l, lam, mu)] = tilting_weyl_mult(*translated_pair(lam, mu, l), l)
    return expected, actual


@golden('summand test')
def _(cache):
    expected = {'d=3 l=3 lam=3': True, 'd=3 l=3 lam=1': True, 'd=4 l=3 lam=1': False, 'd=2 l=3 lam=0': True,
                'T(3) l=3 lam=1': False}
    actual = {
        'd=3 l=3 lam=3': summand_test(_cell(3, L3, cache), 3),
        'd=3 l=3 lam=1': summand_test(_cell(3, L3, cache), 1),
        'd=4 l=3 lam=1': summand_test(_cell(4, L3, cache), 1),
        'd=2 l=3 lam=0': summand_test(_cell(2, L3, cache), 0),
        'T(3) l=3 lam=1': summand_test(cellular_basis(build_tilting(3, L3, cache).module, cache=cache), 1),
    }
    return expected, actual


@golden('semisimplicity agrees with d < l')
def _(cache):
    cases = [(2, L3), (3, L3), (4, L3), (3, L5), (4, L5), (3, GENERIC)]
    expected = {(ctx.label, d): tl_semisimplicity(d, ctx) for d, ctx in cases}
    actual = {}
    for d, ctx in cases:
        cd = _cell(d, ctx, cache)
        module_side, gram_side = semisimplicity_test(cd), gram_semisimplicity(cd)
        actual[(ctx.label, d)] = module_side if module_side == gram_side else None
    return expected, actual


@golden('graded degrees V^3 l=3')
def _(cache):
    return [0, 1, 1, 2, 0], _cell(3, L3, cache, graded=True).degrees()


@golden('JW_2 and JW_3')
def _(cache):
    one = GENERIC.one()
    U = {i: TLElement.generator(i, 3, GENERIC) for i in (1, 2)}
    jw2 = TLElement.identity(2, GENERIC) - TLElement.generator(1, 2, GENERIC).scale(one / qint(2, GENERIC))
    jw3 = (TLElement.identity(3, GENERIC)
           - (U[1] + U[2]).scale(qint(2, GENERIC) / qint(3, GENERIC))
           + (U[1] * U[2] + U[2] * U[1]).scale(one / qint(3, GENERIC)))
    return [True, True], [jones_wenzl(2, GENERIC) == jw2, jones_wenzl(3, GENERIC) == jw3]


@golden('JW_3 has a pole at l=3')
def _(cache):
    try:
        jones_wenzl(3, L3)
    except CoefficientPole:
        return 'CoefficientPole', 'CoefficientPole'
    return 'CoefficientPole', 'no error'


@golden('generalized JW')
def _(cache):
    one = GENERIC.one()
    U = {i: TLElement.generator(i, 3, GENERIC) for i in (1, 2)}
    two = qint(2, GENERIC)
    expected = U[2] - (U[1] * U[2] + U[2] * U[1]).scale(one / two) + U[1].scale(one / (two * two))
    return [True, True, True], [
        generalized_jw((1, -1), GENERIC) == TLElement.generator(1, 2, GENERIC),
        generalized_jw((1, -1, 1), GENERIC) == U[1],
        generalized_jw((1, 1, -1), GENERIC) == expected,
    ]


@golden('TL basis counts')
def _(cache):
    return {1: 1, 3: 5, 4: 14}, {d: len(tl_basis(d)) for d in (1, 3, 4)}


@golden('Graham-Lehrer cell datum, d <= 4')
def _(cache):
    return [True] * 4, [verify_tl_cell_axioms(graham_lehrer_basis(d, GENERIC)).passed for d in range(1, 5)]


@golden('tableaux to half diagrams')
def _(cache):
    expected = [TLDiagram(6, 2, [(2, 3), (1, 4), (0, 6), (5, 7)]), TLDiagram(6, 2, [(0, 1), (4, 5), (2, 6), (3, 7)])]
    actual = [tableau_to_half_diagram(Tableau(((1, 2, 3, 6), (4, 5)))),
              tableau_to_half_diagram(Tableau(((1, 3, 4, 5), (2, 6))))]
    return expected, actual


@golden('Schur-Weyl rank is Catalan, d <= 5')
def _(cache):
    contexts = (GENERIC, L3, L5)
    expected = {(ctx.label, d): catalan(d) for ctx in contexts for d in range(1, 6)}
    actual = {(ctx.label, d): schur_weyl_rank(d, ctx) for ctx in contexts for d in range(1, 6)}
    return expected, actual


@golden('Schur-Weyl image of JW_d is proportional to the top cell element')
def _(cache):
    expected, actual = {}, {}
    for d in range(2, 5):
        top = _cell(d, GENERIC, cache).basis[(d, 0, 0)]
        expected[d] = True
        actual[d] = _proportional(schur_weyl(jones_wenzl(d, GENERIC)).matrix, top)
    return expected, actual


@golden('pullback V^3 l=3')
def _(cache):
    pulled, report = pullback_cell_datum(_cell(3, L3, cache, graded=True), 3)
    return ([0, 1, 1, 2, 0], True), (pulled.degrees() if pulled else None, report.passed)


@golden('identity is not a pulled-back basis element, d = 2..4')
def _(cache):
    expected, actual = {}, {}
    for d in range(2, 5):
        for ctx in (GENERIC, L3):
            pulled, report = pullback_cell_datum(_cell(d, ctx, cache), d)
            expected[(ctx.label, d)] = True
            actual[(ctx.label, d)] = report.passed
    return expected, actual


@golden('A2 fixtures')
def _(cache):
    checks = a2_fixture_checks()
    return {name: e for name, e, _ in checks}, {name: a for name, _, a in checks}


def _proportional(A, B):
    """A == a B for a nonzero scalar a."""
    entries = list(B.items())
    if not entries:
        return False
    i, j, x = entries[0]
    a = A[i, j] / x
    return bool(a) and A == B.scale(a)


def run_golden(cache=None, events=None, names=None):
    """DataFrame with one row per check: name, expected, actual, ok."""
    rows = []
    for name, fn in CHECKS:
        if names is not None and name not in names:
            continue
        start = time.perf_counter()
        expected, actual = fn(cache)
        ok = expected == actual
        rows.append([name, str(expected), str(actual), ok])
        log_check(events, name, expected, actual, time.perf_counter() - start)
        if ok:
            bt.logging.debug(f'golden {name}: ok')
        else:
            bt.logging.error(f'golden {name}: expected {expected}, got {actual}')
    frame = pd.DataFrame(rows, columns=['name', 'expected', 'actual', 'ok'])
    if frame.ok.all():
        bt.logging.success(f'all {len(frame)} golden checks match')
    return frame

info = '''
tiltcell - cellular bases of End(T) for tilting modules of quantum sl2

Usage:  tiltcell command [action] [option...]
        tiltcell -h

Commands:
        decompose       T = V^d or T(a)*T(b)*... as a sum of tilting modules
        cellbasis       cellular basis of End(V^d) with its verification report
        simples         dimensions of the simple End(V^d)-modules
        reproduce       run every golden check, exit 0 iff all match
        linkage         dot-orbit, alcove and walls of --root.lam at --l
        a2              alcove, linkage and KL fixtures for sl3 at level 3
        tl compose      product of --tl.diagrams, top factor first
        tl jw           Jones-Wenzl JW_d, or the generalized JW of --tl.eps
        tl gl-basis     Graham-Lehrer cell datum of TL_d
        tl pullback     cellular basis of End(V^d) moved to TL_d

Options:
--l             odd order l >= 3 of the root of unity
--generic       work over Q(v) (the default)
--q             rational specialization of v
--power         d, for T = V^d
--tensor        comma list a,b,c, for T = T(a)*T(b)*T(c)
--format        json (default), csv or pretty
--output        write the document to this file; stdout then carries only log lines
--cache-dir     directory for the sqlite tilting model cache
--tl.diagrams   diagrams like '3; (1,2) (3,6) (4,5)' separated by '|'
--tl.eps        sign vector like +1,-1,+1 or +-+
--root.lam      weight for linkage queries
--root.bound    largest weight listed by linkage (default 20)
--events.dir    write golden check events to events.log in this directory
--logging.debug, --logging.trace    more log output
-h, --help      print this message and exit

Examples:
        tiltcell decompose --l 3 --power 3
        tiltcell cellbasis --l 3 --power 3 --format pretty
        tiltcell simples --generic --power 3 --format csv
        tiltcell cellbasis --l 3 --power 4 --output end_v4.json --logging.debug
        tiltcell tl jw --power 3
        tiltcell tl jw --tl.eps +,+,-
        tiltcell reproduce --cache-dir /tmp/tilting --events.dir /tmp/tilting

Exit codes: 0 success, 1 verification failure, 2 invalid input.
'''

import sys
from functools import reduce

import pandas as pd
import bittensor as bt

from ..utils.config import check_config, config
from .cache import TiltingCache
from .cellular import cellular_basis, grading_diagnostic, simple_dimensions, verify_cell_axioms
from .characters import decompose_tilting, power_character, simple_dimension_formula, tensor_character
from .const import A2_LEVEL
from .diagrams import (TLDiagram, TLElement, generalized_jw, graham_lehrer_basis, jones_wenzl,
                       verify_tl_cell_axioms)
from .errors import InvalidInput, TiltingError
from .export import (cell_datum_frame, cell_datum_payload, decomposition_frame, decomposition_payload,
                     element_frame, element_payload, emit, records, simples_frame)
from .golden import run_golden
from .modules import tensor, tensor_power
from .roots import a2_fixture_checks, alcove_index, is_singular, linkage_class, nearest_walls, walls_between
from .schurweyl import pullback_cell_datum
from .tilting import build_tilting


def _power(rc, minimum=1):
    if rc.power is None:
        raise InvalidInput(f'{rc.command} needs --power')
    if rc.power < minimum:
        raise InvalidInput(f'--power must be >= {minimum}, got {rc.power}')
    return rc.power


def _module(rc, cache):
    """V^d for --power, T(a)*T(b)*... for --tensor."""
    if rc.tensor:
        return reduce(tensor, [build_tilting(lam, rc.ctx, cache).module for lam in rc.tensor])
    return tensor_power(_power(rc), rc.ctx)


def cmd_decompose(rc, cache):
    if rc.tensor:
        ch = tensor_character(rc.tensor, rc.ctx.order)
    else:
        ch = power_character(_power(rc, minimum=0))
    ms = decompose_tilting(ch, rc.ctx.order)
    bt.logging.info(f'decomposition at {rc.ctx.label}: {ms.to_json()}')
    return decomposition_payload(ms), decomposition_frame(ms), True


def cmd_cellbasis(rc, cache):
    graded = rc.ctx.is_cyclotomic and not rc.tensor
    cd = cellular_basis(_module(rc, cache), graded=graded, cache=cache)
    report = verify_cell_axioms(cd)
    payload = cell_datum_payload(cd, report)
    if graded:
        payload['inhomogeneous_products'] = len(grading_diagnostic(cd))
    return payload, cell_datum_frame(cd), report.passed


def cmd_simples(rc, cache):
    cd = cellular_basis(_module(rc, cache), cache=cache)
    dims = simple_dimensions(cd)
    formula = None
    if not rc.tensor:
        formula = {lam: simple_dimension_formula(lam, rc.power, rc.ctx.order) for lam in dims}
    frame = simples_frame(dims, formula)
    return {'simples': records(frame)}, frame, bool(frame.agree.all())


def cmd_reproduce(rc, cache):
    frame = run_golden(cache, rc.events)
    passed = bool(frame.ok.all())
    if not passed:
        bt.logging.error('golden checks differ:\n' + frame[~frame.ok].to_string(index=False))
    return {'passed': passed, 'checks': records(frame)}, frame, passed


def cmd_linkage(rc, cache):
    ell = rc.ctx.order
    if ell is None:
        raise InvalidInput('linkage needs --l')
    if rc.lam is None or rc.lam < 0:
        raise InvalidInput('linkage needs --root.lam >= 0')
    lam = rc.lam
    orbit = linkage_class(lam, ell, max(rc.bound, lam))
    frame = pd.DataFrame([[mu, alcove_index(mu, ell), walls_between(lam, mu, ell)] for mu in orbit],
                         columns=['mu', 'alcove', 'walls_between'])
    payload = {
        'lam': lam,
        'singular': is_singular(lam, ell),
        'alcove': alcove_index(lam, ell),
        'nearest_walls': list(nearest_walls(lam, ell)),
        'linkage_class': orbit,
    }
    return payload, frame, True


def cmd_a2(rc, cache):
    rows = [[name, str(e), str(a), e == a] for name, e, a in a2_fixture_checks(A2_LEVEL)]
    frame = pd.DataFrame(rows, columns=['name', 'expected', 'actual', 'ok'])
    return {'level': A2_LEVEL, 'checks': records(frame)}, frame, bool(frame.ok.all())


def cmd_tl(rc, cache):
    ctx = rc.ctx
    if rc.action == 'compose':
        if not rc.diagrams:
            raise InvalidInput('tl compose needs --tl.diagrams')
        factors = [TLElement.from_diagram(TLDiagram.parse(text), ctx) for text in rc.diagrams]
        x = reduce(lambda y, z: y * z, factors)
        return element_payload(x), element_frame(x), True
    if rc.action == 'jw':
        x = generalized_jw(rc.eps, ctx) if rc.eps else jones_wenzl(_power(rc), ctx)
        return element_payload(x), element_frame(x), True
    if rc.action == 'gl-basis':
        cd = graham_lehrer_basis(_power(rc), ctx)
        report = verify_tl_cell_axioms(cd)
        return cell_datum_payload(cd, report), cell_datum_frame(cd), report.passed
    d = _power(rc)
    cd = cellular_basis(tensor_power(d, ctx), graded=ctx.is_cyclotomic, cache=cache)
    pulled, report = pullback_cell_datum(cd, d)
    if pulled is None:
        return {'verification': {'passed': False}}, report.to_frame(), False
    report.checks += verify_tl_cell_axioms(pulled).checks
    return cell_datum_payload(pulled, report), cell_datum_frame(pulled), report.passed


COMMANDS = {
    'decompose': cmd_decompose,
    'cellbasis': cmd_cellbasis,
    'simples': cmd_simples,
    'reproduce': cmd_reproduce,
    'linkage': cmd_linkage,
    'a2': cmd_a2,
    'tl': cmd_tl,
}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] in ['-h', '--help']:
        print(info)
        return 0

    try:
        cfg = config(argv)
        bt.logging.set_config(config=cfg.logging)
        rc = check_config(cfg)
    except InvalidInput as e:
        bt.logging.error(str(e))
        print("Try 'tiltcell -h' for more info", file=sys.stderr)
        return 2

    cache = TiltingCache(rc.cache_dir)
    try:
        payload, frame, ok = COMMANDS[rc.command](rc, cache)
    except InvalidInput as e:
        bt.logging.error(str(e))
        return 2
    except TiltingError as e:
        bt.logging.error(f'{type(e).__name__}: {e}')
        return 1
    finally:
        cache.close()

    text = emit(rc.ctx, payload, frame, rc.format)
    if rc.output:
        with open(rc.output, 'w') as f:
            f.write(text + '\n')
        bt.logging.info(f'{rc.command} document written to {rc.output}')
    else:
        print(text)
    if not ok:
        bt.logging.error(f'{rc.command}: verification failed')
        return 1
    bt.logging.info(f'{rc.command} done at {rc.ctx.label}')
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""``hurwitz-lab`` command line front end.

Exit codes: 0 when every check passed, 1 on a verification failure, 2 when a cap truncated the
work, 64 on usage errors.
"""
import argparse
import json
import logging
import sys
import time

from . import __version__
from .appendix import verify_appendix
from .elliptic import canonical_tuple, invariant_splitting
from .exceptions import (
    CapExceededError, HurwitzLabError, HurwitzLabValidationError, UnsupportedTypeError,
)
from .hurwitz import classify_orbits, hurwitz_orbit
from .lattice import gram_from_diagram, matrix_order, signature
from .poset import export, interval_elliptic_gen, interval_finite
from .rootsys import (
    build_elliptic, build_finite, coxeter_transformation, elliptic_basis_diagram,
    expected_root_count, finite_diagram, mark_obstruction, parse_tag,
)
from .schemas import DEFAULT_CAP, DEFAULT_SEED, EMIT_FORMATS, Report, RunConfig
from .verify import CHECKS, check_all, run_check
from .weyl import (
    ReflectionTuple, count_fac, coxeter_element, reflection_conjugacy_classes,
    reflection_length_finite, weyl_group,
)

__all__ = ['EXIT_OK', 'EXIT_FAILED', 'EXIT_TRUNCATED', 'EXIT_USAGE', 'ACTIONS', 'build_parser',
           'config_from_args', 'run', 'main']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_TRUNCATED = 2
EXIT_USAGE = 64

ACTIONS = {
    'rootsys': ('build',),
    'weyl': ('length', 'fac'),
    'hurwitz': ('orbit', 'classify'),
    'elliptic': ('splitting', 'verify-appendix'),
    'poset': ('interval', 'gen'),
    'verify': tuple(CHECKS) + ('all',),
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise HurwitzLabValidationError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--type', dest='type', help='root system type, e.g. A3, E8 or D4.1.1')
    common.add_argument('--window', type=int, default=2, help='radical window K')
    common.add_argument('--cap', type=int, default=DEFAULT_CAP, help='enumeration cap')
    common.add_argument('--threads', type=int, default=1)
    common.add_argument('--seed', type=int, default=DEFAULT_SEED)
    common.add_argument('--emit', choices=EMIT_FORMATS, default='text')
    common.add_argument('--out', help='write the output here instead of stdout')
    common.add_argument('--m', type=int, help='number of reflections in a factorization')
    common.add_argument('--target', type=int,
                        help='index of the target element in the tabulated Weyl group')
    common.add_argument('--seed-file', dest='seed_file',
                        help='JSON list of roots used as the starting tuple')
    common.add_argument('--timing', action='store_true', help='record elapsed time')
    common.add_argument('-v', '--verbose', action='store_true')

    parser = _ArgumentParser(prog='hurwitz-lab', description=__doc__.splitlines()[0])
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)
    commands.required = True
    for command, actions in ACTIONS.items():
        sub = commands.add_parser(command, parents=[common])
        sub.add_argument('action', choices=actions)
    return parser


def config_from_args(args):
    data = {
        name: getattr(args, name)
        for name in ('command', 'action', 'type', 'window', 'cap', 'threads', 'seed', 'emit',
                     'out', 'm', 'target', 'seed_file')
    }
    return RunConfig(data).validated()


def _require_type(config):
    if not config.type_tag:
        raise HurwitzLabValidationError(
            '--type is required for {0} {1}'.format(config.command, config.action))
    return config.type_tag


def _is_elliptic_tag(text):
    return text.endswith('.1.1') or text.endswith('(1,1)')


def _target(config, sys):
    if config.target is None:
        return coxeter_element(sys)
    group = weyl_group(sys)
    if config.target >= group.order:
        raise HurwitzLabValidationError(
            'Target {0} outside a group of order {1}'.format(config.target, group.order))
    return group.elements[config.target]


def _rootsys(config):
    tag = _require_type(config)
    if _is_elliptic_tag(tag):
        sys = build_elliptic(tag)
        diagram = elliptic_basis_diagram(sys)
        sig = signature(sys.gram)
        diagram_sig = signature(gram_from_diagram(diagram))
        results = {
            'type': '{0}(1,1)'.format(sys.type_tag),
            'rank': sys.rank,
            'ell': sys.ell,
            't_index': sys.t_index,
            'signature': list(sig),
            'diagram_signature': list(diagram_sig),
            'coxeter_order': matrix_order(coxeter_transformation(sys)),
            'mark_obstruction': mark_obstruction(sys),
            'basis': [list(r) for r in sys.basis_gamma],
            'diagram': {'vertices': list(diagram.vertices),
                        'edges': [list(e) for e in diagram.edges]},
        }
        return results, sig == diagram_sig == (sys.rank, 2, 0), False, None

    sys = build_finite(tag)
    expected = expected_root_count(sys.type_tag)
    results = {
        'type': sys.type_tag,
        'rank': sys.rank,
        'roots': len(sys.all_roots),
        'expected': expected,
        'positive_roots': len(sys.positive_roots()),
        'highest_root': list(sys.highest_root),
    }
    if sys.simply_laced:
        results['diagram'] = [list(e) for e in finite_diagram(sys.type_tag).edges]
    return results, len(sys.all_roots) == expected, False, None


def _weyl(config):
    sys = build_finite(_require_type(config))
    w = _target(config, sys)
    length = reflection_length_finite(w, sys)
    results = {'type': sys.type_tag, 'element': [list(r) for r in w], 'length': length}
    if config.action == 'fac':
        m = length if config.m is None else config.m
        results['m'] = m
        results['factorizations'] = count_fac(w, sys, m, cap=config.cap)
        results['generating'] = count_fac(w, sys, m, require_generating=True, cap=config.cap)
    return results, True, False, None


def _seed_tuple(config, sys):
    with open(config.seed_file, 'r') as f:
        roots = json.load(f)
    for root in roots:
        if len(root) != sys.gram.dim or not sys.is_root(root):
            raise HurwitzLabValidationError('{0} is not a root of {1}'.format(root, sys.type_tag))
    return ReflectionTuple(roots, sys)


def _hurwitz(config):
    tag = _require_type(config)
    if config.action == 'classify':
        sys = build_finite(tag)
        w = _target(config, sys)
        m = sys.rank + 2 if config.m is None else config.m
        reports = classify_orbits(w, sys, m, cap=config.cap, threads=config.threads)
        results = {
            'type': sys.type_tag,
            'm': m,
            'factorizations': sum(r.orbit_size for r in reports),
            'orbits': [r.to_dict() for r in reports],
            'multisets': len({r.invariant_multiset for r in reports}),
        }
        return results, True, False, None

    if _is_elliptic_tag(tag):
        sys = build_elliptic(tag)
        t = _seed_tuple(config, sys) if config.seed_file else canonical_tuple(sys)
        classes = None
    else:
        sys = build_finite(tag)
        t = (_seed_tuple(config, sys) if config.seed_file
             else ReflectionTuple(sys.simple_roots, sys))
        classes = reflection_conjugacy_classes(sys)
    report = hurwitz_orbit(t, cap=config.cap, classes=classes, threads=config.threads)
    results = dict(report.to_dict(), seed=t.to_json())
    return results, True, report.truncated, None


def _elliptic(config):
    sys = build_elliptic(_require_type(config))
    if config.action == 'splitting':
        results = invariant_splitting(sys).to_dict()
        return results, results['block_diagonal'] and results['matches_table'], False, None
    results = verify_appendix(sys.type_tag, threads=config.threads)
    return results, results['passed'], False, None


def _poset(config):
    tag = _require_type(config)
    if config.action == 'interval':
        sys = build_finite(tag)
        p = interval_finite(_target(config, sys), sys)
    else:
        sys = build_elliptic(tag)
        p = interval_elliptic_gen(sys, K=config.window, cap=config.cap, threads=config.threads)
    results = p.to_data()
    results['level_counts'] = p.level_counts()
    return results, p.is_graded(), p.truncated, p


def _verify(config):
    options = {
        'type_tag': config.type_tag and parse_tag(config.type_tag),
        'window': config.window,
        'cap': config.cap,
        'threads': config.threads,
        'seed': config.seed,
    }
    if config.action == 'all':
        results = check_all(**options)
    else:
        results = run_check(config.action, **options)
    return results, results['passed'], False, None


_HANDLERS = {
    'rootsys': _rootsys,
    'weyl': _weyl,
    'hurwitz': _hurwitz,
    'elliptic': _elliptic,
    'poset': _poset,
    'verify': _verify,
}


def run(config, timing=False):
    """Dispatches a validated :class:`~hurwitzlab.schemas.RunConfig`.

    :returns: ``(report, artifact)`` where ``artifact`` is the poset for DOT output or ``None``.
    """
    started = time.perf_counter()
    results, passed, truncated, artifact = _HANDLERS[config.command](config)
    report = Report({
        'command': config.to_dict(),
        'results': results,
        'passed': bool(passed),
        'truncated': bool(truncated),
        'elapsed': round(time.perf_counter() - started, 3) if timing else None,
    }).validated()
    return report, artifact


def _render_text(data):
    command = data['command']
    status = 'passed' if data['passed'] else 'FAILED'
    if data['truncated']:
        status += ' (truncated)'
    lines = ['{0} {1}: {2}'.format(command['command'], command['action'], status)]
    for key in sorted(data['results']):
        value = data['results'][key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append('  {0}: {1}'.format(key, value))
    return '\n'.join(lines) + '\n'


def _emit(config, report, artifact):
    data = report.to_dict()
    if config.emit == 'dot':
        if artifact is None:
            raise HurwitzLabValidationError('Nothing to draw for {0}'.format(config.command))
        output = export(artifact, 'dot').decode('utf-8')
    elif config.emit == 'json':
        output = json.dumps(data, sort_keys=True, indent=2) + '\n'
    else:
        output = _render_text(data)
    if config.out:
        with open(config.out, 'w') as f:
            f.write(output)
    else:
        sys.stdout.write(output)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except HurwitzLabValidationError as e:
        sys.stderr.write('usage error: {0}\n'.format(e))
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        config = config_from_args(args)
        report, artifact = run(config, timing=args.timing)
        _emit(config, report, artifact)
    except (HurwitzLabValidationError, UnsupportedTypeError) as e:
        sys.stderr.write('usage error: {0}\n'.format(e.messages if hasattr(e, 'messages') else e))
        return EXIT_USAGE
    except CapExceededError as e:
        sys.stderr.write('cap exceeded after {0} results: {1}\n'.format(e.count, e))
        return EXIT_TRUNCATED
    except HurwitzLabError as e:
        sys.stderr.write('error: {0}\n'.format(e))
        return EXIT_FAILED

    if report.truncated:
        return EXIT_TRUNCATED
    return EXIT_OK if report.passed else EXIT_FAILED

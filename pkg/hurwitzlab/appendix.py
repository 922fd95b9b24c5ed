"""Appendix A braid tables: loading the shipped data and checking every printed matrix.

Each row is evaluated on the canonical word of its type. A row passes membership when the
printed matrix (or its recorded correction) lies in Γ(ℓ); reproduction additionally asks the
computed transporter to equal it. Reproduction failures are reported, never raised.
The Γ(2) generation claim for D4 is certified on the computed transporters only.
"""
import json
import logging
import os
import pkgutil
from concurrent.futures import ThreadPoolExecutor

from .congruence import gamma2_generation_certificate, gamma_membership, mat2, mat2_det
from .elliptic import braid_matrix, canonical_tuple
from .exceptions import (
    BraidIndexError, DataFileError, HurwitzLabError, NonIntegralTransporterError,
    NotStabilizingError,
)
from .hurwitz import BraidWord
from .rootsys import ELLIPTIC_TYPES, build_elliptic, parse_tag
from .schemas import AppendixRowSchema

__all__ = ['DATA_ENV', 'DATA_SCHEMA', 'load_appendix', 'row_braid_words', 'verify_row',
           'verify_appendix']

logger = logging.getLogger(__name__)

DATA_ENV = 'HURWITZ_LAB_DATA'

DATA_SCHEMA = 'hurwitz-lab/appendix/1'


def _read(path):
    if path:
        try:
            with open(path, 'rb') as f:
                return f.read()
        except OSError as e:
            raise DataFileError('Cannot read {0}: {1}'.format(path, e))
    return pkgutil.get_data('hurwitzlab', 'data/appendix_a.json')


def load_appendix(path=None):
    """Validated table rows, from ``path``, the ``HURWITZ_LAB_DATA`` file or the shipped data.

    :raises DataFileError: on unreadable files, bad JSON, a wrong schema id or an invalid row.
    """
    path = path or os.environ.get(DATA_ENV)
    try:
        data = json.loads(_read(path).decode('utf-8'))
    except ValueError as e:
        raise DataFileError('Appendix data is not valid JSON: {0}'.format(e))
    if not isinstance(data, dict) or data.get('schema') != DATA_SCHEMA:
        raise DataFileError('Appendix data must declare schema {0!r}'.format(DATA_SCHEMA))

    rows = []
    for raw in data.get('rows', []):
        row = AppendixRowSchema(raw)
        if not row.is_valid():
            raise DataFileError('Invalid appendix row {0!r}: {1}'.format(
                raw.get('id') if isinstance(raw, dict) else raw, row.errors))
        row.type_tag = parse_tag(row.type_tag)
        rows.append(row)
    logger.debug('loaded %d appendix rows from %s', len(rows), path or 'package data')
    return rows


def row_braid_words(row):
    """``[(source, word), ...]`` for the printed ``tau`` and every recorded variant.
    """
    taus = [('printed', row.tau)]
    taus += [('variant-{0}'.format(i), v) for i, v in enumerate(row.tau_variants or [], 1)]
    words = []
    for source, tau in taus:
        tau = BraidWord(tau)
        if row.rho:
            words.append((source, tau.inverse() + BraidWord(row.rho) + tau))
        else:
            words.append((source, tau))
    return words


def _attempt(base, word, expected):
    try:
        computed = braid_matrix(base, word)
    except NotStabilizingError:
        return {'status': 'not-stabilizing', 'computed': None}
    except NonIntegralTransporterError:
        return {'status': 'non-integral', 'computed': None}
    except BraidIndexError as e:
        return {'status': 'bad-letter', 'computed': None, 'error': str(e)}
    except HurwitzLabError as e:
        return {'status': 'error', 'computed': None, 'error': str(e)}
    status = 'reproduced' if computed in expected else 'mismatch'
    return {'status': status, 'computed': [list(r) for r in computed]}


def verify_row(row):
    sys = build_elliptic(row.type_tag)
    printed = mat2(row.matrix)
    corrected = mat2(row.corrected) if row.corrected else None
    membership = gamma_membership(printed, sys.ell)
    corrected_membership = gamma_membership(corrected, sys.ell) if corrected else None

    base = canonical_tuple(sys)
    expected = [m for m in (printed, corrected) if m is not None]
    attempts = []
    for source, word in row_braid_words(row):
        attempt = _attempt(base, word, expected)
        attempt['source'] = source
        attempt['length'] = len(word)
        attempts.append(attempt)
    reproduced = any(a['status'] == 'reproduced' for a in attempts)
    if not reproduced:
        logger.warning('%s: printed matrix %s not reproduced (%s)', row.id, list(printed),
                       ', '.join(a['status'] for a in attempts))
    return {
        'id': row.id,
        'table': row.table,
        'type': row.type_tag,
        'ell': sys.ell,
        'printed': [list(r) for r in printed],
        'det': mat2_det(printed),
        'membership': membership,
        'corrected': None if corrected is None else [list(r) for r in corrected],
        'corrected_membership': corrected_membership,
        'membership_ok': bool(membership or corrected_membership),
        'attempts': attempts,
        'status': 'reproduced' if reproduced else attempts[0]['status'],
        'notes': list(row.notes or []),
    }


def _computed_d4(results):
    """Distinct transporters computed for the D4 rows that lie in Γ(2), in row order.
    """
    computed = []
    for result in results:
        if result['type'] != 'D4':
            continue
        for attempt in result['attempts']:
            m = attempt['computed']
            if m is not None and m not in computed and gamma_membership(m, 2):
                computed.append(m)
    return computed


def _surjectivity(certificate, computed_certificate):
    if computed_certificate is not None and computed_certificate.generates is True:
        return 'computed'
    if certificate is not None and certificate.generates is True:
        return 'printed-only'
    return 'not-shown'


def verify_appendix(type_tag=None, threads=1, rows=None):
    """Checks all rows of one type (all types by default) and returns an ordered report.

    For D4 the report carries two Γ(2) generation certificates, one for the printed matrices and
    one for the computed transporters. Only the computed one counts towards ``passed``;
    ``surjectivity`` is ``'printed-only'`` when generation rests on unreproduced rows.
    """
    rows = load_appendix() if rows is None else rows
    if type_tag is not None:
        type_tag = parse_tag(type_tag)
        rows = [r for r in rows if r.type_tag == type_tag]
    types = sorted({r.type_tag for r in rows}, key=ELLIPTIC_TYPES.index)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(verify_row, rows))
    else:
        results = [verify_row(r) for r in rows]

    certificate = computed_certificate = surjectivity = None
    unreproduced = []
    if 'D4' in types:
        printed = [r.matrix for r in rows if r.type_tag == 'D4']
        certificate = gamma2_generation_certificate(printed)
        computed = _computed_d4(results)
        if computed:
            computed_certificate = gamma2_generation_certificate(computed)
        surjectivity = _surjectivity(certificate, computed_certificate)
        unreproduced = [r['id'] for r in results
                        if r['type'] == 'D4' and r['status'] != 'reproduced']
        if surjectivity != 'computed':
            logger.warning('D4: Γ(2) generation %s; unreproduced rows %s', surjectivity,
                           ', '.join(unreproduced) or 'none')

    membership_passed = all(r['membership_ok'] for r in results)
    report = {
        'types': types,
        'rows': results,
        'membership_passed': membership_passed,
        'reproduced': sum(1 for r in results if r['status'] == 'reproduced'),
        'mismatches': [r['id'] for r in results if r['status'] != 'reproduced'],
        'certificate': None if certificate is None else certificate.to_dict(),
        'computed_certificate': (None if computed_certificate is None
                                 else computed_certificate.to_dict()),
        'surjectivity': surjectivity,
        'unreproduced': unreproduced,
        'passed': membership_passed and (surjectivity is None or surjectivity == 'computed'),
    }
    logger.info('appendix %s: %d rows, %d reproduced', ','.join(types), len(results),
                report['reproduced'])
    return report

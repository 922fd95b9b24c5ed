"""Absolute order and interval posets ``[1, c]``.

Finite intervals are exact. Elliptic intervals ``[1, c]^gen`` are built from the generating
factorizations of ``c`` whose roots lie in a radical window, so they are labelled inexact.
"""
import itertools
import json
import logging
from concurrent.futures import ThreadPoolExecutor

import networkx as nx

from .elliptic import lift_coefficients, lift_factorizations
from .exceptions import HurwitzLabError, UnknownFormatError
from .lattice import canonical_root, identity, int_det, mat_mul, orthogonal_inverse
from .rootsys import coxeter_transformation
from .weyl import enumerate_fac, reflection_length_finite

__all__ = [
    'EXPORT_FORMATS', 'IntervalPoset', 'absolute_leq_finite', 'interval_finite',
    'length_lower_bound', 'interval_elliptic_gen', 'stabilization_report', 'export',
    'poset_from_json',
]

logger = logging.getLogger(__name__)

EXPORT_FORMATS = ('dot', 'json')


class IntervalPoset(object):
    """Elements sorted by ``(length, matrix)`` with covers as index pairs.

    :param list elements: Matrices of the elements.
    :param list lengths: Reflection length of each element.
    :param list covers: ``(i, j)`` pairs with ``lengths[j] = lengths[i] + 1``.
    :param window: Radical window the elements were found in, ``None`` for finite intervals.
    :param bool exact: Whether the element set is known to be complete.
    :param list uncertified: ``(matrix, found_length)`` pairs whose length could not be proven.
    """

    def __init__(self, elements, lengths, covers, window=None, exact=True, type_tag=None,
                 uncertified=(), truncated=False):
        self.elements = [tuple(tuple(row) for row in e) for e in elements]
        self.lengths = list(lengths)
        self.covers = sorted(tuple(c) for c in covers)
        self.window = window
        self.exact = exact
        self.type_tag = type_tag
        self.uncertified = list(uncertified)
        self.truncated = truncated

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return '<IntervalPoset {0} elements, {1} covers>'.format(
            len(self.elements), len(self.covers))

    def __eq__(self, other):
        if not isinstance(other, IntervalPoset):
            return NotImplemented
        return self.to_data() == other.to_data()

    def index(self, element):
        return self.elements.index(tuple(tuple(row) for row in element))

    def level_counts(self):
        counts = [0] * (max(self.lengths, default=-1) + 1)
        for length in self.lengths:
            counts[length] += 1
        return counts

    def graph(self):
        g = nx.DiGraph()
        for i, length in enumerate(self.lengths):
            g.add_node(i, length=length)
        g.add_edges_from(self.covers)
        return g

    def is_graded(self):
        """Covers raise the length by one and only the bottom and top lack lower or upper covers.
        """
        if not self.elements:
            return True
        if any(self.lengths[j] != self.lengths[i] + 1 for i, j in self.covers):
            return False
        g = self.graph()
        top = max(self.lengths)
        bottoms = [v for v, d in g.in_degree() if d == 0]
        tops = [v for v, d in g.out_degree() if d == 0]
        return (all(self.lengths[v] == 0 for v in bottoms)
                and all(self.lengths[v] == top for v in tops))

    def maximal_chain_lengths(self):
        """Set of lengths of maximal chains from the bottom to the top element.
        """
        g = self.graph()
        bottom = self.lengths.index(0)
        top = self.lengths.index(max(self.lengths))
        if bottom == top:
            return {0}
        return {len(path) - 1 for path in nx.all_simple_paths(g, bottom, top)}

    def to_data(self):
        return {
            'type': self.type_tag,
            'window': self.window,
            'exact': self.exact,
            'truncated': self.truncated,
            'elements': [[list(row) for row in e] for e in self.elements],
            'labels': list(self.lengths),
            'covers': [list(c) for c in self.covers],
            'uncertified': [
                {'element': [list(row) for row in e], 'found_length': k}
                for e, k in self.uncertified
            ],
        }


def absolute_leq_finite(x, y, sys):
    """``x <= y`` in absolute order: ``l(y) = l(x) + l(x^-1 y)``.
    """
    quotient = mat_mul(orthogonal_inverse(sys.gram, x), y)
    return (reflection_length_finite(y, sys)
            == reflection_length_finite(x, sys) + reflection_length_finite(quotient, sys))


def _sorted_poset(levels, cover_pairs, **kwargs):
    ordered = sorted((length, element) for element, length in levels.items())
    position = {element: i for i, (_, element) in enumerate(ordered)}
    covers = {(position[u], position[v]) for u, v in cover_pairs
              if u in position and v in position}
    return IntervalPoset(
        [e for _, e in ordered], [k for k, _ in ordered], covers, **kwargs)


def interval_finite(c, sys):
    """All ``w <= c`` in a finite Weyl group, built level by level from the identity.
    """
    c = tuple(tuple(row) for row in c)
    total = reflection_length_finite(c, sys)
    reflections = [sys.reflection(r) for r in sys.positive_roots()]
    lengths = {}

    def length(w):
        if w not in lengths:
            lengths[w] = reflection_length_finite(w, sys)
        return lengths[w]

    one = identity(sys.rank)
    levels = {one: 0}
    covers = set()
    frontier = [one]
    for k in range(total):
        nxt = []
        for u in frontier:
            for s in reflections:
                v = mat_mul(u, s)
                if length(v) != k + 1:
                    continue
                rest = mat_mul(orthogonal_inverse(sys.gram, v), c)
                if length(rest) != total - k - 1:
                    continue
                covers.add((u, v))
                if v not in levels:
                    levels[v] = k + 1
                    nxt.append(v)
        frontier = nxt
    logger.debug('interval [1, c] in %s: %d elements', sys.type_tag, len(levels))
    return _sorted_poset(levels, covers, type_tag=sys.type_tag)


def _finite_part(u, n):
    return tuple(row[:n] for row in u[:n])


def length_lower_bound(u, sys):
    """Lower bound for the reflection length of an elliptic Weyl group element.

    With ``l`` the length of the finite part, ``u`` has length ``l`` exactly when some reduced
    factorization of the finite part lifts to ``u``; otherwise at least ``l + 2``. A nontrivial
    translation needs at least two reflections.
    """
    n = sys.rank
    if u == identity(sys.dim):
        return 0
    finite = sys.finite_part
    u_bar = _finite_part(u, n)
    length = reflection_length_finite(u_bar, finite)
    if length == 0:
        return 2
    for t in enumerate_fac(u_bar, finite, length):
        for _ in lift_factorizations(sys, t.entries, target=u):
            return length
    return length + 2


def _pairing_matrix(finite_roots):
    """``M`` with ``det(lifted roots) = x · M · y`` for lifts ``γ_j + x_j a + y_j b``.

    Laplace expansion along the two radical columns: ``M[i][k]`` is the signed complementary
    minor of rows ``i, k`` in the finite columns.
    """
    m = len(finite_roots)
    pairing = [[0] * m for _ in range(m)]
    for i in range(m):
        for k in range(i + 1, m):
            minor = [r for j, r in enumerate(finite_roots) if j != i and j != k]
            value = (-1) ** (i + k + 1) * int_det(minor)
            pairing[i][k] = value
            pairing[k][i] = -value
    return pairing


def _generating_lifts(sys, finite_tuple, K):
    roots = [canonical_root(tuple(r)) for r in finite_tuple.entries]
    xs_points, ys_points = lift_coefficients(sys, roots, K=K)
    if not xs_points:
        return []
    pairing = _pairing_matrix(roots)
    columns = list(zip(*pairing))
    result = []
    for xs in xs_points:
        row = [sum(x * p for x, p in zip(xs, column) if x) for column in columns]
        for ys in ys_points:
            if abs(sum(r * y for r, y in zip(row, ys))) == 1:
                result.append(tuple(
                    sys.embed(gamma, x, y) for gamma, x, y in zip(roots, xs, ys)))
    return result


def _chunks(iterable, size):
    iterator = iter(iterable)
    while True:
        chunk = list(itertools.islice(iterator, size))
        if not chunk:
            return
        yield chunk


def interval_elliptic_gen(sys, K=2, cap=10 ** 7, threads=1, chunk_size=256):
    """Prefix poset of the reduced generating factorizations of ``c`` with roots in the window
    ``|la|, |lb| <= K``.

    Every such factorization projects to a factorization of the finite part of ``c`` of the same
    length, so the finite factorizations are lifted exactly and filtered by ``|det| = 1``.
    Once ``l(c)`` is certified, a prefix of length ``k`` of a reduced factorization has length
    exactly ``k``; otherwise every prefix product is listed as ``uncertified``.

    :param int cap: Largest number of generating factorizations kept; the poset is marked
        ``truncated`` when it is reached.
    :param int threads: Worker threads for lifting the finite factorizations.
    """
    if K < 1:
        raise HurwitzLabError('Window must be at least 1')
    n = sys.rank
    m = n + 2
    c = coxeter_transformation(sys)
    finite = sys.finite_part

    def lift_chunk(chunk):
        return [_generating_lifts(sys, t, K) for t in chunk]

    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    factorizations = []
    finite_count = 0
    truncated = False
    try:
        for chunk in _chunks(enumerate_fac(_finite_part(c, n), finite, m), chunk_size):
            finite_count += len(chunk)
            if executor is not None:
                pieces = [chunk[i::threads] for i in range(threads)]
                batches = [b for part in executor.map(lift_chunk, pieces) for b in part]
            else:
                batches = lift_chunk(chunk)
            for batch in batches:
                factorizations.extend(batch)
            if len(factorizations) >= cap:
                factorizations = factorizations[:cap]
                truncated = True
                logger.warning('poset enumeration truncated at %d factorizations', cap)
                break
    finally:
        if executor is not None:
            executor.shutdown()
    factorizations.sort()
    logger.info('%s window %d: %d finite factorizations, %d generating lifts',
                sys.type_tag, K, finite_count, len(factorizations))

    reflections = {}
    products = {}
    found = {}
    steps = set()
    for roots in factorizations:
        u = identity(sys.dim)
        found[u] = 0
        for k, root in enumerate(roots, 1):
            key = (u, root)
            v = products.get(key)
            if v is None:
                if root not in reflections:
                    reflections[root] = sys.reflection(root)
                v = products[key] = mat_mul(u, reflections[root])
            found[v] = min(found.get(v, k), k)
            steps.add((u, v))
            u = v

    total = length_lower_bound(c, sys)
    if total == m:
        certified = found
        uncertified = []
    else:
        logger.warning('%s: length of c not certified (lower bound %d)', sys.type_tag, total)
        certified = {}
        uncertified = sorted(found.items(), key=lambda pair: (pair[1], pair[0]))
    covers = {(u, v) for u, v in steps if certified.get(v) == certified.get(u, -2) + 1}
    return _sorted_poset(
        certified, covers, window=K, exact=False, type_tag=sys.type_tag,
        uncertified=uncertified, truncated=truncated)


def stabilization_report(p_k, p_k1):
    """Compares the level counts of two windowed posets of the same type.
    """
    counts_k, counts_k1 = p_k.level_counts(), p_k1.level_counts()
    size = max(len(counts_k), len(counts_k1))
    counts_k += [0] * (size - len(counts_k))
    counts_k1 += [0] * (size - len(counts_k1))
    stable = [k for k in range(size) if counts_k[k] == counts_k1[k]]
    return {
        'type': p_k.type_tag,
        'windows': [p_k.window, p_k1.window],
        'levels': [counts_k, counts_k1],
        'stable_levels': stable,
        'stable': len(stable) == size,
        'uncertified': [len(p_k.uncertified), len(p_k1.uncertified)],
    }


def _dot(p):
    g = p.graph()
    lines = ['digraph interval {', '  rankdir=BT;']
    by_level = {}
    for v, data in sorted(g.nodes(data=True)):
        by_level.setdefault(data['length'], []).append(v)
        lines.append('  n{0} [label="{0}"];'.format(v))
    for length in sorted(by_level):
        nodes = ' '.join('n{0};'.format(v) for v in by_level[length])
        lines.append('  {{ rank=same; {0} }}'.format(nodes))
    for u, v in sorted(g.edges()):
        lines.append('  n{0} -> n{1};'.format(u, v))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def export(p, format):
    """Serializes a poset as Graphviz DOT or JSON.

    :raises UnknownFormatError: for any other format.
    """
    if format == 'dot':
        return _dot(p).encode('utf-8')
    if format == 'json':
        return json.dumps(p.to_data(), sort_keys=True).encode('utf-8')
    raise UnknownFormatError('Unknown export format {0!r}, expected one of {1}'.format(
        format, ', '.join(EXPORT_FORMATS)))


def poset_from_json(text):
    data = json.loads(text)
    return IntervalPoset(
        data['elements'], data['labels'], data['covers'], window=data.get('window'),
        exact=data.get('exact', True), type_tag=data.get('type'),
        uncertified=[
            (tuple(tuple(row) for row in u['element']), u['found_length'])
            for u in data.get('uncertified', [])
        ],
        truncated=data.get('truncated', False),
    )

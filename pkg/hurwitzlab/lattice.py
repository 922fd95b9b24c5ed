"""Diagrams, Gram forms and exact integer lattice linear algebra.

Vectors are tuples of ints over a fixed ordered basis, matrices are tuples of row tuples acting
on column vectors. Nothing here uses floating point.
"""
import json
import logging
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from .exceptions import (
    DimensionMismatchError, HurwitzLabValidationError, MalformedDiagramError, NonRootError,
)

__all__ = [
    'EDGE_VALUES', 'Diagram', 'GramForm', 'Lattice',
    'gram_from_diagram', 'diagram_from_basis', 'parse_diagram', 'bilinear', 'reflect',
    'reflection_matrix', 'canonical_root', 'hnf_span', 'lattice_equal', 'lattice_contains',
    'signature', 'RationalSystem', 'int_det', 'identity', 'mat_mul', 'mat_vec', 'mat_pow',
    'mat_sub', 'transpose',
    'matrix_order', 'is_orthogonal', 'kernel_dimension', 'to_sympy', 'from_sympy',
    'orthogonal_inverse',
]

logger = logging.getLogger(__name__)

EDGE_VALUES = {
    'single': -1,
    'dotted-single': 1,
    'double': -2,
    'dotted-double': 2,
}


class Diagram(namedtuple('Diagram', ['vertices', 'edges'])):
    """Generalized Coxeter-Dynkin diagram.

    ``edges`` holds ``(i, j, kind)`` triples of vertex indices with ``kind`` one of
    :data:`EDGE_VALUES`.
    """
    __slots__ = ()

    def __new__(cls, vertices, edges=()):
        vertices = tuple(vertices)
        edges = tuple((int(i), int(j), kind) for i, j, kind in edges)
        if len(set(vertices)) != len(vertices):
            raise MalformedDiagramError('Vertex labels must be unique: {0}'.format(vertices))
        seen = set()
        for i, j, kind in edges:
            if kind not in EDGE_VALUES:
                raise MalformedDiagramError('Unknown edge kind {0!r}'.format(kind))
            if i == j:
                raise MalformedDiagramError('Self edge on vertex {0}'.format(vertices[i]))
            if not (0 <= i < len(vertices) and 0 <= j < len(vertices)):
                raise MalformedDiagramError('Edge ({0}, {1}) outside the vertex range'.format(i, j))
            pair = frozenset((i, j))
            if pair in seen:
                raise MalformedDiagramError(
                    'Duplicate edge between {0} and {1}'.format(vertices[i], vertices[j]))
            seen.add(pair)
        return super().__new__(cls, vertices, edges)

    def index(self, label):
        return self.vertices.index(label)


class GramForm(namedtuple('GramForm', ['matrix', 'root_norms'])):
    """Symmetric integer matrix of the bilinear form on the lattice basis.

    ``root_norms`` lists the admissible values of ``(r|r)`` for reflection roots; it is ``(2,)``
    for the simply-laced forms read off diagrams.
    """
    __slots__ = ()

    def __new__(cls, matrix, root_norms=(2,)):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        size = len(matrix)
        for i, row in enumerate(matrix):
            if len(row) != size:
                raise DimensionMismatchError('Gram matrix must be square')
            for j in range(i):
                if row[j] != matrix[j][i]:
                    raise HurwitzLabValidationError(
                        'Gram matrix is not symmetric at ({0}, {1})'.format(i, j))
        return super().__new__(cls, matrix, tuple(root_norms))

    @property
    def dim(self):
        return len(self.matrix)


class Lattice(namedtuple('Lattice', ['basis', 'dim'])):
    """Integer span stored as the rows of its Hermite normal form.
    """
    __slots__ = ()

    @property
    def rank(self):
        return len(self.basis)


def gram_from_diagram(d):
    """Reads the Gram matrix off a diagram: 2 on the diagonal, edge values elsewhere.
    """
    size = len(d.vertices)
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = 2
    for i, j, kind in d.edges:
        rows[i][j] = rows[j][i] = EDGE_VALUES[kind]
    return GramForm(rows)


def diagram_from_basis(g, basis, labels=None):
    """Diagram of a root basis: one edge per pair with nonzero form value.

    :raises MalformedDiagramError: when some pair has a value outside ``{0, ±1, ±2}``.
    """
    labels = labels or [str(i) for i in range(len(basis))]
    by_value = {v: k for k, v in EDGE_VALUES.items()}
    edges = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            value = bilinear(g, basis[i], basis[j])
            if value == 0:
                continue
            if value not in by_value:
                raise MalformedDiagramError(
                    'Form value {0} between {1} and {2} has no edge kind'.format(
                        value, labels[i], labels[j]))
            edges.append((i, j, by_value[value]))
    return Diagram(labels, edges)


def parse_diagram(text):
    """Parses ``{"vertices": [...], "edges": [[i, j, kind], ...]}``.

    Edge endpoints may be given as indices or as vertex labels.
    """
    data = json.loads(text) if isinstance(text, (str, bytes)) else text
    try:
        vertices = data['vertices']
        raw_edges = data.get('edges', [])
    except (KeyError, TypeError, AttributeError):
        raise MalformedDiagramError('Diagram JSON needs a "vertices" list')

    def _index(endpoint):
        if isinstance(endpoint, int) and not isinstance(endpoint, bool):
            return endpoint
        try:
            return vertices.index(endpoint)
        except ValueError:
            raise MalformedDiagramError('Unknown vertex {0!r}'.format(endpoint))

    edges = []
    for edge in raw_edges:
        if len(edge) != 3:
            raise MalformedDiagramError('Edge {0!r} must be [i, j, kind]'.format(edge))
        edges.append((_index(edge[0]), _index(edge[1]), edge[2]))
    return Diagram(vertices, edges)


def _check_dim(g, *vectors):
    for v in vectors:
        if len(v) != g.dim:
            raise DimensionMismatchError(
                'Vector of length {0} in a form of dimension {1}'.format(len(v), g.dim))


def bilinear(g, x, y):
    _check_dim(g, x, y)
    return sum(
        xi * gij * yj
        for xi, row in zip(x, g.matrix) if xi
        for gij, yj in zip(row, y) if gij and yj
    )


def reflect(g, root, x):
    """Reflection of ``x`` in the hyperplane of ``root``: ``x - 2(x|r)/(r|r) r``.

    :raises NonRootError: when ``(r|r)`` is not an admissible root norm of ``g``.
    """
    norm = bilinear(g, root, root)
    if norm not in g.root_norms:
        raise NonRootError('Vector {0} has norm {1}, not a root'.format(root, norm))
    pairing = bilinear(g, x, root)
    if not pairing:
        return tuple(x)
    coeff = Fraction(2 * pairing, norm)
    if coeff.denominator != 1:
        raise NonRootError('Reflection in {0} does not preserve the lattice'.format(root))
    coeff = int(coeff)
    return tuple(xi - coeff * ri for xi, ri in zip(x, root))


def reflection_matrix(g, root):
    """Matrix of the reflection in ``root``, column j being the image of basis vector j.
    """
    size = g.dim
    columns = [
        reflect(g, root, tuple(1 if k == j else 0 for k in range(size))) for j in range(size)
    ]
    return transpose(columns)


def canonical_root(v):
    """Of ``v`` and ``-v`` returns the one whose first nonzero coordinate is positive.
    """
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)


def hnf_span(vs):
    """Hermite normal form basis of the integer span of ``vs``.
    """
    vs = [tuple(int(x) for x in v) for v in vs]
    if not vs:
        raise HurwitzLabValidationError('hnf_span needs at least one vector')
    dim = len(vs[0])
    if any(len(v) != dim for v in vs):
        raise DimensionMismatchError('Vectors of different lengths in one span')
    if not any(any(v) for v in vs):
        return Lattice((), dim)
    # sympy reduces columns
    reduced = hermite_normal_form(Matrix(vs).T)
    basis = tuple(
        tuple(int(reduced[i, j]) for i in range(reduced.rows)) for j in range(reduced.cols)
    )
    basis = tuple(row for row in basis if any(row))
    return Lattice(basis, dim)


def lattice_equal(l1, l2):
    if l1.dim != l2.dim:
        raise DimensionMismatchError('Lattices live in different dimensions')
    return l1.basis == l2.basis


def lattice_contains(lattice, v):
    if not lattice.basis:
        return not any(v)
    return lattice_equal(hnf_span(list(lattice.basis) + [v]), lattice)


def _swap_symmetric(a, i, j):
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_symmetric(a, src, dst):
    a[dst] = [x + y for x, y in zip(a[dst], a[src])]
    for row in a:
        row[dst] += row[src]


def signature(g):
    """``(positive, zero, negative)`` inertia of the form.

    Diagonalizes by congruence over the rationals: simultaneous row and column operations keep
    the inertia, so the signs of the pivots count it.
    """
    size = g.dim
    a = [[Fraction(x) for x in row] for row in g.matrix]
    pivots = []
    for k in range(size):
        p = next((i for i in range(k, size) if a[i][i]), None)
        if p is None:
            pair = next(((i, j) for i in range(k, size) for j in range(i + 1, size) if a[i][j]),
                        None)
            if pair is None:
                break
            # a zero diagonal with a[i][j] != 0 gets a[i][i] = 2 a[i][j]
            _add_symmetric(a, pair[1], pair[0])
            p = pair[0]
        _swap_symmetric(a, k, p)
        d = a[k][k]
        for i in range(k + 1, size):
            f = a[i][k] / d
            if f:
                for j in range(k + 1, size):
                    a[i][j] -= f * a[k][j]
        for i in range(k + 1, size):
            a[i][k] = a[k][i] = Fraction(0)
        pivots.append(d)
    positive = sum(1 for d in pivots if d > 0)
    negative = len(pivots) - positive
    zero = size - len(pivots)
    logger.debug('signature of %d-dimensional form: (%d, %d, %d)', size, positive, zero, negative)
    return positive, zero, negative


class RationalSystem(object):
    """Gauss-Jordan form of an integer system ``A x = b``, kept for many right-hand sides.

    The row operations are recorded in ``transform`` so that each new ``b`` costs one
    matrix-vector product. ``kernel`` holds one vector per free column, equal to 1 there and 0 at
    the other free columns.

    :param rows: Rows of ``A``.
    """

    def __init__(self, rows):
        rows = [list(row) for row in rows]
        r = len(rows)
        m = len(rows[0]) if rows else 0
        a = [[Fraction(x) for x in row] + [Fraction(int(i == k)) for k in range(r)]
             for i, row in enumerate(rows)]
        pivots = []
        lead = 0
        for col in range(m):
            if lead == r:
                break
            p = next((i for i in range(lead, r) if a[i][col]), None)
            if p is None:
                continue
            a[lead], a[p] = a[p], a[lead]
            factor = a[lead][col]
            a[lead] = [x / factor for x in a[lead]]
            for i in range(r):
                if i != lead and a[i][col]:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[lead])]
            pivots.append(col)
            lead += 1

        self.shape = (r, m)
        self.pivots = tuple(pivots)
        self.transform = [row[m:] for row in a]
        self.free = tuple(j for j in range(m) if j not in pivots)
        self.kernel = []
        for f in self.free:
            vec = [Fraction(0)] * m
            vec[f] = Fraction(1)
            for i, p in enumerate(pivots):
                vec[p] = -a[i][f]
            self.kernel.append(vec)

    @property
    def rank(self):
        return len(self.pivots)

    def solve(self, rhs):
        """Solution with every free coordinate 0, or ``None`` when ``A x = b`` is inconsistent.
        """
        if len(rhs) != self.shape[0]:
            raise DimensionMismatchError(
                'Right-hand side of length {0} for {1} equations'.format(len(rhs), self.shape[0]))
        reduced = [sum((t * b for t, b in zip(row, rhs) if b), Fraction(0))
                   for row in self.transform]
        if any(reduced[self.rank:]):
            return None
        x = [Fraction(0)] * self.shape[1]
        for i, p in enumerate(self.pivots):
            x[p] = reduced[i]
        return x


def int_det(m):
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
    """
    a = [list(row) for row in m]
    size = len(a)
    if not size:
        return 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, size) if a[i][k]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[-1][-1]


def identity(size):
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def transpose(m):
    return tuple(zip(*m))


def mat_mul(m1, m2):
    cols = transpose(m2)
    return tuple(tuple(sum(a * b for a, b in zip(row, col) if a) for col in cols) for row in m1)


def mat_vec(m, v):
    return tuple(sum(a * b for a, b in zip(row, v) if a) for row in m)


def mat_sub(m1, m2):
    return tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(m1, m2))


def mat_pow(m, k):
    result = identity(len(m))
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def matrix_order(m, limit=1000):
    """Smallest k >= 1 with ``m^k = 1``, or ``None`` when none exists up to ``limit``.
    """
    one = identity(len(m))
    power = m
    for k in range(1, limit + 1):
        if power == one:
            return k
        power = mat_mul(power, m)
    return None


def is_orthogonal(g, m):
    """``M^T G M = G``.
    """
    return mat_mul(mat_mul(transpose(m), g.matrix), m) == g.matrix


def kernel_dimension(m):
    """Dimension over the rationals of the kernel of ``m``.
    """
    return len(m[0]) - Matrix(m).rank()


def to_sympy(m):
    return Matrix(m)


def from_sympy(m):
    """Integer tuple-of-rows matrix from a sympy matrix, keeping rationals where present.
    """
    rows = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            x = m[i, j]
            row.append(int(x) if x.is_integer else Fraction(int(x.p), int(x.q)))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _gram_inverse(g):
    return from_sympy(Matrix(g.matrix).inv())


def orthogonal_inverse(g, m):
    """``M^-1 = G^-1 M^T G`` for a matrix preserving the nondegenerate form ``g``.
    """
    inv = mat_mul(mat_mul(_gram_inverse(g), transpose(m)), g.matrix)
    return tuple(tuple(int(x) for x in row) for row in inv)

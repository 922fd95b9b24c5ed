"""Finite root systems by reflection closure and the tubular elliptic root systems built on them.

Finite systems live on the simple-root basis. An elliptic system of rank n lives on
``(α1, ..., αn, a, b)`` where ``a`` and ``b`` span the radical of its form.
"""
import logging
from fractions import Fraction
from functools import lru_cache

from .exceptions import UnsupportedTypeError
from .lattice import (
    Diagram, GramForm, canonical_root, diagram_from_basis, gram_from_diagram, hnf_span,
    lattice_contains, mat_mul, reflect, reflection_matrix,
)
from .validators import TypeTag

__all__ = [
    'ROOT_COUNTS', 'ELLIPTIC_TYPES', 'FiniteRootSystem', 'EllipticRootSystem',
    'parse_tag', 'finite_diagram', 'build_finite', 'build_elliptic', 'roots_window',
    'canonical_word', 'canonical_labels', 'coxeter_transformation', 'mark_obstruction',
    'named_diagram', 'elliptic_basis_diagram', 'bourbaki_coordinates',
]

logger = logging.getLogger(__name__)

ELLIPTIC_TYPES = ('D4', 'E6', 'E7', 'E8')

ROOT_COUNTS = {
    'E6': 72,
    'E7': 126,
    'E8': 240,
    'F4': 48,
}


def parse_tag(tag):
    """Normalizes ``'e6'``, ``'E_6'`` or ``'E6.1.1'`` to ``'E6'``.

    :raises UnsupportedTypeError: for anything that is not ``A_n``, ``D_n``, ``E6-8`` or ``F4``.
    """
    parsed = TypeTag.normalize(tag)
    if parsed is None:
        raise UnsupportedTypeError('Unsupported root system type {0!r}'.format(tag))
    return '{0}{1}'.format(*parsed)


def expected_root_count(tag):
    letter, rank = tag[0], int(tag[1:])
    if letter == 'A':
        return rank * (rank + 1)
    if letter == 'D':
        return 2 * rank * (rank - 1)
    return ROOT_COUNTS[tag]


def finite_diagram(tag):
    """Dynkin diagram in Bourbaki numbering (labels ``'1'`` to ``'n'``).
    """
    tag = parse_tag(tag)
    letter, rank = tag[0], int(tag[1:])
    labels = [str(i) for i in range(1, rank + 1)]
    if letter == 'A':
        edges = [(i, i + 1, 'single') for i in range(rank - 1)]
    elif letter == 'D':
        edges = [(i, i + 1, 'single') for i in range(rank - 2)] + [(rank - 3, rank - 1, 'single')]
    elif letter == 'E':
        edges = [(0, 2, 'single'), (1, 3, 'single')]
        edges += [(i, i + 1, 'single') for i in range(2, rank - 1)]
    else:
        raise UnsupportedTypeError('{0} is not simply laced'.format(tag))
    return Diagram(labels, edges)


class FiniteRootSystem(object):
    """Finite crystallographic root system on its simple-root basis.

    ``all_roots`` is sorted lexicographically and contains both signs of every root.
    """

    def __init__(self, type_tag, gram, all_roots):
        self.type_tag = type_tag
        self.gram = gram
        self.rank = gram.dim
        self.simple_roots = tuple(
            tuple(1 if i == j else 0 for j in range(self.rank)) for i in range(self.rank))
        self.all_roots = tuple(sorted(all_roots))
        self._root_set = frozenset(self.all_roots)
        self.highest_root = max(self.all_roots, key=lambda r: (sum(r), r))
        self.marks = self.highest_root

    def __repr__(self):
        return '<FiniteRootSystem {0} with {1} roots>'.format(self.type_tag, len(self.all_roots))

    @property
    def simply_laced(self):
        return self.gram.root_norms == (2,)

    def is_root(self, v):
        return tuple(v) in self._root_set

    def positive_roots(self):
        return tuple(r for r in self.all_roots if canonical_root(r) == r)

    def norm(self, root):
        return sum(x * g * y for x, row in zip(root, self.gram.matrix) for g, y in zip(row, root))

    def reflection(self, root):
        return _reflection_matrix(self.gram, canonical_root(root))


@lru_cache(maxsize=None)
def _reflection_matrix(gram, root):
    return reflection_matrix(gram, root)


def _closure(gram, simple_roots):
    roots = set(simple_roots) | {tuple(-x for x in r) for r in simple_roots}
    worklist = list(roots)
    while worklist:
        root = worklist.pop()
        for s in simple_roots:
            image = reflect(gram, s, root)
            if image not in roots:
                roots.add(image)
                worklist.append(image)
    return roots


# F4 with long roots α1, α2 and short roots α3, α4, form scaled so short roots have norm 2.
_F4_GRAM = (
    (4, -2, 0, 0),
    (-2, 4, -2, 0),
    (0, -2, 2, -1),
    (0, 0, -1, 2),
)


@lru_cache(maxsize=None)
def build_finite(tag):
    tag = parse_tag(tag)
    if tag == 'F4':
        gram = GramForm(_F4_GRAM, root_norms=(2, 4))
    else:
        gram = gram_from_diagram(finite_diagram(tag))
    simple = [tuple(1 if i == j else 0 for j in range(gram.dim)) for i in range(gram.dim)]
    roots = _closure(gram, simple)
    system = FiniteRootSystem(tag, gram, roots)
    logger.debug('closure of %s: %d roots, highest root %s', tag, len(roots), system.highest_root)
    return system


class EllipticRootSystem(object):
    """Tubular elliptic root system ``Φ_f ⊕ Za ⊕ Zb`` with its elliptic root basis.

    ``basis_gamma`` is ordered ``α0, α1, ..., αn, αt*``; ``t_index`` is the Bourbaki number of
    the node with the largest mark.
    """

    def __init__(self, finite_part):
        self.type_tag = finite_part.type_tag
        self.finite_part = finite_part
        n = self.rank = finite_part.rank
        size = n + 2
        rows = [list(row) + [0, 0] for row in finite_part.gram.matrix] + [[0] * size] * 2
        self.gram = GramForm(rows)
        self.a = self.unit(n)
        self.b = self.unit(n + 1)

        marks = finite_part.marks
        self.t_index = marks.index(max(marks)) + 1
        self.ell = max(marks)

        self.alpha0 = tuple(-m for m in marks) + (0, 1)
        self.alpha_t = self.unit(self.t_index - 1)
        self.alpha_t_star = self.alpha_t[:n] + (1, 0)
        self.basis_gamma = (
            (self.alpha0,) + tuple(self.unit(i) for i in range(n)) + (self.alpha_t_star,)
        )
        self.gamma_labels = (
            ('0',) + tuple(str(i) for i in range(1, n + 1)) + ('{0}*'.format(self.t_index),)
        )

    def __repr__(self):
        return '<EllipticRootSystem {0}(1,1)>'.format(self.type_tag)

    @property
    def dim(self):
        return self.rank + 2

    def unit(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank + 2))

    def embed(self, v, la=0, lb=0):
        return tuple(v) + (la, lb)

    def finite(self, v):
        return tuple(v[:self.rank])

    def is_root(self, v):
        return self.finite_part.is_root(self.finite(v))

    def reflection(self, root):
        return _reflection_matrix(self.gram, canonical_root(root))

    @property
    def root_lattice(self):
        return hnf_span([self.unit(i) for i in range(self.dim)])


@lru_cache(maxsize=None)
def build_elliptic(tag):
    tag = parse_tag(tag)
    if tag not in ELLIPTIC_TYPES:
        raise UnsupportedTypeError('{0} has no tubular elliptic form'.format(tag))
    return EllipticRootSystem(build_finite(tag))


def roots_window(sys, K):
    """All roots ``β + la + kb`` with ``|l|, |k| <= K``, sorted.
    """
    if K < 0:
        raise ValueError('Window must be non-negative')
    shifts = range(-K, K + 1)
    return sorted(
        sys.embed(beta, la, lb)
        for beta in sys.finite_part.all_roots for la in shifts for lb in shifts
    )


def canonical_word(sys):
    """Roots of ``c = s1 ... ŝt ... sn s0 st st*`` in factor order.
    """
    n, t = sys.rank, sys.t_index
    word = [sys.unit(i) for i in range(n) if i != t - 1]
    return tuple(word + [sys.alpha0, sys.alpha_t, sys.alpha_t_star])


def canonical_labels(sys):
    n, t = sys.rank, sys.t_index
    labels = [str(i) for i in range(1, n + 1) if i != t]
    return tuple(labels + ['0', str(t), '{0}*'.format(t)])


@lru_cache(maxsize=None)
def coxeter_transformation(sys):
    result = None
    for root in canonical_word(sys):
        m = sys.reflection(root)
        result = m if result is None else mat_mul(result, m)
    return result


def mark_obstruction(sys):
    """True when ``αt`` is not an integer combination of ``α̃`` and the other simple roots.
    """
    finite = sys.finite_part
    t = sys.t_index - 1
    others = [r for i, r in enumerate(finite.simple_roots) if i != t]
    span = hnf_span([finite.highest_root] + others)
    return not lattice_contains(span, finite.simple_roots[t])


def elliptic_basis_diagram(sys):
    return diagram_from_basis(sys.gram, sys.basis_gamma, list(sys.gamma_labels))


def named_diagram(tag):
    """Built-in diagram: finite Dynkin diagrams by tag, elliptic ones as ``D4.1.1`` etc.
    """
    text = str(tag).strip()
    if text.endswith('.1.1') or text.endswith('(1,1)'):
        return elliptic_basis_diagram(build_elliptic(text))
    return finite_diagram(text)


_HALF = Fraction(1, 2)


def _e8_columns():
    cols = [[-_HALF] * 8]
    cols[0][0] = cols[0][7] = _HALF
    cols.append([1, 1, 0, 0, 0, 0, 0, 0])
    for k in range(1, 7):
        col = [0] * 8
        col[k] = 1
        col[k - 1] = -1
        cols.append(col)
    return cols


@lru_cache(maxsize=None)
def bourbaki_coordinates(tag):
    """Matrix whose column j holds the coordinates of ``αj`` in the Bourbaki basis.

    The basis is ``e1..e4`` for D4, ``e1..e8`` for E8, and ``e1..e6, f7`` or ``e1..e5, f6`` for
    E7 and E6 with ``f7 = (-e7 + e8)/2`` and ``f6 = (-e6 - e7 + e8)/3``.
    """
    tag = parse_tag(tag)
    if tag == 'D4':
        cols = [[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 1, 1]]
    elif tag in ('E6', 'E7', 'E8'):
        n = int(tag[1])
        cols = [col[:n] for col in _e8_columns()[:n]]
        # the trailing coordinate becomes the f-coefficient; only α1 has one
        cols[0][n - 1] = Fraction(3, 2) if n == 6 else 1 if n == 7 else _HALF
    else:
        raise UnsupportedTypeError('No Bourbaki coordinates for {0}'.format(tag))
    return tuple(tuple(Fraction(cols[j][i]) for j in range(len(cols))) for i in range(len(cols)))

"""Weyl group elements as integer matrices, reflection length, generation tests and
factorization enumeration for finite Weyl groups.
"""
import itertools
import logging
from collections import defaultdict, deque
from functools import lru_cache

from .exceptions import CapExceededError, NotOrthogonalError
from .lattice import (
    canonical_root, hnf_span, identity, is_orthogonal, kernel_dimension, lattice_equal,
    mat_mul, mat_sub, orthogonal_inverse,
)

__all__ = [
    'ReflectionTuple', 'FiniteWeylGroup', 'weyl_group', 'product', 'reflection_length_finite',
    'is_generating', 'generates_group', 'reflection_conjugacy_classes', 'class_index',
    'enumerate_fac', 'count_fac', 'cayley_reflection_distances', 'coxeter_element',
]

logger = logging.getLogger(__name__)


class ReflectionTuple(object):
    """Ordered tuple of reflections ``s_β``, each stored by its canonical root.

    ``ambient`` is the root system the roots live in; it supplies ``gram`` and ``reflection``.
    """

    __slots__ = ('entries', 'ambient')

    def __init__(self, entries, ambient):
        self.entries = tuple(canonical_root(tuple(r)) for r in entries)
        self.ambient = ambient

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, ReflectionTuple):
            return NotImplemented
        return self.entries == other.entries and self.ambient is other.ambient

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'ReflectionTuple({0!r})'.format(list(self.entries))

    def replace(self, entries):
        return ReflectionTuple(entries, self.ambient)

    def to_json(self):
        return [list(r) for r in self.entries]


def product(t):
    """Matrix of ``t1 t2 ... tm``. The empty product is the identity.
    """
    result = identity(t.ambient.gram.dim)
    for root in t.entries:
        result = mat_mul(result, t.ambient.reflection(root))
    return result


def reflection_length_finite(w, sys):
    """Reflection length in a finite Weyl group: codimension of the fixed space.

    :raises NotOrthogonalError: when ``w`` does not preserve the form of ``sys``.
    """
    if not is_orthogonal(sys.gram, w):
        raise NotOrthogonalError('Element does not preserve the form of {0}'.format(sys.type_tag))
    return len(w) - kernel_dimension(mat_sub(w, identity(len(w))))


def is_generating(t):
    """True when the roots of ``t`` span the whole root lattice of the ambient.
    """
    if not t.entries:
        return False
    dim = t.ambient.gram.dim
    full = hnf_span([tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)])
    return lattice_equal(hnf_span(t.entries), full)


class FiniteWeylGroup(object):
    """Finite Weyl group tabulated once.

    Elements are numbered by breadth-first search from the identity. Reflections are numbered in
    the order of ``sys.positive_roots()``. ``rmul[g][r]`` is the index of ``g · s_r``.
    """

    def __init__(self, sys):
        self.sys = sys
        self.roots = sys.positive_roots()
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        self.reflections = [sys.reflection(r) for r in self.roots]
        simple = [self.root_index[r] for r in sys.simple_roots]

        one = identity(sys.rank)
        self.elements = [one]
        self.index = {one: 0}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for r in simple:
                h = mat_mul(self.elements[g], self.reflections[r])
                if h not in self.index:
                    self.index[h] = len(self.elements)
                    self.elements.append(h)
                    queue.append(len(self.elements) - 1)

        self.order = len(self.elements)
        self.rmul = [
            [self.index[mat_mul(g, s)] for s in self.reflections] for g in self.elements
        ]
        self.reflection_elements = [self.index[s] for s in self.reflections]
        self.inverse = [self.index[orthogonal_inverse(sys.gram, m)] for m in self.elements]
        self._closures = {}
        logger.debug('tabulated W(%s): %d elements, %d reflections',
                     sys.type_tag, self.order, len(self.roots))

    def __repr__(self):
        return '<FiniteWeylGroup {0} of order {1}>'.format(self.sys.type_tag, self.order)

    def mul(self, g, h):
        return self.index[mat_mul(self.elements[g], self.elements[h])]

    def element(self, matrix):
        return self.index[tuple(tuple(row) for row in matrix)]

    def word_element(self, reflection_indices):
        g = 0
        for r in reflection_indices:
            g = self.rmul[g][r]
        return g

    def conjugate_root(self, r, by):
        """Index of the reflection ``s_by s_r s_by``.
        """
        return _conjugate_index(self, r, by)

    def closure(self, reflection_indices):
        """Element indices of the subgroup generated by the given reflections.
        """
        key = frozenset(reflection_indices)
        if key in self._closures:
            return self._closures[key]
        gens = sorted(key)
        seen = {0}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for r in gens:
                h = self.rmul[g][r]
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        self._closures[key] = frozenset(seen)
        return self._closures[key]

    def generates(self, reflection_indices):
        return len(self.closure(frozenset(reflection_indices))) == self.order

    def reflection_tuple(self, reflection_indices):
        return ReflectionTuple([self.roots[r] for r in reflection_indices], self.sys)

    def indices_of(self, t):
        return tuple(self.root_index[r] for r in t.entries)


@lru_cache(maxsize=None)
def _conjugate_index(group, r, by):
    root = group.sys.reflection(group.roots[by])
    image = canonical_root(tuple(sum(a * b for a, b in zip(row, group.roots[r])) for row in root))
    return group.root_index[image]


@lru_cache(maxsize=None)
def weyl_group(sys):
    return FiniteWeylGroup(sys)


def generates_group(t, group=None):
    """``<t1, ..., tm> = W`` for a tuple over a finite ambient, by subgroup closure.
    """
    group = group or weyl_group(t.ambient)
    return group.generates(group.indices_of(t))


def reflection_conjugacy_classes(sys):
    """Orbits of ``W`` on its reflections, each a sorted tuple of canonical positive roots.

    Classes are ordered by their first root.
    """
    remaining = set(sys.positive_roots())
    classes = []
    while remaining:
        seed = min(remaining)
        orbit = {seed}
        worklist = [seed]
        while worklist:
            root = worklist.pop()
            for s in sys.simple_roots:
                image = canonical_root(_apply(sys.reflection(s), root))
                if image not in orbit:
                    orbit.add(image)
                    worklist.append(image)
        remaining -= orbit
        classes.append(tuple(sorted(orbit)))
    return sorted(classes)


def class_index(classes):
    """Maps each root to the position of its class in ``classes``.
    """
    return {root: i for i, cls in enumerate(classes) for root in cls}


def _apply(m, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def _half_products(group, length):
    table = defaultdict(list)
    for word in itertools.product(range(len(group.roots)), repeat=length):
        table[group.word_element(word)].append(word)
    return table


def enumerate_fac(w, sys, m, require_generating=False, cap=10 ** 7, group=None):
    """Yields every ``m``-tuple of reflections with product ``w``, in lexicographic order of
    reflection indices.

    The search splits ``m`` in half and joins prefix words with suffix words through the product
    table. Tuples of the wrong parity or below the reflection length are never produced.

    :raises CapExceededError: after ``cap`` tuples, with the partial count.
    """
    group = group or weyl_group(sys)
    target = group.element(w)
    length = reflection_length_finite(w, sys)
    if m < length or (m - length) % 2:
        return

    left = m // 2
    right = m - left
    prefixes = _half_products(group, left)
    suffixes = _half_products(group, right)
    logger.debug('enumerate_fac m=%d: %d prefix and %d suffix classes',
                 m, len(prefixes), len(suffixes))

    matches = []
    for q, suffix_words in suffixes.items():
        p = group.mul(target, group.inverse[q])
        if p in prefixes:
            matches.append((prefixes[p], suffix_words))

    words = sorted(
        pre + suf for prefix_words, suffix_words in matches
        for pre in prefix_words for suf in suffix_words
    )
    count = 0
    for word in words:
        if require_generating and not group.generates(word):
            continue
        count += 1
        if count > cap:
            raise CapExceededError(
                'enumerate_fac passed the cap of {0} tuples'.format(cap), count=count - 1)
        yield group.reflection_tuple(word)


def count_fac(w, sys, m, require_generating=False, cap=10 ** 7):
    return sum(1 for _ in enumerate_fac(w, sys, m, require_generating, cap))


def cayley_reflection_distances(group):
    """Distance from the identity to every element in the Cayley graph on all reflections.
    """
    dist = {0: 0}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for r in range(len(group.roots)):
            h = group.rmul[g][r]
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist


def coxeter_element(sys):
    """``s1 s2 ... sn`` in Bourbaki numbering.
    """
    return product(ReflectionTuple(sys.simple_roots, sys))

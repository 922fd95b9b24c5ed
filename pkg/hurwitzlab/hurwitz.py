"""Hurwitz moves, braid words and orbit enumeration on reflection tuples.

A braid letter ``+k`` acts on the entries ``k, k+1`` (counted from 1) by
``(t_k, t_{k+1}) -> (t_k t_{k+1} t_k, t_k)`` and ``-k`` by the inverse, letters applied left to
right. This is the orientation of the printed braid tables, under which
``σ5 (s1, s3, s4, s0, s2, s2*) = (s1, s3, s4, s0, s2*^{s2}, s2)``.
"""
import logging
from collections import Counter, deque
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from .exceptions import BraidIndexError, CapExceededError, HurwitzLabError, ShapeNotFoundError
from .lattice import canonical_root, mat_mul, reflect
from .rootsys import build_finite
from .weyl import (
    ReflectionTuple, class_index, enumerate_fac, generates_group, product,
    reflection_conjugacy_classes, reflection_length_finite, weyl_group,
)

__all__ = [
    'BraidWord', 'OrbitReport', 'conjugate_root', 'hurwitz_move', 'apply_braid_word',
    'hurwitz_orbit', 'multiset_invariant', 'classify_orbits', 'lr_duplicate_form',
    'square_conjugation_braid', 'f4_example', 'orbit_classification_sweep',
]

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10 ** 7


class BraidWord(tuple):
    """Word in the Artin generators, ``k`` for ``σ_k`` and ``-k`` for its inverse.
    """

    def __new__(cls, letters=()):
        letters = tuple(int(x) for x in letters)
        if any(x == 0 for x in letters):
            raise BraidIndexError('Braid letters must be nonzero')
        return super().__new__(cls, letters)

    def __add__(self, other):
        return BraidWord(tuple(self) + tuple(other))

    def __mul__(self, times):
        return BraidWord(tuple(self) * times)

    def inverse(self):
        return BraidWord(-x for x in reversed(self))

    def strands(self):
        """Smallest number of strands the word makes sense on.
        """
        return max((abs(x) for x in self), default=0) + 1

    def check(self, length):
        for letter in self:
            if not 1 <= abs(letter) < length:
                raise BraidIndexError(
                    'Letter {0} out of range for a tuple of length {1}'.format(letter, length))
        return self


class OrbitReport(object):
    """Result of an orbit closure.

    :param int orbit_size: Number of tuples found.
    :param representative: Lexicographically smallest tuple found.
    :param invariant_multiset: Sorted class ids of the entries, or ``None`` without classes.
    :param bool truncated: The cap stopped the search before the orbit closed.
    :param int radius: Number of breadth-first levels explored.
    """

    def __init__(self, orbit_size, representative, invariant_multiset=None, truncated=False,
                 radius=0, members=None):
        self.orbit_size = orbit_size
        self.representative = representative
        self.invariant_multiset = invariant_multiset
        self.truncated = truncated
        self.radius = radius
        self.members = members

    def __repr__(self):
        return '<OrbitReport size={0} truncated={1}>'.format(self.orbit_size, self.truncated)

    def to_dict(self):
        return {
            'orbit_size': self.orbit_size,
            'representative': self.representative.to_json(),
            'invariant_multiset': (
                None if self.invariant_multiset is None else list(self.invariant_multiset)),
            'truncated': self.truncated,
            'radius': self.radius,
        }


@lru_cache(maxsize=1 << 20)
def conjugate_root(ambient, by, root):
    """Canonical root of ``s_by s_root s_by``.
    """
    return canonical_root(reflect(ambient.gram, by, root))


def _move_entries(entries, ambient, i, inverse):
    if not 1 <= i < len(entries):
        raise BraidIndexError(
            'Move index {0} out of range for a tuple of length {1}'.format(i, len(entries)))
    left, right = entries[i - 1], entries[i]
    if inverse:
        pair = (conjugate_root(ambient, left, right), left)
    else:
        pair = (right, conjugate_root(ambient, right, left))
    return entries[:i - 1] + pair + entries[i + 1:]


def hurwitz_move(t, i, inverse=False):
    """``σ_i`` of the Hurwitz action, ``(t_i, t_{i+1}) -> (t_{i+1}, t_{i+1} t_i t_{i+1})``.

    With ``inverse`` it is ``(t_i, t_{i+1}) -> (t_i t_{i+1} t_i, t_i)``.
    """
    return ReflectionTuple(_move_entries(t.entries, t.ambient, i, inverse), t.ambient)


def apply_braid_word(t, w):
    entries = t.entries
    for letter in BraidWord(w).check(len(entries)):
        entries = _move_entries(entries, t.ambient, abs(letter), letter > 0)
    return ReflectionTuple(entries, t.ambient)


def _neighbours(entries, ambient):
    result = []
    for i in range(1, len(entries)):
        result.append(_move_entries(entries, ambient, i, False))
        result.append(_move_entries(entries, ambient, i, True))
    return result


def _closure(seed, expand, cap, threads=1, stop=None):
    """Breadth-first closure of ``seed`` under ``expand``.

    Returns ``(seen, truncated, radius, hit)`` where ``hit`` is the first state satisfying
    ``stop``. Levels are merged in a fixed order, so the result does not depend on ``threads``.
    """
    seen = {seed}
    if stop is not None and stop(seed):
        return seen, False, 0, seed
    frontier = [seed]
    radius = 0
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            radius += 1
            if executor is not None:
                expanded = list(executor.map(expand, frontier))
            else:
                expanded = [expand(state) for state in frontier]
            next_frontier = []
            for states in expanded:
                for state in states:
                    if state in seen:
                        continue
                    seen.add(state)
                    next_frontier.append(state)
                    if stop is not None and stop(state):
                        return seen, False, radius, state
                    if len(seen) >= cap:
                        logger.warning('orbit closure truncated at %d tuples (radius %d)',
                                       len(seen), radius)
                        return seen, True, radius, None
            frontier = next_frontier
    finally:
        if executor is not None:
            executor.shutdown()
    return seen, False, radius, None


def multiset_invariant(t, classes):
    """Sorted tuple of the conjugacy-class ids of the entries.

    :param classes: A mapping root -> class id, or a list of classes as returned by
        :func:`~hurwitzlab.weyl.reflection_conjugacy_classes`.
    """
    if not isinstance(classes, dict):
        classes = class_index(classes)
    try:
        return tuple(sorted(classes[root] for root in t.entries))
    except KeyError as e:
        raise HurwitzLabError('Root {0} is in no conjugacy class'.format(e.args[0]))


def hurwitz_orbit(t, cap=DEFAULT_CAP, classes=None, threads=1, keep_members=False):
    """Closure of ``t`` under all moves and their inverses. Hitting ``cap`` is reported through
    ``truncated``, never raised.
    """
    if cap <= 0:
        raise ValueError('cap must be positive')
    ambient = t.ambient
    seen, truncated, radius, _ = _closure(
        t.entries, lambda entries: _neighbours(entries, ambient), cap, threads)
    representative = ReflectionTuple(min(seen), ambient)
    invariant = multiset_invariant(t, classes) if classes is not None else None
    logger.debug('orbit of %d tuples, radius %d', len(seen), radius)
    members = sorted(seen) if keep_members else None
    return OrbitReport(len(seen), representative, invariant, truncated, radius, members)


def _index_neighbours(group):
    def expand(word):
        result = []
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            result.append(word[:i] + (b, group.conjugate_root(a, b)) + word[i + 2:])
            result.append(word[:i] + (group.conjugate_root(b, a), a) + word[i + 2:])
        return result
    return expand


def classify_orbits(w, sys, m, cap=DEFAULT_CAP, require_generating=True, threads=1):
    """Partitions the factorizations of ``w`` into ``m`` reflections into Hurwitz orbits.

    :raises CapExceededError: when the factorization set is larger than ``cap``.
    """
    group = weyl_group(sys)
    index = class_index(reflection_conjugacy_classes(sys))
    words = {
        group.indices_of(t)
        for t in enumerate_fac(w, sys, m, require_generating=require_generating, cap=cap)
    }
    expand = _index_neighbours(group)
    reports = []
    remaining = set(words)
    while remaining:
        seed = min(remaining)
        orbit, truncated, radius, _ = _closure(seed, expand, cap, threads)
        if truncated:
            raise CapExceededError('Orbit exceeded the cap of {0}'.format(cap), count=len(orbit))
        remaining -= orbit
        representative = group.reflection_tuple(min(orbit))
        reports.append(OrbitReport(
            len(orbit), representative, multiset_invariant(representative, index),
            radius=radius,
        ))
    logger.debug('%d factorizations in %d orbits', len(words), len(reports))
    return reports


def lr_duplicate_form(t, sys, cap=DEFAULT_CAP):
    """Finds a tuple in the orbit of ``t`` of the shape ``(x1, x1, x2, x2, ..., r1, ..., rk)``
    with a reduced tail.

    :raises ShapeNotFoundError: ``exhausted`` tells a closed orbit without the shape apart from a
        search stopped by ``cap``.
    """
    length = reflection_length_finite(product(t), sys)
    pairs = (len(t) - length) // 2

    def has_shape(entries):
        return all(entries[2 * k] == entries[2 * k + 1] for k in range(pairs))

    ambient = t.ambient
    seen, truncated, _, hit = _closure(
        t.entries, lambda entries: _neighbours(entries, ambient), cap, stop=has_shape)
    if hit is None:
        raise ShapeNotFoundError(
            'No duplicate form found among {0} tuples'.format(len(seen)),
            exhausted=not truncated, count=len(seen))
    return ReflectionTuple(hit, ambient)


def square_conjugation_braid(t, x_word):
    """Braid taking ``(t1, ..., tn, t, t)`` to ``(t1, ..., tn, t^x, t^x)``.

    ``x_word`` lists positions ``j`` (1-based, ``j <= n``) of the entries ``t_j`` whose product
    is ``x``; the trailing pair is conjugated by them in that order.
    """
    entries = t.entries
    n = len(entries) - 2
    if n < 1 or entries[-1] != entries[-2]:
        raise HurwitzLabError('Tuple must end in a repeated reflection')
    letters = []
    for j in x_word:
        if not 1 <= j <= n:
            raise BraidIndexError('Position {0} outside 1..{1}'.format(j, n))
        # pair slides left to sit right of t_j, entries it passes are unchanged
        for p in range(n + 1, j + 1, -1):
            letters += [-(p - 1), -p]
        letters += [j, j + 1, j + 1, j]
        for p in range(j + 1, n + 1):
            letters += [p + 1, p]
    return BraidWord(letters)


def f4_example():
    """The two F4 factorizations with equal product and generation but different class
    multisets, together with the root identity that shows the second one generates.
    """
    sys = build_finite('F4')
    group = weyl_group(sys)
    a1, a2, a3, a4 = sys.simple_roots
    highest = sys.highest_root
    alpha = (0, 1, 1, 0)

    first = ReflectionTuple([highest, a1, a3, a4, a2, a2], sys)
    second = ReflectionTuple([highest, a1, a3, a4, alpha, alpha], sys)
    w = product(ReflectionTuple([highest, a1, a3, a4], sys))

    chain = sys.reflection(alpha)
    for root in (a1, highest, a4, alpha):
        chain = mat_mul(chain, sys.reflection(root))
    image = tuple(sum(x * y for x, y in zip(row, a1)) for row in chain)

    classes = reflection_conjugacy_classes(sys)
    return {
        'w': w,
        'tuples': (first, second),
        'products_equal_w': product(first) == w and product(second) == w,
        'generating': (generates_group(first, group), generates_group(second, group)),
        'multisets': (multiset_invariant(first, classes), multiset_invariant(second, classes)),
        'class_sizes': tuple(len(c) for c in classes),
        'identity_image': image,
        'identity_holds': image == a2,
    }


def orbit_classification_sweep(sys, cap=DEFAULT_CAP):
    """For every ``w`` with reflection length equal to the rank and a nonempty generating
    factorization set of length rank + 2, compares orbit count with distinct class multisets.
    """
    group = weyl_group(sys)
    m = sys.rank + 2
    rows = []
    for g, w in enumerate(group.elements):
        if reflection_length_finite(w, sys) != sys.rank:
            continue
        reports = classify_orbits(w, sys, m, cap=cap)
        if not reports:
            continue
        multisets = Counter(r.invariant_multiset for r in reports)
        rows.append({
            'element': g,
            'factorizations': sum(r.orbit_size for r in reports),
            'orbits': len(reports),
            'multisets': len(multisets),
            'bijective': len(reports) == len(multisets),
        })
    logger.info('%s: %d eligible elements', sys.type_tag, len(rows))
    return rows

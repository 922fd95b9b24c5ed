"""Principal congruence subgroups of SL2(Z) and a generation test for Γ(2).

Γ(2) is ``{±I} × <A, B>`` with ``A = [[1, 2], [0, 1]]``, ``B = [[1, 0], [2, 1]]`` and ``<A, B>``
free. Every element is written as a sign times a reduced word in ``A`` and ``B``; a set of
elements generates Γ(2) exactly when the folded graph of their words is the rose on ``A`` and
``B`` and the sign voltages force ``-I`` into the subgroup.
"""
import logging
from collections import deque
from fractions import Fraction

from .exceptions import HurwitzLabValidationError

__all__ = [
    'GAMMA2_A', 'GAMMA2_B', 'MINUS_IDENTITY', 'IDENTITY2', 'mat2', 'mat2_mul', 'mat2_inv',
    'mat2_det', 'mat2_pow', 'gamma_membership', 'gamma2_decompose', 'word_matrix',
    'reduce_word', 'Gamma2Certificate', 'gamma2_generation_certificate',
]

logger = logging.getLogger(__name__)

IDENTITY2 = ((1, 0), (0, 1))
MINUS_IDENTITY = ((-1, 0), (0, -1))
GAMMA2_A = ((1, 2), (0, 1))
GAMMA2_B = ((1, 0), (2, 1))

_LETTERS = {'A': GAMMA2_A, 'B': GAMMA2_B}


def mat2(m):
    (a, b), (c, d) = m
    return (int(a), int(b)), (int(c), int(d))


def mat2_mul(m1, m2):
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return (a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)


def mat2_det(m):
    (a, b), (c, d) = m
    return a * d - b * c


def mat2_inv(m):
    """Inverse of a determinant-one matrix.
    """
    (a, b), (c, d) = m
    return (d, -b), (-c, a)


def mat2_pow(m, k):
    if k < 0:
        m, k = mat2_inv(m), -k
    result = IDENTITY2
    while k:
        if k & 1:
            result = mat2_mul(result, m)
        m = mat2_mul(m, m)
        k >>= 1
    return result


def gamma_membership(m, ell):
    """``det m = 1`` and ``m ≡ I (mod ell)``.
    """
    (a, b), (c, d) = mat2(m)
    if a * d - b * c != 1:
        return False
    return (a - 1) % ell == 0 and (d - 1) % ell == 0 and b % ell == 0 and c % ell == 0


def reduce_word(word):
    """Free reduction of a word given as ``(letter, exponent)`` pairs.
    """
    result = []
    for letter, exponent in word:
        if not exponent:
            continue
        if result and result[-1][0] == letter:
            merged = result[-1][1] + exponent
            result.pop()
            if merged:
                result.append((letter, merged))
        else:
            result.append((letter, exponent))
    return result


def word_matrix(word, sign=1):
    result = IDENTITY2 if sign > 0 else MINUS_IDENTITY
    for letter, exponent in word:
        result = mat2_mul(result, mat2_pow(_LETTERS[letter], exponent))
    return result


def _nearest(fraction):
    return int(round(fraction))


def gamma2_decompose(m, max_letters=10 ** 4):
    """Writes ``m`` in Γ(2) as ``sign * word`` with ``word`` a reduced list of
    ``(letter, exponent)`` pairs in ``A`` and ``B``.

    Returns ``None`` when the word would pass ``max_letters``.

    :raises HurwitzLabValidationError: when ``m`` is not in Γ(2).
    """
    m = mat2(m)
    if not gamma_membership(m, 2):
        raise HurwitzLabValidationError('{0} is not in Γ(2)'.format(m))
    steps = []
    letters = 0
    (a, b), (c, d) = m
    while c:
        if abs(a) > abs(c):
            k = -_nearest(Fraction(a, 2 * c))
            a, b = a + 2 * k * c, b + 2 * k * d
            steps.append(('A', k))
        else:
            k = -_nearest(Fraction(c, 2 * a))
            c, d = c + 2 * k * a, d + 2 * k * b
            steps.append(('B', k))
        letters += abs(k)
        if letters > max_letters:
            return None
    sign = a
    tail = ('A', (b * a) // 2)
    word = reduce_word([(letter, -k) for letter, k in steps] + [tail])
    return sign, word


class _ParityUnionFind(object):
    """Union-find where every vertex carries a parity relative to its class root.
    """

    def __init__(self):
        self.parent = {}
        self.parity = {}

    def add(self, v):
        self.parent.setdefault(v, v)
        self.parity.setdefault(v, 0)

    def find(self, v):
        path = []
        while self.parent[v] != v:
            path.append(v)
            v = self.parent[v]
        root = v
        total = 0
        for node in reversed(path):
            total ^= self.parity[node]
            self.parity[node] = total
            self.parent[node] = root
        return root

    def parity_of(self, v):
        self.find(v)
        return self.parity[v]

    def union(self, x, y, d):
        """Imposes ``parity(x) + parity(y) = d``; returns False on a contradiction.
        """
        rx, ry = self.find(x), self.find(y)
        px, py = self.parity[x], self.parity[y]
        if rx == ry:
            return (px ^ py) == d
        self.parent[ry] = rx
        self.parity[ry] = px ^ py ^ d
        return True


def _fold(paths):
    """Stallings folding of closed paths at vertex 0 carrying ``Z/2`` voltages.

    :param paths: ``(sign_bit, word)`` pairs.
    :returns: ``(single_vertex, letters_at_base, odd_cycle)``.
    """
    uf = _ParityUnionFind()
    uf.add(0)
    edges = []
    odd_cycle = False
    counter = 1
    for sign_bit, word in paths:
        units = [(letter, 1 if e > 0 else -1) for letter, e in word for _ in range(abs(e))]
        if not units:
            odd_cycle = odd_cycle or bool(sign_bit)
            continue
        current = 0
        for position, (letter, direction) in enumerate(units):
            if position == len(units) - 1:
                nxt = 0
            else:
                nxt = counter
                uf.add(nxt)
                counter += 1
            z = sign_bit if position == 0 else 0
            if direction > 0:
                edges.append((current, letter, nxt, z))
            else:
                edges.append((nxt, letter, current, z))
            current = nxt

    changed = True
    while changed:
        changed = False
        seen_out = {}
        seen_in = {}
        kept = []
        for edge in edges:
            u, letter, w, z = edge
            ru, rw = uf.find(u), uf.find(w)
            out_key = (ru, letter)
            in_key = (rw, letter)
            if out_key in seen_out:
                u2, _, w2, z2 = seen_out[out_key]
                d = z ^ z2 ^ uf.parity_of(u) ^ uf.parity_of(u2)
                if not uf.union(w, w2, d):
                    odd_cycle = True
                changed = True
                continue
            if in_key in seen_in:
                u2, _, w2, z2 = seen_in[in_key]
                d = z ^ z2 ^ uf.parity_of(w) ^ uf.parity_of(w2)
                if not uf.union(u, u2, d):
                    odd_cycle = True
                changed = True
                continue
            seen_out[out_key] = edge
            seen_in[in_key] = edge
            kept.append(edge)
        edges = kept

    base = uf.find(0)
    single = all(uf.find(u) == base and uf.find(w) == base for u, _, w, _ in edges)
    letters = {letter for u, letter, w, _ in edges if uf.find(u) == base}
    return single, letters, odd_cycle


class Gamma2Certificate(object):
    """Outcome of :func:`gamma2_generation_certificate`.

    ``generates`` is True, False, or None when a decomposition passed the letter cap.
    ``witnesses`` maps ``'A'``, ``'B'`` and ``'-I'`` to words in the generators as
    ``(index, ±1)`` pairs, verified by multiplication, or None when the bounded search missed.
    """

    def __init__(self, generates, decompositions, witnesses, reason):
        self.generates = generates
        self.decompositions = decompositions
        self.witnesses = witnesses
        self.reason = reason

    def __repr__(self):
        return '<Gamma2Certificate generates={0!r}>'.format(self.generates)

    def __bool__(self):
        return bool(self.generates)

    def to_dict(self):
        return {
            'generates': self.generates,
            'reason': self.reason,
            'decompositions': [
                None if dec is None else {'sign': dec[0], 'word': [list(p) for p in dec[1]]}
                for dec in self.decompositions
            ],
            'witnesses': {
                k: None if v is None else [list(p) for p in v]
                for k, v in self.witnesses.items()
            },
        }


def _witness_words(gens, max_length):
    targets = {'A': GAMMA2_A, 'B': GAMMA2_B, '-I': MINUS_IDENTITY}
    found = {}
    steps = [(i, 1) for i in range(len(gens))] + [(i, -1) for i in range(len(gens))]
    step_matrices = [gens[i] if e > 0 else mat2_inv(gens[i]) for i, e in steps]
    seen = {IDENTITY2: ()}
    queue = deque([IDENTITY2])
    while queue and len(found) < len(targets):
        current = queue.popleft()
        word = seen[current]
        if len(word) >= max_length:
            continue
        for step, matrix in zip(steps, step_matrices):
            image = mat2_mul(current, matrix)
            if image in seen:
                continue
            seen[image] = word + (step,)
            queue.append(image)
            for name, target in targets.items():
                if name not in found and image == target:
                    found[name] = seen[image]
    result = {}
    for name, target in targets.items():
        word = found.get(name)
        if word is not None:
            check = IDENTITY2
            for i, e in word:
                check = mat2_mul(check, gens[i] if e > 0 else mat2_inv(gens[i]))
            if check != target:
                word = None
        result[name] = word
    return result


def gamma2_generation_certificate(gens, max_letters=10 ** 4, witness_length=6):
    """Decides whether ``gens`` generate Γ(2).

    :raises HurwitzLabValidationError: when a generator is not in Γ(2).
    """
    gens = [mat2(g) for g in gens]
    decompositions = [gamma2_decompose(g, max_letters=max_letters) for g in gens]
    witnesses = _witness_words(gens, witness_length)
    if any(dec is None for dec in decompositions):
        return Gamma2Certificate(None, decompositions, witnesses, 'letter cap exceeded')

    paths = [(0 if sign > 0 else 1, word) for sign, word in decompositions]
    single, letters, odd_cycle = _fold(paths)
    logger.debug('folded graph: single vertex %s, letters %s, -I reached %s',
                 single, sorted(letters), odd_cycle)
    if not (single and letters >= {'A', 'B'}):
        reason = 'image in Γ(2)/{±I} is a proper subgroup'
        return Gamma2Certificate(False, decompositions, witnesses, reason)
    if not odd_cycle:
        return Gamma2Certificate(False, decompositions, witnesses, '-I is not generated')
    return Gamma2Certificate(True, decompositions, witnesses, 'folded to the rose with -I')

"""Translation parts, the c-invariant splitting, projection to the finite quotient and the
Γ(ℓ) transporters between reflection factorizations of a Coxeter transformation.

Elements of an elliptic Weyl group act on ``V_f ⊕ R`` as ``v -> w v + τ(v)``; a reflection in
``γ + r`` with ``r`` in the radical has ``τ(v) = -(γ|v) r``. Products compose as
``(w1, τ1)(w2, τ2) = (w1 w2, τ1 ∘ w2 + τ2)``.
"""
import itertools
import logging
from collections import namedtuple
from fractions import Fraction

from sympy import Matrix

from .congruence import gamma_membership
from .exceptions import (
    FiberMismatchError, HurwitzLabError, NonIntegralTransporterError, NotStabilizingError,
    NotTranslationError, SplittingError,
)
from .hurwitz import apply_braid_word
from .lattice import (
    RationalSystem, bilinear, canonical_root, from_sympy, identity, mat_mul, mat_vec,
    orthogonal_inverse,
)
from .rootsys import bourbaki_coordinates, canonical_word, coxeter_transformation
from .weyl import ReflectionTuple, enumerate_fac, is_generating, product

__all__ = [
    'BOURBAKI_SPLITTING_VECTORS', 'TranslationPart', 'InvariantSplitting', 'translation_part',
    'invariant_splitting', 'fixed_space_basis', 'project_tuple', 'canonical_tuple',
    'fiber_transporter', 'lift_transporter', 'braid_matrix', 'radical_restriction',
    'lift_coefficients', 'lift_factorizations', 'certify_no_short_factorization',
    'non_generating_example',
]

logger = logging.getLogger(__name__)

_F = Fraction

# c_a and c_b in the Bourbaki bases of the finite parts, as tabulated for the canonical c.
BOURBAKI_SPLITTING_VECTORS = {
    'D4': (
        tuple(_F(x, 2) for x in (0, -1, 1, 0)),
        tuple(_F(x, 2) for x in (1, 1, 0, 0)),
    ),
    'E6': (
        tuple(_F(x, 6) for x in (1, 3, -3, 1, -1, 1)),
        tuple(_F(x, 3) for x in (0, 0, 1, 1, 1, 1)),
    ),
    'E7': (
        tuple(_F(x, 8) for x in (1, 3, -5, 1, -1, -3, 1)),
        tuple(_F(x, 4) for x in (0, 0, 1, 1, 1, 1, 2)),
    ),
    'E8': (
        tuple(_F(x, 12) for x in (1, 5, -7, 3, 1, -1, -3, 5)),
        tuple(_F(x, 6) for x in (0, 0, 1, 1, 1, 1, 1, 5)),
    ),
}


class TranslationPart(namedtuple('TranslationPart', ['mu_a', 'mu_b'])):
    """Linear forms with ``w(v) = v - mu_a(v) a - mu_b(v) b``, stored by their values on the
    simple roots.
    """
    __slots__ = ()

    def __add__(self, other):
        return TranslationPart(
            tuple(x + y for x, y in zip(self.mu_a, other.mu_a)),
            tuple(x + y for x, y in zip(self.mu_b, other.mu_b)),
        )

    def is_zero(self):
        return not any(self.mu_a) and not any(self.mu_b)


def translation_part(w, sys):
    """:raises NotTranslationError: when ``w`` is not the identity on the finite quotient.
    """
    n = sys.rank
    for i in range(n):
        for j in range(n + 2):
            if w[i][j] != (1 if i == j else 0):
                raise NotTranslationError('Element moves the finite quotient')
    if w[n][n:] != (1, 0) or w[n + 1][n:] != (0, 1):
        raise NotTranslationError('Element does not fix the radical')
    return TranslationPart(tuple(-x for x in w[n][:n]), tuple(-x for x in w[n + 1][:n]))


class InvariantSplitting(object):
    """``V = V(c) ⊕ R`` for the canonical Coxeter transformation.

    ``c_a`` and ``c_b`` are row vectors over the simple roots; ``M`` is the change of basis with
    rows ``(I, 0, 0)``, ``(c_a, 1, 0)``, ``(c_b, 0, 1)``. The ``*_bourbaki`` vectors are the same
    forms in the Bourbaki basis.
    """

    def __init__(self, sys, w, d_a, d_b, c_a, c_b):
        self.sys = sys
        self.w = w
        self.d_a = d_a
        self.d_b = d_b
        self.c_a = c_a
        self.c_b = c_b
        self.radical_rows_match = None
        n = sys.rank
        self.M = tuple(
            tuple(_F(1 if i == j else 0) for j in range(n)) + (_F(0), _F(0)) for i in range(n)
        ) + (tuple(c_a) + (_F(1), _F(0)), tuple(c_b) + (_F(0), _F(1)))
        p_inverse = from_sympy(Matrix(bourbaki_coordinates(sys.type_tag)).inv())
        self.c_a_bourbaki = _row_times(c_a, p_inverse)
        self.c_b_bourbaki = _row_times(c_b, p_inverse)

    def conjugated(self):
        """``M c M^-1``.
        """
        n = self.sys.rank
        m_inverse = tuple(
            tuple(-x if i >= n and j < n else x for j, x in enumerate(row))
            for i, row in enumerate(self.M)
        )
        return mat_mul(mat_mul(self.M, coxeter_transformation(self.sys)), m_inverse)

    def is_block_diagonal(self):
        n = self.sys.rank
        conj = self.conjugated()
        lower = all(conj[i][j] == 0 for i in (n, n + 1) for j in range(n))
        upper = all(conj[i][j] == 0 for i in range(n) for j in (n, n + 1))
        radical = (conj[n][n], conj[n][n + 1], conj[n + 1][n], conj[n + 1][n + 1]) == (1, 0, 0, 1)
        return lower and upper and radical

    def matches_table(self):
        expected = BOURBAKI_SPLITTING_VECTORS.get(self.sys.type_tag)
        return expected == (self.c_a_bourbaki, self.c_b_bourbaki)

    def to_dict(self):
        def text(vec):
            return [str(x) for x in vec]
        return {
            'type': self.sys.type_tag,
            'ell': self.sys.ell,
            'd_a': list(self.d_a),
            'd_b': list(self.d_b),
            'radical_rows_match': self.radical_rows_match,
            'c_a': text(self.c_a),
            'c_b': text(self.c_b),
            'c_a_bourbaki': text(self.c_a_bourbaki),
            'c_b_bourbaki': text(self.c_b_bourbaki),
            'block_diagonal': self.is_block_diagonal(),
            'matches_table': self.matches_table(),
            'fixed_space_basis': [text(v) for v in fixed_space_basis(self)],
        }


def _row_times(row, m):
    return tuple(sum((row[i] * m[i][j] for i in range(len(row))), _F(0)) for j in range(len(m[0])))


def invariant_splitting(sys):
    """:raises SplittingError: when the sums do not satisfy ``c_x w - c_x + d_x = 0``.
    """
    n, ell = sys.rank, sys.ell
    c = coxeter_transformation(sys)
    w = tuple(row[:n] for row in c[:n])
    d_a = tuple(c[n][:n])
    d_b = tuple(c[n + 1][:n])
    finite = sys.finite_part
    expected_a = tuple(-bilinear(finite.gram, sys.alpha_t[:n], s) for s in finite.simple_roots)
    expected_b = tuple(bilinear(finite.gram, finite.highest_root, s) for s in finite.simple_roots)
    radical_rows_match = (d_a, d_b) == (expected_a, expected_b)
    if not radical_rows_match:
        logger.warning('%s: radical rows of c differ from (-αt|-) and (α̃|-)', sys.type_tag)

    def average(d):
        total = [_F(0)] * n
        power = d
        for k in range(ell):
            total = [x + (k + 1) * y for x, y in zip(total, power)]
            power = _row_times(power, w)
        return tuple(-x / ell for x in total)

    c_a, c_b = average(d_a), average(d_b)
    for c_x, d_x in ((c_a, d_a), (c_b, d_b)):
        residue = [x - y + z for x, y, z in zip(_row_times(c_x, w), c_x, d_x)]
        if any(residue):
            raise SplittingError('c_x w - c_x + d_x = {0}'.format(residue))
    splitting = InvariantSplitting(sys, w, d_a, d_b, c_a, c_b)
    splitting.radical_rows_match = radical_rows_match
    if not splitting.is_block_diagonal():
        raise SplittingError('M c M^-1 is not block diagonal')
    logger.debug('%s splitting: c_a=%s c_b=%s', sys.type_tag, c_a, c_b)
    return splitting


def fixed_space_basis(splitting):
    """Basis ``αj + c_a(αj) a + c_b(αj) b`` of ``V(c)``.
    """
    sys = splitting.sys
    n = sys.rank
    return tuple(
        tuple(_F(1 if i == j else 0) for i in range(n)) + (splitting.c_a[j], splitting.c_b[j])
        for j in range(n)
    )


def canonical_tuple(sys):
    return ReflectionTuple(canonical_word(sys), sys)


def project_tuple(t):
    """Entrywise finite part of an elliptic tuple, over the finite root system.
    """
    sys = t.ambient
    return ReflectionTuple([sys.finite(r) for r in t.entries], sys.finite_part)


def radical_restriction(phi, n):
    """2x2 matrix whose rows hold the ``(a, b)`` coordinates of ``φ(a)`` and ``φ(b)``.
    """
    return (phi[n][n], phi[n + 1][n]), (phi[n][n + 1], phi[n + 1][n + 1])


def lift_transporter(t1, t2):
    """The automorphism ``φ`` with ``φ(β_i) = β_i'``, as an integer matrix.

    :raises FiberMismatchError: when the tuples differ in projection or product.
    :raises NonIntegralTransporterError: when the roots of ``t1`` are dependent or ``φ`` is not
        integral, which happens for non-generating input.
    """
    sys = t1.ambient
    if t2.ambient is not sys or len(t1) != len(t2):
        raise FiberMismatchError('Tuples live over different systems or lengths')
    if project_tuple(t1) != project_tuple(t2):
        raise FiberMismatchError('Tuples project to different finite tuples')
    if len(t1) != sys.dim:
        raise NonIntegralTransporterError(
            'Transporter needs {0} roots, got {1}'.format(sys.dim, len(t1)))
    c = product(t1)
    if product(t2) != c:
        raise FiberMismatchError('Tuples have different products')

    source = Matrix(t1.entries).T
    if source.det() == 0:
        raise NonIntegralTransporterError('Roots of the first tuple are linearly dependent')
    phi = from_sympy(Matrix(t2.entries).T * source.inv())
    if any(isinstance(x, Fraction) for row in phi for x in row):
        raise NonIntegralTransporterError('Transporter is not integral')

    if mat_mul(phi, c) != mat_mul(c, phi):
        raise HurwitzLabError('Transporter does not commute with the product')
    n = sys.rank
    if any(phi[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n + 2)):
        raise HurwitzLabError('Transporter moves the finite quotient')
    return phi


def fiber_transporter(t1, t2):
    """Restriction to ``R`` of the transporter between two tuples in one fiber.

    The result lies in Γ(ℓ) for generating factorizations of a Coxeter transformation.
    """
    phi = lift_transporter(t1, t2)
    restriction = radical_restriction(phi, t1.ambient.rank)
    if not gamma_membership(restriction, t1.ambient.ell):
        logger.warning('transporter %s is outside Γ(%d)', restriction, t1.ambient.ell)
    return restriction


def braid_matrix(t, w):
    """``a_t(w)``: the transporter from ``t`` to its image under the braid word ``w``.

    :raises NotStabilizingError: when ``w`` changes the projected tuple.
    """
    image = apply_braid_word(t, w)
    if project_tuple(image) != project_tuple(t):
        raise NotStabilizingError('Braid does not stabilize the projected tuple')
    return fiber_transporter(t, image)


def _window_points(particular, kernel, K):
    """Integer points ``particular + Σ s_i kernel_i`` in ``[-K, K]^m``.

    Each kernel vector is 1 at its own free coordinate, where the particular solution and the
    other kernel vectors vanish, so ``s_i`` itself ranges over ``[-K, K]``. With ``K = None``
    the solution must be unique and is yielded when integral.
    """
    if K is None:
        if kernel:
            raise HurwitzLabError('Lift is not unique; pass a window K')
        if all(x.denominator == 1 for x in particular):
            yield tuple(int(x) for x in particular)
        return
    shifts = range(-K, K + 1)
    for params in itertools.product(shifts, repeat=len(kernel)):
        point = list(particular)
        for s, vec in zip(params, kernel):
            if s:
                point = [x + s * y for x, y in zip(point, vec)]
        if all(x.denominator == 1 and abs(x) <= K for x in point):
            yield tuple(int(x) for x in point)


def lift_coefficients(sys, finite_roots, target=None, K=None):
    """Radical coefficients ``(xs, ys)`` of the lifts ``γ_j + x_j a + y_j b`` of a finite
    factorization of ``c̄`` whose product is ``target`` (the canonical ``c`` by default).

    The ``a`` and ``b`` coefficients are independent, so every pair from the two lists gives a
    lift. Both lists are empty when no integral lift exists.

    :param finite_roots: Roots of the finite part, in factorization order.
    :param K: Window on ``|x_j|, |y_j|``; ``None`` asks for the unique lift.
    :raises HurwitzLabError: when ``K`` is ``None`` and the lift is not unique.
    """
    n = sys.rank
    target = target or coxeter_transformation(sys)
    finite = sys.finite_part
    finite_roots = [canonical_root(tuple(r)) for r in finite_roots]
    m = len(finite_roots)

    # u_j = w_{>j}^{-1} γ_j, w_{>j} the product of the later finite reflections
    tail = identity(n)
    u = [None] * m
    for j in range(m - 1, -1, -1):
        u[j] = mat_vec(orthogonal_inverse(finite.gram, tail), finite_roots[j])
        tail = mat_mul(finite.reflection(finite_roots[j]), tail)

    system = RationalSystem(
        [[bilinear(finite.gram, u[j], s) for j in range(m)] for s in finite.simple_roots])
    solutions = []
    for radical_row in (n, n + 1):
        particular = system.solve([-target[radical_row][k] for k in range(n)])
        if particular is None:
            return [], []
        points = list(_window_points(particular, system.kernel, K))
        if not points:
            return [], []
        solutions.append(points)
    return solutions[0], solutions[1]


def lift_factorizations(sys, finite_roots, target=None, K=None):
    """Radical lifts ``γ_j + x_j a + y_j b`` of a finite factorization of ``c̄`` whose product
    is ``target`` (the canonical ``c`` by default).

    Yields elliptic root tuples. With ``K = None`` only the unique lift of a factorization with
    independent ``u_j`` is produced; otherwise lifts are limited to ``|x_j|, |y_j| <= K``.
    """
    finite_roots = [canonical_root(tuple(r)) for r in finite_roots]
    xs_points, ys_points = lift_coefficients(sys, finite_roots, target=target, K=K)
    for xs in xs_points:
        for ys in ys_points:
            yield tuple(
                sys.embed(gamma, x, y) for gamma, x, y in zip(finite_roots, xs, ys)
            )


def certify_no_short_factorization(sys, length=None, K=None):
    """Checks that ``c`` has no factorization into ``length`` reflections (default: the rank).

    Every finite factorization of ``c̄`` of that length is lifted by solving for the radical
    coefficients, so with ``K = None`` no window is involved. A window ``K`` restricts the lifts
    to ``|x_j|, |y_j| <= K`` instead.
    Only feasible where the finite factorizations can be enumerated.

    :returns: ``(certified, finite_count, lifted)`` with ``lifted`` the integral lifts found.
    """
    length = sys.rank if length is None else length
    finite = sys.finite_part
    c = coxeter_transformation(sys)
    c_bar = tuple(row[:sys.rank] for row in c[:sys.rank])
    finite_count = 0
    lifted = []
    for t in enumerate_fac(c_bar, finite, length):
        finite_count += 1
        lifted.extend(lift_factorizations(sys, t.entries, K=K))
    logger.info('%s: %d finite factorizations of length %d, %d integral lifts',
                sys.type_tag, finite_count, length, len(lifted))
    return not lifted, finite_count, lifted


def non_generating_example(sys):
    """The E6 tuple ``(β1, β2, β3, β5, β6, β7, β4, β8)`` with its checks.

    Reports whether the product equals ``c``, whether the finite projections multiply to ``c̄``,
    and the index of the span of the roots in the root lattice.
    """
    if sys.type_tag != 'E6':
        raise HurwitzLabError('The example lives in E6')
    n = sys.rank
    unit = sys.finite_part.simple_roots
    highest = sys.finite_part.highest_root
    betas = {
        1: sys.embed(unit[0], 0, -1),
        2: sys.embed(unit[1], 0, 2),
        3: sys.embed(unit[2], 0, 2),
        4: sys.embed(unit[3], 0, -3),
        5: sys.embed(unit[4], 0, 2),
        6: sys.embed(unit[5], 0, -1),
        7: sys.embed(highest, -1, 1),
        8: sys.embed(unit[3], 0, 1),
    }
    order = (1, 2, 3, 5, 6, 7, 4, 8)
    t = ReflectionTuple([betas[i] for i in order], sys)
    c = coxeter_transformation(sys)
    prod = product(t)
    projected = product(project_tuple(t))
    index = abs(Matrix(t.entries).det())
    return {
        'tuple': t,
        'product_is_c': prod == c,
        'projection_is_c_bar': projected == tuple(row[:n] for row in c[:n]),
        'generating': is_generating(t),
        'index': int(index),
    }

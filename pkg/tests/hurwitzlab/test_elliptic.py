import random
from fractions import Fraction

import pytest

from hurwitzlab.elliptic import (
    TranslationPart, braid_matrix, canonical_tuple, certify_no_short_factorization,
    fiber_transporter, fixed_space_basis, invariant_splitting, lift_coefficients,
    lift_factorizations, lift_transporter, non_generating_example, project_tuple,
    radical_restriction, translation_part,
)
from hurwitzlab.exceptions import (
    FiberMismatchError, HurwitzLabError, NotStabilizingError, NotTranslationError,
)
from hurwitzlab.hurwitz import apply_braid_word
from hurwitzlab.lattice import identity, kernel_dimension, mat_mul, mat_sub
from hurwitzlab.rootsys import ELLIPTIC_TYPES, build_elliptic, coxeter_transformation
from hurwitzlab.weyl import ReflectionTuple, enumerate_fac, is_generating, product


def _translation(sys, root, la, lb):
    return mat_mul(sys.reflection(sys.embed(root)), sys.reflection(sys.embed(root, la, lb)))


def test_translation_part_of_a_reflection_pair():
    sys = build_elliptic("D4")
    alpha = (1, 0, 0, 0)
    assert translation_part(_translation(sys, alpha, 1, 0), sys) == ((2, -1, 0, 0), (0, 0, 0, 0))
    assert translation_part(_translation(sys, alpha, 0, 1), sys) == ((0, 0, 0, 0), (2, -1, 0, 0))


def test_translation_parts_add_up():
    sys = build_elliptic("D4")
    u = _translation(sys, (1, 0, 0, 0), 1, 0)
    v = _translation(sys, (0, 1, 0, 0), 0, 1)
    both = translation_part(u, sys) + translation_part(v, sys)
    assert translation_part(mat_mul(u, v), sys) == both
    assert isinstance(both, TranslationPart)
    assert translation_part(identity(6), sys).is_zero()


def test_translation_part_of_a_reflection_raises():
    sys = build_elliptic("D4")
    with pytest.raises(NotTranslationError):
        translation_part(sys.reflection(sys.unit(0)), sys)


def test_d4_splitting_vectors():
    splitting = invariant_splitting(build_elliptic("D4"))
    half = Fraction(1, 2)
    assert splitting.c_a == (half, -1, half, half)
    assert splitting.c_b == (0, half, 0, 0)
    assert splitting.c_a_bourbaki == (0, -half, half, 0)
    assert splitting.c_b_bourbaki == (half, half, 0, 0)
    assert splitting.radical_rows_match is True
    assert splitting.matches_table()


@pytest.mark.parametrize("tag", ELLIPTIC_TYPES)
def test_splitting_block_diagonalizes_c(tag):
    sys = build_elliptic(tag)
    splitting = invariant_splitting(sys)
    assert splitting.is_block_diagonal()
    data = splitting.to_dict()
    assert data["type"] == tag
    assert data["ell"] == sys.ell
    assert len(data["fixed_space_basis"]) == sys.rank


def test_fixed_space_basis_has_finite_unit_part():
    splitting = invariant_splitting(build_elliptic("D4"))
    basis = fixed_space_basis(splitting)
    assert basis[1] == (0, 1, 0, 0, -1, Fraction(1, 2))


def test_projection_of_the_canonical_d4_tuple_multiplies_to_minus_one():
    sys = build_elliptic("D4")
    t = canonical_tuple(sys)
    assert product(t) == coxeter_transformation(sys)
    projected = project_tuple(t)
    assert projected.ambient is sys.finite_part
    minus_one = tuple(tuple(-x for x in row) for row in identity(4))
    assert product(projected) == minus_one


def test_transporter_of_a_tuple_to_itself_is_the_identity():
    t = canonical_tuple(build_elliptic("D4"))
    assert lift_transporter(t, t) == identity(6)
    assert fiber_transporter(t, t) == ((1, 0), (0, 1))


def test_sigma5_on_d4_gives_the_printed_matrix():
    sys = build_elliptic("D4")
    t = canonical_tuple(sys)
    image = apply_braid_word(t, [5])
    assert image.entries[4] == (0, 1, 0, 0, -1, 0)
    assert image.entries[5] == (0, 1, 0, 0, 0, 0)
    phi = lift_transporter(t, image)
    assert radical_restriction(phi, 4) == ((1, 0), (-2, 1))
    assert braid_matrix(t, [5]) == ((1, 0), (-2, 1))


def test_full_twist_acts_as_minus_identity_on_d4():
    t = canonical_tuple(build_elliptic("D4"))
    assert braid_matrix(t, [1, 2, 3, 4, 5] * 6) == ((-1, 0), (0, -1))


def test_non_stabilizing_braid():
    t = canonical_tuple(build_elliptic("D4"))
    with pytest.raises(NotStabilizingError):
        braid_matrix(t, [1])
    with pytest.raises(FiberMismatchError):
        lift_transporter(t, apply_braid_word(t, [1]))


def test_lifts_of_the_projected_canonical_tuple_contain_it():
    sys = build_elliptic("D4")
    t = canonical_tuple(sys)
    lifts = set(lift_factorizations(sys, project_tuple(t).entries, K=1))
    assert t.entries in lifts
    for roots in lifts:
        assert all(max(abs(r[4]), abs(r[5])) <= 1 for r in roots)


def test_ambiguous_lift_needs_a_window():
    sys = build_elliptic("D4")
    t = canonical_tuple(sys)
    with pytest.raises(HurwitzLabError) as e:
        list(lift_factorizations(sys, project_tuple(t).entries))

    assert str(e.value) == "Lift is not unique; pass a window K"


def test_no_factorization_of_c_into_rank_many_reflections_on_d4():
    certified, finite_count, lifted = certify_no_short_factorization(build_elliptic("D4"))
    assert certified is True
    assert finite_count > 0
    assert lifted == []


def test_non_generating_e6_example():
    example = non_generating_example(build_elliptic("E6"))
    assert example["generating"] is False
    assert example["index"] == 4
    assert len(example["tuple"]) == 8


def test_non_generating_example_only_exists_for_e6():
    with pytest.raises(HurwitzLabError):
        non_generating_example(build_elliptic("D4"))


def _random_word(rng, strands, length):
    return [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]


def test_unique_lift_without_a_window():
    sys = build_elliptic("D4")
    t = canonical_tuple(sys)
    prefix = ReflectionTuple(t.entries[:4], sys)
    finite_roots = project_tuple(prefix).entries
    xs, ys = lift_coefficients(sys, finite_roots, target=product(prefix))
    assert len(xs) == len(ys) == 1
    lifts = list(lift_factorizations(sys, finite_roots, target=product(prefix)))
    assert lifts == [t.entries[:4]]


def test_reduced_factorizations_of_c_bar_lift_at_most_once():
    sys = build_elliptic("D4")
    c = coxeter_transformation(sys)
    c_bar = tuple(row[:4] for row in c[:4])
    for f in enumerate_fac(c_bar, sys.finite_part, 4):
        xs, ys = lift_coefficients(sys, f.entries)
        assert len(xs) <= 1
        assert len(ys) <= 1


def test_windowed_and_exact_certificates_agree_on_d4():
    sys = build_elliptic("D4")
    certified, finite_count, _ = certify_no_short_factorization(sys)
    windowed, windowed_count, _ = certify_no_short_factorization(sys, K=2)
    assert certified is windowed is True
    assert finite_count == windowed_count


@pytest.mark.parametrize("tag", ELLIPTIC_TYPES)
def test_coxeter_transformation_has_no_fixed_points_modulo_the_radical(tag):
    sys = build_elliptic(tag)
    n = sys.rank
    c_bar = tuple(row[:n] for row in coxeter_transformation(sys)[:n])
    assert kernel_dimension(mat_sub(c_bar, identity(n))) == 0


def test_projection_commutes_with_the_braid_action():
    rng = random.Random(17)
    t = canonical_tuple(build_elliptic("D4"))
    for _ in range(20):
        word = _random_word(rng, len(t), 12)
        assert project_tuple(apply_braid_word(t, word)) == apply_braid_word(project_tuple(t), word)


def test_generation_is_a_hurwitz_invariant():
    rng = random.Random(23)
    generating = canonical_tuple(build_elliptic("D4"))
    non_generating = non_generating_example(build_elliptic("E6"))["tuple"]
    assert is_generating(generating) is True
    assert is_generating(non_generating) is False
    for _ in range(10):
        word = _random_word(rng, len(generating), 15)
        assert is_generating(apply_braid_word(generating, word)) is True
        word = _random_word(rng, len(non_generating), 15)
        assert is_generating(apply_braid_word(non_generating, word)) is False


def test_non_generating_example_is_not_a_factorization_of_c():
    example = non_generating_example(build_elliptic("E6"))
    assert example["product_is_c"] is False

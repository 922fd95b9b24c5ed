import itertools
import random

import pytest

from hurwitzlab.exceptions import BraidIndexError, HurwitzLabError
from hurwitzlab.hurwitz import (
    BraidWord, apply_braid_word, classify_orbits, f4_example, hurwitz_move, hurwitz_orbit,
    lr_duplicate_form, multiset_invariant, orbit_classification_sweep, square_conjugation_braid,
)
from hurwitzlab.rootsys import build_finite
from hurwitzlab.weyl import ReflectionTuple, coxeter_element, product, reflection_conjugacy_classes


def _simple_tuple(tag):
    sys = build_finite(tag)
    return ReflectionTuple(sys.simple_roots, sys)


def test_braid_word_rejects_zero():
    with pytest.raises(BraidIndexError) as e:
        BraidWord([1, 0])

    assert str(e.value) == "Braid letters must be nonzero"


def test_braid_word_inverse_and_concatenation():
    w = BraidWord([1, -2, 3])
    assert w.inverse() == (-3, 2, -1)
    assert isinstance(w + [4], BraidWord)
    assert w + [4] == (1, -2, 3, 4)
    assert w * 2 == (1, -2, 3, 1, -2, 3)
    assert BraidWord([1, -4]).strands() == 5


def test_braid_word_check_range():
    with pytest.raises(BraidIndexError) as e:
        BraidWord([3]).check(3)

    assert str(e.value) == "Letter 3 out of range for a tuple of length 3"


def test_moves_preserve_the_product():
    t = _simple_tuple("A3")
    for i in (1, 2):
        for inverse in (False, True):
            assert product(hurwitz_move(t, i, inverse)) == product(t)


def test_moves_follow_the_braid_table_orientation():
    t = _simple_tuple("A2")
    assert hurwitz_move(t, 1).entries == ((0, 1), (1, 1))
    assert hurwitz_move(t, 1, inverse=True).entries == ((1, 1), (1, 0))
    assert apply_braid_word(t, [1]) == hurwitz_move(t, 1, inverse=True)
    assert apply_braid_word(t, [-1]) == hurwitz_move(t, 1)


def test_braid_word_and_its_inverse_cancel():
    t = _simple_tuple("A3")
    word = BraidWord([1, -2, 2, 1, 2])
    assert apply_braid_word(apply_braid_word(t, word), word.inverse()) == t


def test_move_index_out_of_range():
    with pytest.raises(BraidIndexError):
        hurwitz_move(_simple_tuple("A2"), 2)


@pytest.mark.parametrize("tag,size", [("A2", 3), ("A3", 16), ("D4", 162)])
def test_orbit_of_simple_reflections_is_every_reduced_factorization(tag, size):
    report = hurwitz_orbit(_simple_tuple(tag))
    assert report.orbit_size == size
    assert report.truncated is False
    assert product(report.representative) == coxeter_element(build_finite(tag))


def test_orbit_cap_is_reported_not_raised():
    report = hurwitz_orbit(_simple_tuple("A3"), cap=5)
    assert report.truncated is True
    assert report.orbit_size == 5
    assert report.to_dict()["truncated"] is True


def test_orbit_with_threads_matches_sequential():
    t = _simple_tuple("A3")
    assert hurwitz_orbit(t, threads=3).to_dict() == hurwitz_orbit(t).to_dict()


def test_orbit_cap_must_be_positive():
    with pytest.raises(ValueError):
        hurwitz_orbit(_simple_tuple("A2"), cap=0)


def test_orbit_report_carries_the_class_multiset():
    sys = build_finite("A3")
    report = hurwitz_orbit(_simple_tuple("A3"), classes=reflection_conjugacy_classes(sys))
    assert report.invariant_multiset == (0, 0, 0)
    assert report.to_dict()["invariant_multiset"] == [0, 0, 0]


def test_multiset_invariant_needs_known_roots():
    with pytest.raises(HurwitzLabError):
        multiset_invariant(_simple_tuple("A2"), {})


def test_classify_orbits_of_reduced_factorizations():
    sys = build_finite("A3")
    reports = classify_orbits(coxeter_element(sys), sys, 3)
    assert [r.orbit_size for r in reports] == [16]


def test_square_conjugation_braid_conjugates_the_trailing_pair():
    sys = build_finite("A3")
    t = ReflectionTuple([(1, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 0)], sys)
    word = square_conjugation_braid(t, [1])
    assert word == (-2, -3, 1, 2, 2, 1, 3, 2)
    image = apply_braid_word(t, word)
    assert image.entries == ((1, 0, 0), (0, 0, 1), (1, 1, 0), (1, 1, 0))


def test_square_conjugation_braid_shortest_case():
    sys = build_finite("A2")
    t = ReflectionTuple([(1, 0), (0, 1), (0, 1)], sys)
    assert square_conjugation_braid(t, [1]) == (1, 2, 2, 1)
    assert apply_braid_word(t, [1, 2, 2, 1]).entries == ((1, 0), (1, 1), (1, 1))


def test_square_conjugation_braid_needs_a_repeated_pair():
    with pytest.raises(HurwitzLabError) as e:
        square_conjugation_braid(_simple_tuple("A3"), [1])

    assert str(e.value) == "Tuple must end in a repeated reflection"


def test_lr_duplicate_form():
    sys = build_finite("A2")
    t = ReflectionTuple([(1, 0), (0, 1), (1, 1), (1, 1)], sys)
    form = lr_duplicate_form(t, sys)
    assert form.entries[0] == form.entries[1]
    assert product(form) == product(t)


def test_f4_example():
    example = f4_example()
    assert example["products_equal_w"] is True
    assert example["generating"] == (True, True)
    assert example["multisets"][0] != example["multisets"][1]
    assert example["class_sizes"] == (12, 12)
    assert example["identity_holds"] is True


@pytest.mark.parametrize("tag", ["A2", "A3"])
def test_orbits_match_class_multisets(tag):
    rows = orbit_classification_sweep(build_finite(tag))
    assert rows
    assert all(r["bijective"] for r in rows)


@pytest.mark.slow
def test_orbits_match_class_multisets_for_d4():
    rows = orbit_classification_sweep(build_finite("D4"))
    assert all(r["bijective"] for r in rows)


def _d4_tuple():
    t = _simple_tuple("D4")
    return ReflectionTuple(t.entries + t.entries[:2], t.ambient)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_braid_relation(i):
    t = _d4_tuple()
    assert apply_braid_word(t, [i, i + 1, i]) == apply_braid_word(t, [i + 1, i, i + 1])
    assert apply_braid_word(t, [-i, -i - 1, -i]) == apply_braid_word(t, [-i - 1, -i, -i - 1])


def test_far_letters_commute():
    t = _d4_tuple()
    for i, j in itertools.combinations(range(1, 6), 2):
        if j - i >= 2:
            assert apply_braid_word(t, [i, j]) == apply_braid_word(t, [j, i])
            assert apply_braid_word(t, [i, -j]) == apply_braid_word(t, [-j, i])


@pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
def test_letter_and_its_inverse_cancel(i):
    t = _d4_tuple()
    assert apply_braid_word(t, [i, -i]) == t
    assert apply_braid_word(t, [-i, i]) == t


def test_random_braids_preserve_the_product():
    rng = random.Random(29)
    t = _d4_tuple()
    for _ in range(10):
        word = [rng.choice([1, -1]) * rng.randint(1, 5) for _ in range(20)]
        assert product(apply_braid_word(t, word)) == product(t)

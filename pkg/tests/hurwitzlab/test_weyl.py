import itertools
import random

import pytest

from hurwitzlab.exceptions import CapExceededError, NotOrthogonalError
from hurwitzlab.lattice import identity, mat_mul
from hurwitzlab.rootsys import build_finite
from hurwitzlab.weyl import (
    ReflectionTuple, cayley_reflection_distances, count_fac, coxeter_element, enumerate_fac,
    generates_group, is_generating, product, reflection_conjugacy_classes,
    reflection_length_finite, weyl_group,
)


@pytest.mark.parametrize("tag,order", [("A2", 6), ("A3", 24), ("D4", 192)])
def test_weyl_group_order(tag, order):
    assert weyl_group(build_finite(tag)).order == order


def test_reflection_tuple_stores_canonical_roots():
    sys = build_finite("A2")
    t = ReflectionTuple([(-1, 0), (0, 1)], sys)
    assert t.entries == ((1, 0), (0, 1))
    assert t.to_json() == [[1, 0], [0, 1]]
    assert t == ReflectionTuple([(1, 0), (0, -1)], sys)


def test_empty_product_is_identity():
    sys = build_finite("A3")
    assert product(ReflectionTuple([], sys)) == identity(3)


@pytest.mark.parametrize("tag", ["A2", "A3", "D4", "E6"])
def test_coxeter_element_has_length_rank(tag):
    sys = build_finite(tag)
    assert reflection_length_finite(coxeter_element(sys), sys) == sys.rank
    assert reflection_length_finite(identity(sys.rank), sys) == 0


def test_reflection_length_needs_an_orthogonal_matrix():
    with pytest.raises(NotOrthogonalError) as e:
        reflection_length_finite(((1, 1), (0, 1)), build_finite("A2"))

    assert str(e.value) == "Element does not preserve the form of A2"


def test_generation_by_lattice_and_by_subgroup():
    sys = build_finite("A2")
    simple = ReflectionTuple(sys.simple_roots, sys)
    repeated = ReflectionTuple([(1, 0), (1, 0)], sys)
    assert is_generating(simple)
    assert generates_group(simple)
    assert not is_generating(repeated)
    assert not generates_group(repeated)
    assert not is_generating(ReflectionTuple([], sys))


@pytest.mark.parametrize("tag,count", [("A2", 3), ("A3", 16), ("D4", 162)])
def test_reduced_factorizations_of_coxeter_elements(tag, count):
    sys = build_finite(tag)
    c = coxeter_element(sys)
    assert count_fac(c, sys, sys.rank) == count
    assert count_fac(c, sys, sys.rank, require_generating=True) == count


def test_enumerate_fac_skips_wrong_parity_and_short_lengths():
    sys = build_finite("A3")
    c = coxeter_element(sys)
    assert count_fac(c, sys, 2) == 0
    assert count_fac(c, sys, 4) == 0


def test_enumerate_fac_yields_tuples_with_the_right_product_in_order():
    sys = build_finite("A2")
    c = coxeter_element(sys)
    tuples = list(enumerate_fac(c, sys, 2))
    assert all(product(t) == c for t in tuples)
    group = weyl_group(sys)
    indices = [group.indices_of(t) for t in tuples]
    assert indices == sorted(indices)


def test_enumerate_fac_cap():
    sys = build_finite("A3")
    with pytest.raises(CapExceededError) as e:
        list(enumerate_fac(coxeter_element(sys), sys, 3, cap=5))

    assert e.value.count == 5


def test_reflection_classes():
    assert [len(c) for c in reflection_conjugacy_classes(build_finite("D4"))] == [12]
    assert sorted(len(c) for c in reflection_conjugacy_classes(build_finite("F4"))) == [12, 12]


def test_cayley_distances_match_reflection_length():
    sys = build_finite("A3")
    group = weyl_group(sys)
    dist = cayley_reflection_distances(group)
    assert len(dist) == group.order
    for g, d in dist.items():
        assert d == reflection_length_finite(group.elements[g], sys)


@pytest.mark.parametrize("tag", ["A3", "D4"])
def test_reflection_length_is_subadditive(tag):
    sys = build_finite(tag)
    elements = weyl_group(sys).elements
    rng = random.Random(31)
    for _ in range(50):
        x, y = rng.choice(elements), rng.choice(elements)
        assert (reflection_length_finite(mat_mul(x, y), sys)
                <= reflection_length_finite(x, sys) + reflection_length_finite(y, sys))


@pytest.mark.parametrize("tag", ["A3", "D4"])
def test_products_of_distinct_simple_reflections(tag):
    sys = build_finite(tag)
    for k in range(sys.rank + 1):
        for subset in itertools.combinations(sys.simple_roots, k):
            for order in itertools.permutations(subset):
                w = product(ReflectionTuple(order, sys))
                assert reflection_length_finite(w, sys) == k

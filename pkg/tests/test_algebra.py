import pytest

from app.exceptions import (EnumerationCapExceeded, OverlapError,
                            SchemaMismatch, UnknownVariable, VariableClash)
from app.models import Behaviour, SignalSpace
from app.services import algebra
from app.services.behaviour import full_space
from tests.helpers import rows

A = SignalSpace.of(1, a=(0, 1))
B = SignalSpace.of(1, b=(0, 1, 2))
AB = A.merge(B)


def test_product_of_disjoint_schemas():
    left = rows(A, (0,), (1,))
    right = rows(B, (2,))
    result = algebra.product(left, right)
    assert result.space == AB
    assert result.rows == (((0,), (2,)), ((1,), (2,)))


def test_product_is_commutative_up_to_schema():
    left = rows(A, (1,))
    right = rows(B, (0,), (2,))
    assert algebra.product(left, right) == algebra.product(right, left)


def test_product_with_empty_factor_is_empty():
    assert not algebra.product(rows(A, (0,)), Behaviour.empty(B))


def test_product_rejects_shared_variables():
    with pytest.raises(VariableClash):
        algebra.product(rows(A, (0,)), rows(A, (1,)))


def test_product_cap():
    with pytest.raises(EnumerationCapExceeded):
        algebra.product(full_space(A), full_space(B), cap=5)


def test_set_operations():
    x = rows(A, (0,))
    y = rows(A, (0,), (1,))
    assert algebra.intersect(x, y) == x
    assert algebra.union(x, y) == y
    assert algebra.difference(y, x) == rows(A, (1,))
    assert not algebra.difference(x, y)
    assert algebra.is_subset(x, y)


def test_set_operations_need_equal_schemas():
    with pytest.raises(SchemaMismatch):
        algebra.union(rows(A, (0,)), rows(B, (0,)))


def test_projection():
    behaviour = rows(AB, (0, 0), (0, 1), (1, 1))
    assert algebra.project(behaviour, ["a"]) == rows(A, (0,), (1,))
    assert algebra.project(behaviour, ["b"]) == rows(B, (0,), (1,))
    assert algebra.project(behaviour, ["b", "a"]) == behaviour


def test_projection_on_empty_set_of_variables():
    empty_space = SignalSpace((), 1)
    assert algebra.project(rows(A, (0,)), []).rows == ((),)
    assert algebra.project(Behaviour.empty(A), []) == Behaviour.empty(empty_space)


def test_projection_of_unknown_variable():
    with pytest.raises(UnknownVariable):
        algebra.project(rows(A, (0,)), ["z"])


def test_projection_of_intersection_can_be_strict():
    first = rows(AB, (0, 0))
    second = rows(AB, (0, 1))
    left = algebra.project(algebra.intersect(first, second), ["a"])
    right = algebra.intersect(algebra.project(first, ["a"]), algebra.project(second, ["a"]))
    assert not left
    assert right == rows(A, (0,))


def test_projection_of_difference_can_be_strictly_larger():
    first = rows(AB, (0, 0), (0, 1))
    second = rows(AB, (0, 1))
    left = algebra.project(algebra.difference(first, second), ["a"])
    right = algebra.difference(algebra.project(first, ["a"]), algebra.project(second, ["a"]))
    assert left == rows(A, (0,))
    assert not right
    assert right.issubset(left)


def test_join_on_shared_variable():
    C = SignalSpace.of(1, c=(0, 1))
    left = rows(A.merge(B), (0, 0), (1, 2))
    right = rows(B.merge(C), (0, 1), (2, 0), (1, 1))
    result = algebra.join(left, right)
    assert result.rows == (((0,), (0,), (1,)), ((1,), (2,), (0,)))


def test_join_degenerates_to_product_and_intersection():
    x, y = rows(A, (0,)), rows(B, (1,))
    assert algebra.join(x, y) == algebra.product(x, y)
    assert algebra.join(x, rows(A, (0,), (1,))) == x


def test_join_rejects_alphabet_mismatch():
    other = SignalSpace.of(1, a=(0, 1, 2))
    with pytest.raises(SchemaMismatch):
        algebra.join(rows(A, (0,)), rows(other, (0,)))


def test_is_free():
    behaviour = rows(AB, (0, 0), (1, 0))
    assert algebra.is_free(behaviour, ["a"])
    assert not algebra.is_free(behaviour, ["b"])


def test_is_free_on_empty_variable_set_means_nonempty():
    assert algebra.is_free(rows(A, (0,)), [])
    assert not algebra.is_free(Behaviour.empty(A), [])


def test_is_free_longer_horizon():
    space = SignalSpace.of(2, a=(0, 1))
    assert not algebra.is_free(rows(space, ((0, 0),), ((0, 1),), ((1, 0),)), ["a"])
    assert algebra.is_free(full_space(space), ["a"])


def test_observability():
    function = rows(AB, (0, 0), (1, 1))
    assert algebra.is_observable(function, ["a"], ["b"])
    assert algebra.is_observable(function, ["b"], ["a"])

    shared = rows(AB, (0, 1), (1, 1))
    assert not algebra.is_observable(shared, ["a"], ["b"])
    assert algebra.is_observable(shared, ["b"], ["a"])
    assert algebra.observability_witness(shared, ["a"], ["b"]) == (((1,),), ((0,),), ((1,),))


def test_observability_of_empty_behaviour_holds():
    assert algebra.is_observable(Behaviour.empty(AB), ["a"], ["b"])


def test_observability_needs_disjoint_sets():
    with pytest.raises(OverlapError):
        algebra.is_observable(full_space(AB), ["a"], ["a", "b"])

import pytest

from ksemigroup import (annihilators, categoricity_witness, check_lemma1, complement_subsemigroup,
                        is_categorical_at_zero, is_ideal, nilpotency_degree, semigroup_of_category)
from ksemigroup.k_analysis import PreconditionError, power

import oracles
from conftest import table


def test_null_semigroup_is_k(null2):
    assert is_categorical_at_zero(null2)


def test_a2b_witness_is_aaa(a2b):
    w = categoricity_witness(a2b)
    doc = a2b.to_json()
    first = oracles.k_failures(doc["elements"], oracles.dict_table(doc["elements"], doc["table"]), "0")[0]
    assert w.as_tuple() == first == ("a", "a", "a")


def test_category_semigroup_is_k(arrow):
    assert is_categorical_at_zero(semigroup_of_category(arrow))


def test_annihilators(null2, a2b, semilattice2):
    ann = annihilators(null2)
    assert ann.left == ann.right == ann.quasi == {"0", "a"}
    ann = annihilators(a2b)
    assert ann.left == ann.right == {"0", "b"}
    ann = annihilators(semilattice2)
    assert ann.left == ann.right == {"0"}


def test_annihilators_are_ideals(a2b):
    ann = annihilators(a2b)
    for X in (ann.left, ann.right, ann.quasi):
        assert is_ideal(a2b, X)


def test_annihilators_one_sided():
    # a*b = c, every other product 0
    S = table(["0", "a", "b", "c"], [["0"] * 4, ["0", "0", "c", "0"], ["0"] * 4, ["0"] * 4])
    ann = annihilators(S)
    assert ann.left == {"0", "b", "c"}
    assert ann.right == {"0", "a", "c"}
    assert ann.quasi == set(S.elements)


@pytest.mark.parametrize("fixture, degree", [("trivial", 1), ("null2", 2), ("a2b", 3), ("semilattice2", None)])
def test_nilpotency_degree(request, fixture, degree):
    S = request.getfixturevalue(fixture)
    assert nilpotency_degree(S) == degree
    doc = S.to_json()
    assert oracles.nilpotency(doc["elements"], oracles.dict_table(doc["elements"], doc["table"]), "0") == degree


def test_power(a2b):
    assert power(a2b, a2b.elements, 2) == {"0", "b"}
    assert power(a2b, a2b.elements, 3) == {"0"}


def test_full_quasi_annihilator_iff_3_nilpotent(null2, a2b, semilattice2):
    assert check_lemma1(null2)
    assert check_lemma1(semilattice2)
    # 3-nilpotent yet Ann_q != S: only possible because a2b is not K
    assert not check_lemma1(a2b)


def test_complement_of_null_is_trivial(null2):
    T, emb = complement_subsemigroup(null2)
    assert T.elements == ("0",)
    assert emb == {"0": "0"}


def test_complement_of_category_is_everything(arrow):
    S = semigroup_of_category(arrow)
    T, _ = complement_subsemigroup(S)
    assert T == S


def test_complement_refuses_non_k_input():
    # a*a = b, b*b = b... built so that a product of non-annihilators lands in Ann_q \ {0}
    S = table(["0", "a", "b", "c"],
              [["0", "0", "0", "0"], ["0", "b", "c", "0"], ["0", "c", "0", "0"], ["0", "0", "0", "0"]])
    assert not is_categorical_at_zero(S)
    with pytest.raises(PreconditionError) as err:
        complement_subsemigroup(S)
    assert err.value.witness[:2] in {("a", "b"), ("b", "a"), ("a", "a")}

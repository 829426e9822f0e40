import random

import pytest

from ksemigroup import (MorExtensionSpec, NilpotentSpec, ReesSemigroup, SmallCategory, annihilators,
                        is_categorical_at_zero, mor_extension, nilpotency_degree, nilpotent_from_spec,
                        random_category, rees_semigroup, semigroup_of_category)
from ksemigroup.constructors import CategoryError, SpecError, random_nilpotent_spec, random_sandwich

from conftest import category


# --- categories -------------------------------------------------------------

def test_one_object(one_object):
    S = semigroup_of_category(one_object)
    assert S.elements == ("0", "id")
    assert S.mul("id", "id") == "id"


def test_two_identities(two_identities):
    S = semigroup_of_category(two_identities)
    assert S.order == 3
    assert S.mul("ix", "iy") == S.mul("iy", "ix") == "0"
    assert S.mul("ix", "ix") == "ix"


def test_composition_convention(arrow):
    # f*g is "g then f": defined exactly when dom f == cod g
    S = semigroup_of_category(arrow)
    assert S.mul("iy", "f") == "f"
    assert S.mul("f", "ix") == "f"
    assert S.mul("f", "iy") == "0"
    assert S.mul("ix", "f") == "0"
    assert is_categorical_at_zero(S)


def test_category_validation_catches_problems(arrow):
    broken = SmallCategory(arrow.objects, arrow.morphisms, arrow.identities,
                           {k: v for k, v in arrow.composition.items() if k != ("ix", "f")})
    assert any("missing" in p for p in broken.problems())
    reserved = SmallCategory(("x",), (("0", "x", "x"),), {"x": "0"}, {("0", "0"): "0"})
    with pytest.raises(CategoryError, match="reserved"):
        reserved.validate()
    bad_identity = SmallCategory(("x",), (("e", "x", "x"), ("id", "x", "x")), {"x": "id"},
                                 {("e", "e"): "e", ("id", "id"): "id", ("e", "id"): "id", ("id", "e"): "id"})
    assert any("identity law" in p for p in bad_identity.problems())


def test_category_json_round_trip(split_idempotent):
    doc = split_idempotent.to_json()
    again = SmallCategory.from_json(doc)
    assert again.to_json() == doc


def test_random_category_trivial_case():
    C = random_category(seed=5, object_count=1, max_extra_arrows=0)
    assert C.names == ["id0"]


def test_random_category_is_deterministic():
    assert random_category(11, 3, 4).to_json() == random_category(11, 3, 4).to_json()


@pytest.mark.parametrize("seed", range(40))
def test_random_categories_are_valid(seed):
    C = random_category(seed, object_count=1 + seed % 3, max_extra_arrows=4, max_morphisms=8)
    assert C.problems() == []
    assert len(C.names) <= 8
    assert is_categorical_at_zero(semigroup_of_category(C))


# --- 3-nilpotent ------------------------------------------------------------

def example_spec():
    return NilpotentSpec(("0", "b", "c", "d"), frozenset("0bd"), frozenset("0cd"), {("b", "c"): "d"})


def test_nilpotent_example():
    S = nilpotent_from_spec(example_spec())
    assert S.mul("b", "c") == "d"
    assert sum(1 for x in S.elements for y in S.elements if S.mul(x, y) != "0") == 1
    assert nilpotency_degree(S) == 3
    assert is_categorical_at_zero(S)
    ann = annihilators(S)
    assert ann.left == {"0", "c", "d"} and ann.right == {"0", "b", "d"}


def test_minimal_spec():
    S = nilpotent_from_spec(NilpotentSpec(("0",), frozenset("0"), frozenset("0"), {}))
    assert S.elements == ("0",)


def test_spec_violations_are_listed():
    spec = NilpotentSpec(("0", "b", "c", "d", "e"), frozenset("0bd"), frozenset("0cd"), {("b", "c"): "e"})
    with pytest.raises(SpecError) as err:
        nilpotent_from_spec(spec)
    text = " | ".join(err.value.problems)
    assert "not B union C" in text
    assert "not in B n C" in text


def test_spec_rejects_all_zero_rows_and_columns():
    spec = NilpotentSpec(("0", "b", "c", "d"), frozenset("0bd"), frozenset("0cd"), {})
    problems = spec.problems()
    assert "b in B\\C pairs to 0 with all of C\\B" in problems
    assert "c in C\\B pairs to 0 with all of B\\C" in problems


def test_spec_json_round_trip():
    spec = example_spec()
    assert NilpotentSpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize("seed", range(30))
def test_random_specs_are_valid(seed):
    spec = random_nilpotent_spec(random.Random(seed))
    assert spec.problems() == []


# --- Rees -----------------------------------------------------------------------

def test_rees_idempotent():
    S = rees_semigroup(["1"], ["1"], [[1]])
    assert S.elements == ("0", "(1,1)")
    assert S.mul("(1,1)", "(1,1)") == "(1,1)"


def test_rees_null():
    S = rees_semigroup(["1"], ["1"], [[0]])
    assert S.mul("(1,1)", "(1,1)") == "0"


def test_rees_product_rule():
    # rows indexed by Lambda: w[lambda][i]
    S = rees_semigroup(["1", "2"], ["1", "2"], [[1, 0], [0, 1]])
    assert S.order == 5
    assert S.mul("(1,1)", "(1,2)") == "(1,2)"
    assert S.mul("(1,1)", "(2,2)") == "0"
    assert S.mul("(2,2)", "(2,1)") == "(2,1)"
    assert is_categorical_at_zero(S)


def test_rees_dimension_mismatch():
    with pytest.raises(ValueError, match="2x1"):
        rees_semigroup(["1"], ["1", "2"], [[1, 0]])


def test_rees_json_round_trip():
    r = random_sandwich(random.Random(3))
    assert ReesSemigroup.from_json(r.to_json()) == r


# --- morphism extension -------------------------------------------------------

def test_mor_extension_one_object(one_object):
    S = mor_extension(MorExtensionSpec(one_object, ("x",), ("x",), {"x": "id"}))
    assert S.elements == ("0", "id")
    assert S.mul("id", "id") == "id"


def test_mor_extension_hand_products(split_idempotent):
    # Delta = {p, q}, D = {q}, eps_q = e : q -> p, so g*f = g.e.f when dom g = p
    spec = MorExtensionSpec(split_idempotent, ("p", "q"), ("q",), {"q": "e"})
    S = mor_extension(spec)
    assert set(S.elements) == {"0", "iq", "h", "k"}
    assert S.mul("h", "iq") == "k"   # h.e.iq = h.e = k
    assert S.mul("h", "h") == "h"    # h.e.h = h.ip = h
    assert S.mul("h", "k") == "k"    # h.e.h.e = k
    for f in ("iq", "h", "k"):
        assert S.mul("iq", f) == S.mul("k", f) == "0"
    assert is_categorical_at_zero(S)


def test_mor_extension_rejects_bad_epsilon(split_idempotent):
    with pytest.raises(SpecError, match="not in Mor"):
        mor_extension(MorExtensionSpec(split_idempotent, ("p",), ("q",), {"q": "k"}))
    with pytest.raises(SpecError, match="not defined"):
        mor_extension(MorExtensionSpec(split_idempotent, ("p",), ("q",), {}))


def test_mor_extension_json_round_trip(split_idempotent):
    spec = MorExtensionSpec(split_idempotent, ("p", "q"), ("q",), {"q": "iq"})
    assert MorExtensionSpec.from_json(spec.to_json()).to_json() == spec.to_json()


def test_mor_extension_annihilators_agree(split_idempotent):
    from ksemigroup.constructors import mor_extension_discrepancies
    for eps in ("iq", "e"):
        spec = MorExtensionSpec(split_idempotent, ("p", "q"), ("q",), {"q": eps})
        S = mor_extension(spec)
        ann = annihilators(S)
        assert ann.right == {"0"}
        assert ann.left == spec.expected_left_annihilator()
        assert mor_extension_discrepancies(spec, S) == []
    assert MorExtensionSpec(split_idempotent, ("p", "q"), ("q",), {"q": "iq"}).expected_left_annihilator() == {"0", "h"}


def test_mor_extension_discrepancy_is_flagged(arrow):
    # eps_x = f : x -> y, but nothing leaves y into D = {x}; so ix*ix = 0 and ix annihilates on the right
    from ksemigroup.constructors import mor_extension_discrepancies
    spec = MorExtensionSpec(arrow, ("x", "y"), ("x",), {"x": "f"})
    S = mor_extension(spec)
    assert S.mul("ix", "ix") == "0"
    assert is_categorical_at_zero(S)
    problems = mor_extension_discrepancies(spec, S)
    assert len(problems) == 1 and problems[0].startswith("right annihilator")

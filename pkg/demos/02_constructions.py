"""The four constructions side by side.

Run: python demos/02_constructions.py
"""
from ksemigroup import (MorExtensionSpec, NilpotentSpec, SmallCategory, annihilators, decompose,
                        is_categorical_at_zero, mor_extension, nilpotency_degree, nilpotent_from_spec,
                        random_category, rees_semigroup, semigroup_of_category)
from ksemigroup.cli import render_text

# 3-nilpotent: A = {0, b1, b2, c, d}, B = {0, b1, b2, d}, C = {0, c, d}
spec = NilpotentSpec(("0", "b1", "b2", "c", "d"), frozenset({"0", "b1", "b2", "d"}), frozenset({"0", "c", "d"}),
                     {("b1", "c"): "d", ("b2", "c"): "d"})
N = nilpotent_from_spec(spec)
print(render_text(N.to_json()))
ann = annihilators(N)
print("degree", nilpotency_degree(N), "| Ann_l =", sorted(ann.left), "| Ann_r =", sorted(ann.right))

# Rees matrix semigroup over the trivial group
R = rees_semigroup(["1", "2"], ["1"], [[1, 0]])
print()
print(render_text(R.to_json()))

# the semigroup of a random small category
C = random_category(seed=3, object_count=2, max_extra_arrows=3)
S = semigroup_of_category(C)
print("\ncategory with", len(C.names), "arrows; K:", is_categorical_at_zero(S))
print(render_text(S.to_json()))

# morphisms Delta -> D multiplied through chosen arrows eps_a
comp = {("ip", "ip"): "ip", ("iq", "iq"): "iq", ("h", "e"): "ip", ("e", "h"): "k", ("h", "k"): "h",
        ("k", "e"): "e", ("k", "k"): "k", ("ip", "h"): "h", ("h", "iq"): "h", ("iq", "e"): "e",
        ("e", "ip"): "e", ("iq", "k"): "k", ("k", "iq"): "k"}
ambient = SmallCategory(("p", "q"), (("ip", "p", "p"), ("iq", "q", "q"), ("e", "q", "p"), ("h", "p", "q"),
                                     ("k", "q", "q")), {"p": "ip", "q": "iq"}, comp).validate()
ext = MorExtensionSpec(ambient, ("p", "q"), ("q",), {"q": "e"})
M = mor_extension(ext)
print("\nmor-extension; predicted Ann_l:", sorted(ext.expected_left_annihilator()),
      "computed:", sorted(annihilators(M).left))
print("decomposition ok:", decompose(M).ok)

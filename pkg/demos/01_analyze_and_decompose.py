"""Analyse a small semigroup and take a K-semigroup apart.

Run: python demos/01_analyze_and_decompose.py
"""
import json

from ksemigroup import annihilators, categoricity_witness, decompose, nilpotency_degree, rees_semigroup, validate

# a*a = b and nothing else: nilpotent, but (a*a)*a = 0 with both a*a and a*a nonzero
a2b = validate({"elements": ["0", "a", "b"], "zero": "0",
                "table": [["0", "0", "0"], ["0", "b", "0"], ["0", "0", "0"]]})
print("a2b witness:", categoricity_witness(a2b))
print("a2b nilpotency degree:", nilpotency_degree(a2b))
print("a2b annihilators:", annihilators(a2b).to_json(a2b))

# A Rees semigroup with a zero row in its sandwich matrix: the zero row
# produces left annihilators, the rest embeds back into a Rees semigroup.
S = rees_semigroup(["1", "2"], ["1", "2", "3"], [[1, 0], [0, 1], [0, 0]])
report = decompose(S)
print("\nRees example, order", S.order)
doc = report.to_json()
for key in ("annihilators", "t_elements", "p_classes", "q_classes", "n_classes", "sandwich", "phi"):
    print(f"{key:>13}: {json.dumps(doc[key])}")
print("all checks passed:", report.ok, f"({len(doc['verified'])} flags)")

"""Reading the decomposition of a category's semigroup in category terms.

Run: python demos/03_category_reading.py
"""
from ksemigroup import category_interpretation_check, decompose, random_category, semigroup_of_category

C = random_category(seed=42, object_count=3, max_extra_arrows=4)
for name, dom, cod in C.morphisms:
    print(f"  {name}: {dom} -> {cod}")
S = semigroup_of_category(C)
report = decompose(S)
print("P-classes (arrows by codomain):", report.to_json()["p_classes"])
print("Q-classes (arrows by domain):  ", report.to_json()["q_classes"])
print("sandwich rows:", report.to_json()["sandwich"]["rows"])
for check in category_interpretation_check(S, C, report):
    print(f"  {'ok ' if check.passed else 'BAD'} {check.name}")

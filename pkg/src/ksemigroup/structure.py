"""Decomposition of a K-semigroup into its quasi-annihilator and a Rees-embeddable part.

Pipeline: annihilators -> complement subsemigroup T -> annihilation profiles
(P, Q, N) on T -> sandwich matrix -> embedding of T/N into a Rees semigroup
over the trivial group. Every intermediate law is re-checked and recorded in
``DecompositionReport.verified``.

Profiles are taken inside T. A nonzero element of T may still annihilate
(or be annihilated by) all of T; such elements keep their own classes and
the zero always forms a class by itself, so N stays 0-restricted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .constructors import ReesSemigroup, SmallCategory, rees_label, semigroup_of_category
from .core import (CONGRUENCE_BOUND, ISOMORPHISM_BOUND, FiniteSemigroup, HomomorphismMap, Partition,
                   enumerate_congruences, find_isomorphism, is_congruence, is_ideal, quotient, set_product)
from .k_analysis import (AnnihilatorTriple, NotKSemigroup, annihilators, categoricity_witness,
                         check_lemma1, complement_subsemigroup, power, rees_quotient_partition)


class DecompositionError(ValueError):
    def __init__(self, message: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True)
class PQNData:
    p_classes: Partition
    q_classes: Partition
    p_sets: Mapping[int, frozenset[str]]  # i -> P_i, i = 1..|I|
    q_sets: Mapping[int, frozenset[str]]  # lambda -> Q_lambda
    n_classes: Mapping[tuple[int, int], frozenset[str]]  # only nonempty N_{i,lambda}
    t_annihilated: frozenset[str] = frozenset()  # nonzero elements with a one-sided zero profile in T

    @property
    def i_index(self) -> list[int]:
        return sorted(self.p_sets)

    @property
    def lambda_index(self) -> list[int]:
        return sorted(self.q_sets)

    def p_of(self, x: str) -> int:
        return next(i for i, b in self.p_sets.items() if x in b)

    def q_of(self, x: str) -> int:
        return next(l for l, b in self.q_sets.items() if x in b)


def _group_by_profile(T: FiniteSemigroup, profile) -> list[frozenset[str]]:
    groups: dict[frozenset, list[str]] = {}
    for a in range(T.order):
        if a == T.zero_index:
            continue
        groups.setdefault(profile(a), []).append(T.elements[a])
    # dict preserves first-seen order, i.e. least member index
    return [frozenset(g) for g in groups.values()]


def compute_pqn(T: FiniteSemigroup) -> PQNData:
    n, t, z = T.order, T.table, T.zero_index
    left_profile = lambda a: frozenset(x for x in range(n) if t[x][a] == z)   # {x | xa = 0}
    right_profile = lambda a: frozenset(x for x in range(n) if t[a][x] == z)  # {x | ax = 0}
    everything = frozenset(range(n))
    annihilated = frozenset(T.elements[a] for a in range(n)
                            if a != z and (left_profile(a) == everything or right_profile(a) == everything))
    zero_block = frozenset([T.zero])
    ps = _group_by_profile(T, left_profile)
    qs = _group_by_profile(T, right_profile)
    p_sets = {k + 1: b for k, b in enumerate(ps)}
    q_sets = {k + 1: b for k, b in enumerate(qs)}
    n_classes = {}
    for i, P in p_sets.items():
        for lam, Q in q_sets.items():
            if P & Q:
                n_classes[(i, lam)] = P & Q
    return PQNData(
        Partition.from_blocks(T, [zero_block, *ps]),
        Partition.from_blocks(T, [zero_block, *qs]),
        p_sets, q_sets, n_classes, annihilated,
    )


def n_partition(T: FiniteSemigroup, pqn: PQNData) -> Partition:
    return Partition.from_blocks(T, [frozenset([T.zero]), *pqn.n_classes.values()])


def greatest_zero_restricted_congruence(T: FiniteSemigroup) -> Partition:
    return n_partition(T, compute_pqn(T))


def sandwich_matrix(T: FiniteSemigroup, pqn: PQNData) -> ReesSemigroup:
    zero = frozenset([T.zero])
    rows = []
    for lam in pqn.lambda_index:
        row = []
        for i in pqn.i_index:
            prod = set_product(T, pqn.q_sets[lam], pqn.p_sets[i])
            if prod != zero and T.zero in prod:
                raise DecompositionError(f"Q_{lam} P_{i} contains zero but is not zero", (lam, i))
            row.append(0 if prod == zero else 1)
        rows.append(tuple(row))
    return ReesSemigroup(tuple(str(i) for i in pqn.i_index), tuple(str(l) for l in pqn.lambda_index), tuple(rows))


def _embedding_map(T: FiniteSemigroup, pqn: PQNData, rees: ReesSemigroup) -> HomomorphismMap:
    TN, proj = quotient(T, n_partition(T, pqn))
    M = rees.materialize()
    phi = {TN.zero: M.zero}
    for (i, lam), members in pqn.n_classes.items():
        phi[proj(next(iter(members)))] = rees_label(str(i), str(lam))
    return HomomorphismMap(TN, M, phi)


def rees_embedding(T: FiniteSemigroup, pqn: PQNData, rees: ReesSemigroup) -> HomomorphismMap:
    """The map T/N -> M sending the class N_{i,lambda} to (i, lambda)."""
    f = _embedding_map(T, pqn, rees)
    bad = f.multiplicativity_witness()
    if bad is not None:
        raise DecompositionError(f"embedding is not multiplicative at {bad}", bad)
    bad = f.injectivity_witness()
    if bad is not None:
        raise DecompositionError(f"embedding is not injective at {bad}", bad)
    if not f.is_zero_restricted:
        raise DecompositionError("embedding is not 0-restricted")
    return f


@dataclass
class DecompositionReport:
    source: FiniteSemigroup
    annihilators: AnnihilatorTriple
    t: FiniteSemigroup
    pqn: PQNData
    rees: ReesSemigroup
    phi: HomomorphismMap
    verified: dict[str, bool] = field(default_factory=dict)
    witnesses: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v for k, v in self.verified.items() if k != "lemma3_exhaustive")

    def failures(self) -> list[str]:
        return [k for k, v in self.verified.items() if not v and k != "lemma3_exhaustive"]

    def to_json(self) -> dict:
        S, T = self.source, self.t
        key = T.index
        n_json = [{"i": i, "lambda": lam, "members": sorted(m, key=key)}
                  for (i, lam), m in sorted(self.pqn.n_classes.items())]
        phi_json = []
        for cls in self.phi.source.elements:
            if cls == self.phi.source.zero:
                continue
            image = self.phi(cls)
            (i, lam), = [k for k, m in self.pqn.n_classes.items() if min(m) == cls]
            phi_json.append({"class": cls, "image": image, "image_i": i, "image_lambda": lam})
        return {
            "annihilators": self.annihilators.to_json(S),
            "t_elements": list(T.elements),
            "p_classes": self.pqn.p_classes.as_label_lists(),
            "q_classes": self.pqn.q_classes.as_label_lists(),
            "n_classes": n_json,
            "sandwich": {"i_count": len(self.rees.i_labels), "lambda_count": len(self.rees.lambda_labels),
                         "rows": [list(r) for r in self.rees.w]},
            "phi": phi_json,
            "verified": dict(self.verified),
            "witnesses": list(self.witnesses),
        }


def _first(iterable):
    return next(iter(iterable), None)


def decompose(S: FiniteSemigroup, congruence_bound: int = CONGRUENCE_BOUND,
              isomorphism_bound: int = ISOMORPHISM_BOUND) -> DecompositionReport:
    witness = categoricity_witness(S)
    if witness is not None:
        raise NotKSemigroup(witness)
    verified: dict[str, bool] = {}
    witnesses: list[dict] = []

    def record(name: str, bad):
        verified[name] = bad is None
        if bad is not None:
            witnesses.append({"check": name, "witness": list(bad) if isinstance(bad, tuple) else bad})

    ann = annihilators(S)
    quasi = ann.quasi
    zero = frozenset([S.zero])
    record("annihilators_are_ideals",
           None if all(is_ideal(S, X) for X in (ann.left, ann.right, quasi)) else ("ideal",))
    record("corollary1_quasi_3_nilpotent", None if power(S, quasi, 3) == zero else tuple(sorted(power(S, quasi, 3))))
    record("lemma1", None if check_lemma1(S) else ("lemma1",))

    T, _ = complement_subsemigroup(S, ann)  # raises if T is not closed
    verified["lemma2_t_closed"] = True
    if T.order <= isomorphism_bound:
        SA, _ = quotient(S, rees_quotient_partition(S, ann))
        record("quotient_isomorphic_to_t", None if find_isomorphism(SA, T, isomorphism_bound) is not None else ("S/Ann_q", "T"))

    pqn = compute_pqn(T)
    N = n_partition(T, pqn)
    record("n_is_congruence", None if is_congruence(T, N) else ("N",))
    record("n_zero_restricted", None if N.is_zero_restricted else (T.zero,))
    if T.order <= congruence_bound:
        verified["lemma3_exhaustive"] = True
        record("lemma3_greatest", _first(tuple(sorted(b) for b in rho.blocks)
                                         for rho in enumerate_congruences(T, congruence_bound)
                                         if rho.is_zero_restricted and not rho.refines(N)))
    else:
        verified["lemma3_exhaustive"] = False

    record("p_classes_right_ideals", _first(
        (a, x) for P in pqn.p_sets.values() for a in P for x in T.elements
        if T.mul(a, x) != T.zero and T.mul(a, x) not in P))
    record("q_classes_left_ideals", _first(
        (x, a) for Q in pqn.q_sets.values() for a in Q for x in T.elements
        if T.mul(x, a) != T.zero and T.mul(x, a) not in Q))
    record("lemma4", _first(
        (i, lam) for i, P in pqn.p_sets.items() for lam, Q in pqn.q_sets.items()
        if not set_product(T, P, Q) <= pqn.n_classes.get((i, lam), frozenset()) | zero))
    record("lemma5", _first(
        (lam, i) for i, P in pqn.p_sets.items() for lam, Q in pqn.q_sets.items()
        if T.zero in set_product(T, Q, P) and set_product(T, Q, P) != zero))

    rees = sandwich_matrix(T, pqn)
    cor2 = None
    for (i, lam), A in pqn.n_classes.items():
        for (j, mu), B in pqn.n_classes.items():
            prod = set_product(T, A, B)
            if rees.w[lam - 1][j - 1] == 0:
                if prod != zero:
                    cor2 = (i, lam, j, mu)
            elif not prod <= pqn.n_classes.get((i, mu), frozenset()):
                cor2 = (i, lam, j, mu)
    record("corollary2", cor2)
    record("corollary3", _first(
        (i, lam) for (i, lam), A in pqn.n_classes.items()
        if set_product(T, A, A) != zero and T.zero in set_product(T, A, A)))

    phi = _embedding_map(T, pqn, rees)
    M = phi.target
    record("rees_target_categorical", None if categoricity_witness(M) is None else categoricity_witness(M).as_tuple())
    record("theorem1_homomorphism", phi.multiplicativity_witness())
    record("theorem1_injective", phi.injectivity_witness())
    record("theorem1_zero_restricted", None if phi.is_zero_restricted else (T.zero,))
    return DecompositionReport(S, ann, T, pqn, rees, phi, verified, witnesses)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "witness": self.witness}


def category_interpretation_check(S: FiniteSemigroup, C: SmallCategory,
                                  report: DecompositionReport | None = None) -> list[CheckResult]:
    """How the decomposition of a category's semigroup reads in category terms.

    Objects index both the P-classes (by codomain) and the Q-classes (by
    domain); N_{P(i), Q(j)} is the hom-set Mor(j, i).
    """
    results: list[CheckResult] = []

    def add(name, witness=None):
        results.append(CheckResult(name, witness is None, witness))

    expected = semigroup_of_category(C)
    add("semigroup_matches_category", None if expected == S else "tables differ")
    if report is None:
        report = decompose(S)
    pqn = report.pqn
    add("quasi_annihilator_is_zero", None if report.annihilators.quasi == {S.zero}
        else sorted(report.annihilators.quasi))
    add("t_equals_s", None if report.t.elements == S.elements else list(report.t.elements))

    ends_in = {o: frozenset(m for m in C.names if C.cod(m) == o) for o in C.objects}
    starts_at = {o: frozenset(m for m in C.names if C.dom(m) == o) for o in C.objects}
    p_of_obj = {o: next((i for i, P in pqn.p_sets.items() if P == ends_in[o]), None) for o in C.objects}
    q_of_obj = {o: next((l for l, Q in pqn.q_sets.items() if Q == starts_at[o]), None) for o in C.objects}
    bad = [o for o in C.objects if p_of_obj[o] is None]
    add("p_classes_are_codomain_fibres",
        None if not bad and len(pqn.p_sets) == len(C.objects) else {"objects": bad, "p_count": len(pqn.p_sets)})
    bad = [o for o in C.objects if q_of_obj[o] is None]
    add("q_classes_are_domain_fibres",
        None if not bad and len(pqn.q_sets) == len(C.objects) else {"objects": bad, "q_count": len(pqn.q_sets)})
    if any(v is None for v in (*p_of_obj.values(), *q_of_obj.values())):
        return results

    bad = []
    for i in C.objects:
        for j in C.objects:
            got = pqn.n_classes.get((p_of_obj[i], q_of_obj[j]), frozenset())
            if got != frozenset(C.hom(j, i)):
                bad.append([i, j])
    add("n_classes_are_hom_sets", bad or None)

    w = report.rees.w
    bad = [[i, j] for i in C.objects for j in C.objects
           if w[q_of_obj[j] - 1][p_of_obj[i] - 1] != (1 if i == j else 0)]
    add("sandwich_is_identity", bad or None)

    bad = []
    for o in C.objects:
        N = pqn.n_classes.get((p_of_obj[o], q_of_obj[o]), frozenset())
        e = C.identities[o]
        closed = set_product(S, N, N) <= N
        unit = e in N and all(S.mul(e, x) == x == S.mul(x, e) for x in N)
        if not (closed and unit):
            bad.append(o)
    add("diagonal_n_classes_are_monoids", bad or None)

    # the class of id_o in T/N is named by its least member
    images = {o: report.phi(min(pqn.n_classes[(p_of_obj[o], q_of_obj[o])])) for o in C.objects}
    expected_images = {o: rees_label(str(p_of_obj[o]), str(q_of_obj[o])) for o in C.objects}
    ok = images == expected_images and len(set(images.values())) == len(C.objects)
    add("phi_bijective_on_objects", None if ok else {o: images[o] for o in C.objects})
    return results

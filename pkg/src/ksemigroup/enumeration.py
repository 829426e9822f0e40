"""Exhaustive enumeration of semigroups with zero, and the corpus verifier.

Element 0 is the zero, so its row and column are fixed; the (n-1)^2 cells
with both factors nonzero are free and filled row-major with values
0..n-1. Tables come out in lexicographic order of that free-entry vector.
Associativity is checked on partial tables, and a branch is dropped as soon
as some triple with all its products known disagrees.

Parallel runs split the search by the first few free entries. Each worker
owns a contiguous prefix block and the blocks are concatenated in order,
so the output does not depend on the number of workers.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .core import (FiniteSemigroup, SemigroupError, canonical_form, default_labels, find_isomorphism,
                   from_index_table, validate)
from .k_analysis import (PreconditionError, annihilators, categoricity_witness, check_lemma1,
                         nilpotency_degree)
from .structure import DecompositionError, decompose

EXHAUSTIVE_CAP = 4


class EnumerationRefused(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationTask:
    order: int
    k_only: bool = False
    dedup: bool = False
    worker_count: int = 1
    sample: int | None = None  # draw this many uniform random tables instead of scanning
    seed: int = 0
    cap: int = EXHAUSTIVE_CAP

    def check(self):
        if self.order < 1:
            raise EnumerationRefused("order must be at least 1")
        if self.worker_count < 1:
            raise EnumerationRefused("worker_count must be at least 1")
        if self.sample is None and self.order > self.cap:
            raise EnumerationRefused(
                f"exhaustive enumeration is capped at order {self.cap}; "
                f"order {self.order} needs sampling mode (--sample K --seed S)")


def candidate_count(order: int) -> int:
    return order ** ((order - 1) ** 2)


def _cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(1, n)]


def _search(n: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All associative tables of order n whose free entries start with ``prefix``."""
    cells = _cells(n)
    t = [[0] * n for _ in range(n)]
    assigned = [[i == 0 or j == 0 for j in range(n)] for i in range(n)]
    triples = list(itertools.product(range(1, n), repeat=3))

    def ok() -> bool:
        for x, y, z in triples:
            if not (assigned[x][y] and assigned[y][z]):
                continue
            xy, yz = t[x][y], t[y][z]
            if not (assigned[xy][z] and assigned[x][yz]):
                continue
            if t[xy][z] != t[x][yz]:
                return False
        return True

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        i, j = cells[k]
        values = (prefix[k],) if k < len(prefix) else range(n)
        assigned[i][j] = True
        for v in values:
            t[i][j] = v
            if ok():
                yield from rec(k + 1)
        assigned[i][j] = False
        t[i][j] = 0

    yield from rec(0)


def _prefixes(n: int, workers: int) -> list[tuple[int, ...]]:
    free = (n - 1) ** 2
    k = 0
    while k < free and n ** k < 4 * workers:
        k += 1
    return list(itertools.product(range(n), repeat=k))


def _block(args) -> list[tuple[tuple[int, ...], ...]]:
    n, prefix, k_only = args
    out = []
    for tab in _search(n, prefix):
        if k_only and categoricity_witness(from_index_table(tab)) is not None:
            continue
        out.append(tab)
    return out


def _raw_tables(task: EnumerationTask) -> Iterator[tuple[tuple[int, ...], ...]]:
    n = task.order
    if task.sample is not None:
        rng = random.Random(task.seed)
        cells = _cells(n)
        for _ in range(task.sample):
            t = [[0] * n for _ in range(n)]
            for i, j in cells:
                t[i][j] = rng.randrange(n)
            tab = tuple(tuple(r) for r in t)
            if all(tab[tab[a][b]][c] == tab[a][tab[b][c]] for a, b, c in itertools.product(range(n), repeat=3)):
                if task.k_only and categoricity_witness(from_index_table(tab)) is not None:
                    continue
                yield tab
        return
    if task.worker_count == 1:
        yield from _block((n, (), task.k_only))
        return
    jobs = [(n, p, task.k_only) for p in _prefixes(n, task.worker_count)]
    with ProcessPoolExecutor(max_workers=task.worker_count) as pool:
        for chunk in pool.map(_block, jobs):
            yield from chunk


def enumerate_semigroups(task: EnumerationTask) -> Iterator[FiniteSemigroup]:
    task.check()
    labels = default_labels(task.order)
    seen: set = set()
    for tab in _raw_tables(task):
        S = from_index_table(tab, labels)
        if task.dedup:
            key = canonical_form(S)
            if key in seen:
                continue
            seen.add(key)
        yield S


# --- corpus verification ------------------------------------------------------

@dataclass
class CorpusVerdict:
    total_tables: int = 0
    associative: int = 0
    k_semigroups: int = 0
    property_failures: list[dict] = field(default_factory=list)
    lemma1_exhibits: list[dict] = field(default_factory=list)
    per_order: dict[int, dict] = field(default_factory=dict)

    def merge(self, other: "CorpusVerdict") -> "CorpusVerdict":
        per = dict(self.per_order)
        for k, v in other.per_order.items():
            old = per.get(k, {"candidates": 0, "associative": 0, "k_semigroups": 0})
            per[k] = {key: old[key] + v[key] for key in old}
        return CorpusVerdict(
            self.total_tables + other.total_tables,
            self.associative + other.associative,
            self.k_semigroups + other.k_semigroups,
            self.property_failures + other.property_failures,
            self.lemma1_exhibits + other.lemma1_exhibits,
            per,
        )

    @property
    def ok(self) -> bool:
        return not self.property_failures

    def to_json(self) -> dict:
        return {
            "total_tables": self.total_tables,
            "associative": self.associative,
            "k_semigroups": self.k_semigroups,
            "per_order": {str(k): self.per_order[k] for k in sorted(self.per_order)},
            "property_failures": self.property_failures,
            "lemma1_exhibits": self.lemma1_exhibits,
        }


def check_semigroup(S: FiniteSemigroup, verdict: CorpusVerdict) -> None:
    """Run the whole battery on one semigroup, appending to ``verdict``."""

    def fail(name, witness):
        verdict.property_failures.append({"semigroup": S.to_json(), "property": name, "witness": witness})

    try:
        validate(S.to_json())
    except SemigroupError as exc:
        fail("revalidates", [v.to_json() for v in exc.violations])
        return
    ann = annihilators(S)
    degree = nilpotency_degree(S)
    everything = frozenset(S.elements)
    # holds without categoricity: S = Ann_q S forces S^3 = 0
    if ann.quasi == everything and (degree is None or degree > 3):
        fail("quasi_annihilator_full_implies_3_nilpotent", degree)

    witness = categoricity_witness(S)
    if witness is not None:
        if not check_lemma1(S):
            verdict.lemma1_exhibits.append({"semigroup": S.to_json(), "categoricity_witness": list(witness.as_tuple()),
                                            "nilpotency_degree": degree, "quasi": sorted(ann.quasi, key=S.index)})
        return
    verdict.k_semigroups += 1
    try:
        report = decompose(S)
    except (PreconditionError, DecompositionError) as exc:
        fail(type(exc).__name__, list(getattr(exc, "witness", ())))
        return
    for name in report.failures():
        fail(name, [w for w in report.witnesses if w["check"] == name])


def _verify_block(args) -> CorpusVerdict:
    n, prefix = args
    v = CorpusVerdict()
    labels = default_labels(n)
    for tab in _search(n, prefix):
        v.associative += 1
        check_semigroup(from_index_table(tab, labels), v)
    v.per_order = {n: {"candidates": 0, "associative": v.associative, "k_semigroups": v.k_semigroups}}
    return v


def verify_corpus(max_order: int, worker_count: int = 1, cap: int = EXHAUSTIVE_CAP) -> CorpusVerdict:
    if max_order > cap:
        raise EnumerationRefused(f"verification is exhaustive and capped at order {cap}")
    total = CorpusVerdict()
    for n in range(1, max_order + 1):
        jobs = [(n, p) for p in _prefixes(n, worker_count)] if worker_count > 1 else [(n, ())]
        if worker_count > 1:
            with ProcessPoolExecutor(max_workers=worker_count) as pool:
                parts = list(pool.map(_verify_block, jobs))
        else:
            parts = [_verify_block(j) for j in jobs]
        for part in parts:
            total = total.merge(part)
        total.total_tables += candidate_count(n)
        total.per_order[n]["candidates"] = candidate_count(n)
    return total


def isomorphic(S: FiniteSemigroup, S2: FiniteSemigroup) -> bool:
    return find_isomorphism(S, S2) is not None

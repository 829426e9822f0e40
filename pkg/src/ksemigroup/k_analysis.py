"""Categoricity at zero, annihilators, nilpotency and the complement subsemigroup."""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, Partition, set_product


class NotKSemigroup(ValueError):
    def __init__(self, witness: "CategoricityWitness"):
        self.witness = witness
        super().__init__(f"not categorical at zero: {witness}")


class PreconditionError(ValueError):
    def __init__(self, message: str, witness: tuple[str, ...]):
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True)
class CategoricityWitness:
    """f*g != 0 and g*h != 0 but f*g*h = 0."""

    f: str
    g: str
    h: str

    def as_tuple(self) -> tuple[str, str, str]:
        return (self.f, self.g, self.h)

    def __str__(self):
        return f"({self.f},{self.g},{self.h})"


@dataclass(frozen=True)
class AnnihilatorTriple:
    left: frozenset[str]
    right: frozenset[str]

    @property
    def quasi(self) -> frozenset[str]:
        return self.left | self.right

    def to_json(self, S: FiniteSemigroup) -> dict:
        key = S.index
        return {
            "left": sorted(self.left, key=key),
            "right": sorted(self.right, key=key),
            "quasi": sorted(self.quasi, key=key),
        }


def categoricity_witness(S: FiniteSemigroup) -> CategoricityWitness | None:
    """First violating triple in lexicographic index order, or None."""
    n, t, z = S.order, S.table, S.zero_index
    nonzero_right = [[h for h in range(n) if t[g][h] != z] for g in range(n)]
    for f in range(n):
        row = t[f]
        for g in range(n):
            fg = row[g]
            if fg == z:
                continue
            tfg = t[fg]
            for h in nonzero_right[g]:
                if tfg[h] == z:
                    return CategoricityWitness(S.elements[f], S.elements[g], S.elements[h])
    return None


def is_categorical_at_zero(S: FiniteSemigroup) -> bool:
    return categoricity_witness(S) is None


def annihilators(S: FiniteSemigroup) -> AnnihilatorTriple:
    n, t, z = S.order, S.table, S.zero_index
    left = frozenset(S.elements[a] for a in range(n) if all(t[a][x] == z for x in range(n)))
    right = frozenset(S.elements[a] for a in range(n) if all(t[x][a] == z for x in range(n)))
    return AnnihilatorTriple(left, right)


def power(S: FiniteSemigroup, X, k: int) -> frozenset[str]:
    """The k-fold set product X^k (k >= 1)."""
    X = frozenset(X)
    out = X
    for _ in range(k - 1):
        out = set_product(S, out, X)
    return out


def nilpotency_degree(S: FiniteSemigroup) -> int | None:
    zero = frozenset([S.zero])
    everything = frozenset(S.elements)
    current = everything
    for n in range(1, S.order + 1):
        if current == zero:
            return n
        nxt = set_product(S, current, everything)
        if nxt == current:
            return None
        current = nxt
    return None


def check_lemma1(S: FiniteSemigroup) -> bool:
    """(S^3 = 0) iff (S = Ann_q S). Only guaranteed for K-semigroups."""
    degree = nilpotency_degree(S)
    three_nilpotent = degree is not None and degree <= 3
    return three_nilpotent == (annihilators(S).quasi == frozenset(S.elements))


def complement_subsemigroup(S: FiniteSemigroup, ann: AnnihilatorTriple | None = None) -> tuple[FiniteSemigroup, dict[str, str]]:
    """T = (S minus Ann_q S) with zero, multiplication inherited from S.

    Returns T together with its inclusion into S (labels are shared).
    """
    if ann is None:
        ann = annihilators(S)
    quasi = ann.quasi
    keep = [i for i, x in enumerate(S.elements) if x == S.zero or x not in quasi]
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for a in keep:
        row = []
        for b in keep:
            p = S.table[a][b]
            if p not in pos:
                pair = (S.elements[a], S.elements[b])
                raise PreconditionError(
                    f"{pair[0]}*{pair[1]} = {S.elements[p]} lies in the quasi-annihilator; input is not a K-semigroup",
                    (*pair, S.elements[p]))
            row.append(pos[p])
        rows.append(tuple(row))
    labels = tuple(S.elements[i] for i in keep)
    T = FiniteSemigroup(labels, S.zero, tuple(rows))
    return T, {x: x for x in labels}


def rees_quotient_partition(S: FiniteSemigroup, ann: AnnihilatorTriple | None = None) -> Partition:
    if ann is None:
        ann = annihilators(S)
    return Partition.rees(S, ann.quasi)

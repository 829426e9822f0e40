"""Finite semigroups with zero given by Cayley tables.

Elements carry string labels at the I/O boundary; internally everything is a
dense integer index in declaration order, and ``table[i][j]`` is the index of
``elements[i] * elements[j]`` (the row element acts on the left).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

CONGRUENCE_BOUND = 8
ISOMORPHISM_BOUND = 8


class SemigroupError(ValueError):
    """Raised when a candidate table is not a semigroup with zero."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        head = "; ".join(v.message for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            head += f"; ... ({more} more)"
        super().__init__(head)


class BoundExceeded(ValueError):
    """An exhaustive search was asked to run above its configured size bound."""

    def __init__(self, what: str, size: int, bound: int):
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds bound {bound} (raise the bound to at least {size})")


@dataclass(frozen=True)
class Violation:
    kind: str  # "label", "zero", "associativity"
    elements: tuple[str, ...]
    message: str
    left: str | None = None
    right: str | None = None

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "elements": list(self.elements), "message": self.message}
        if self.left is not None:
            doc["left"] = self.left
            doc["right"] = self.right
        return doc


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    elements: tuple[str, ...]
    zero: str
    table: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.elements)})

    @classmethod
    def from_labels(cls, elements: Sequence[str], zero: str, table: Sequence[Sequence[str]]) -> "FiniteSemigroup":
        """Build from a label table and validate it; raises SemigroupError."""
        return validate({"elements": list(elements), "zero": zero, "table": [list(r) for r in table]})

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def zero_index(self) -> int:
        return self._index[self.zero]

    def index(self, label: str) -> int:
        return self._index[label]

    def mul(self, a: str, b: str) -> str:
        return self.elements[self.table[self._index[a]][self._index[b]]]

    def label_table(self) -> list[list[str]]:
        return [[self.elements[k] for k in row] for row in self.table]

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "zero": self.zero, "table": self.label_table()}

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return (self.elements, self.zero, self.table) == (other.elements, other.zero, other.table)

    def __hash__(self):
        return hash((self.elements, self.zero, self.table))

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, elements={list(self.elements)})"


def find_violations(doc: Mapping) -> list[Violation]:
    """Every way in which ``doc`` fails to be a semigroup with the declared zero.

    Structural problems (missing keys, non-square table) raise immediately
    because nothing else can be checked without them.
    """
    if not isinstance(doc, Mapping):
        raise SemigroupError([Violation("label", (), "semigroup document must be an object")])
    missing = [k for k in ("elements", "zero", "table") if k not in doc]
    if missing:
        raise SemigroupError([Violation("label", (), f"missing key {k!r}") for k in missing])
    elements, zero, table = list(doc["elements"]), doc["zero"], doc["table"]
    n = len(elements)
    if n < 1:
        raise SemigroupError([Violation("label", (), "a semigroup needs at least one element")])
    if not all(isinstance(x, str) for x in elements):
        raise SemigroupError([Violation("label", (), "element labels must be strings")])
    if len(table) != n or any(len(row) != n for row in table):
        raise SemigroupError([Violation("label", (), f"table is not {n}x{n}")])

    out: list[Violation] = []
    seen: set[str] = set()
    for x in elements:
        if x in seen:
            out.append(Violation("label", (x,), f"duplicate label {x!r}"))
        seen.add(x)
    if zero not in seen:
        out.append(Violation("label", (str(zero),), f"zero {zero!r} is not an element"))
    index = {x: i for i, x in enumerate(elements)}
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if v not in index:
                out.append(Violation("label", (elements[i], elements[j]),
                                     f"product {elements[i]}*{elements[j]} = {v!r} is not an element"))
    if out:
        return out

    t = [[index[v] for v in row] for row in table]
    z = index[zero]
    for i in range(n):
        if t[z][i] != z:
            out.append(Violation("zero", (zero, elements[i]), f"{zero}*{elements[i]} = {elements[t[z][i]]}, not {zero}"))
        if t[i][z] != z and i != z:
            out.append(Violation("zero", (elements[i], zero), f"{elements[i]}*{zero} = {elements[t[i][z]]}, not {zero}"))
    for a, b, c in itertools.product(range(n), repeat=3):
        left, right = t[t[a][b]][c], t[a][t[b][c]]
        if left != right:
            names = (elements[a], elements[b], elements[c])
            out.append(Violation("associativity", names,
                                 "({0}*{1})*{2} = {3} but {0}*({1}*{2}) = {4}".format(*names, elements[left], elements[right]),
                                 left=elements[left], right=elements[right]))
    return out


def validate(doc: Mapping) -> FiniteSemigroup:
    violations = find_violations(doc)
    if violations:
        raise SemigroupError(violations)
    index = {x: i for i, x in enumerate(doc["elements"])}
    table = tuple(tuple(index[v] for v in row) for row in doc["table"])
    return FiniteSemigroup(tuple(doc["elements"]), doc["zero"], table)


def from_index_table(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, zero: int = 0) -> FiniteSemigroup:
    """Wrap an already-trusted integer table without re-checking associativity."""
    n = len(table)
    if labels is None:
        labels = default_labels(n)
    return FiniteSemigroup(tuple(labels), labels[zero], tuple(tuple(r) for r in table))


def default_labels(n: int) -> list[str]:
    """``0`` followed by ``a, b, c, ...``; two-letter names past ``z``."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    out = ["0"]
    for k in range(n - 1):
        out.append(letters[k] if k < 26 else letters[k // 26 - 1] + letters[k % 26])
    return out


# --- subsets -----------------------------------------------------------------

def _indices(S: FiniteSemigroup, X: Iterable[str]) -> list[int]:
    return [S.index(x) for x in X]


def _labels(S: FiniteSemigroup, idx: Iterable[int]) -> frozenset[str]:
    return frozenset(S.elements[i] for i in idx)


def set_product(S: FiniteSemigroup, X: Iterable[str], Y: Iterable[str]) -> frozenset[str]:
    xs, ys = _indices(S, X), _indices(S, Y)
    return _labels(S, {S.table[x][y] for x in xs for y in ys})


def is_ideal(S: FiniteSemigroup, X: Iterable[str], side: str = "two-sided") -> bool:
    if side not in ("left", "right", "two-sided"):
        raise ValueError(f"unknown side {side!r}")
    members = frozenset(X)
    everything = S.elements
    if side in ("left", "two-sided") and not set_product(S, everything, members) <= members:
        return False
    if side in ("right", "two-sided") and not set_product(S, members, everything) <= members:
        return False
    return True


def is_subsemigroup(S: FiniteSemigroup, X: Iterable[str]) -> bool:
    members = frozenset(X)
    return set_product(S, members, members) <= members


# --- partitions and congruences ----------------------------------------------

@dataclass(frozen=True)
class Partition:
    parent: FiniteSemigroup
    blocks: tuple[frozenset[str], ...]

    def __post_init__(self):
        seen: set[str] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            if seen & block:
                raise ValueError("partition blocks overlap")
            seen |= block
        if seen != set(self.parent.elements):
            raise ValueError("partition does not cover the semigroup")

    @classmethod
    def from_blocks(cls, S: FiniteSemigroup, blocks: Iterable[Iterable[str]]) -> "Partition":
        """Blocks are normalised to order of their least member index."""
        fs = [frozenset(b) for b in blocks]
        fs.sort(key=lambda b: min(S.index(x) for x in b))
        return cls(S, tuple(fs))

    @classmethod
    def discrete(cls, S: FiniteSemigroup) -> "Partition":
        return cls(S, tuple(frozenset([x]) for x in S.elements))

    @classmethod
    def universal(cls, S: FiniteSemigroup) -> "Partition":
        return cls(S, (frozenset(S.elements),))

    @classmethod
    def rees(cls, S: FiniteSemigroup, ideal: Iterable[str]) -> "Partition":
        """Collapse ``ideal`` to one block, everything else stays a singleton."""
        ideal = frozenset(ideal)
        rest = [frozenset([x]) for x in S.elements if x not in ideal]
        return cls.from_blocks(S, [ideal, *rest])

    def block_of(self, label: str) -> frozenset[str]:
        for block in self.blocks:
            if label in block:
                return block
        raise KeyError(label)

    def class_map(self) -> list[int]:
        """Block number of each element index."""
        out = [0] * self.parent.order
        for k, block in enumerate(self.blocks):
            for x in block:
                out[self.parent.index(x)] = k
        return out

    @property
    def is_zero_restricted(self) -> bool:
        return self.block_of(self.parent.zero) == {self.parent.zero}

    def refines(self, other: "Partition") -> bool:
        return all(any(b <= c for c in other.blocks) for b in self.blocks)

    def as_label_lists(self) -> list[list[str]]:
        S = self.parent
        return [sorted(b, key=S.index) for b in self.blocks]


def is_congruence(S: FiniteSemigroup, p: Partition) -> bool:
    return _congruence_on_map(S, p.class_map())


def _congruence_on_map(S: FiniteSemigroup, cls: Sequence[int]) -> bool:
    n, t = S.order, S.table
    for a in range(n):
        for b in range(a + 1, n):
            if cls[a] != cls[b]:
                continue
            for x in range(n):
                if cls[t[x][a]] != cls[t[x][b]] or cls[t[a][x]] != cls[t[b][x]]:
                    return False
    return True


def restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """All set partitions of range(n) as restricted growth strings."""
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(k: int, top: int):
        if k == n:
            yield list(rgs)
            return
        for v in range(top + 2):
            rgs[k] = v
            yield from rec(k + 1, max(top, v))

    rgs[0] = 0
    yield from rec(1, 0)


def enumerate_congruences(S: FiniteSemigroup, bound: int = CONGRUENCE_BOUND) -> list[Partition]:
    if S.order > bound:
        raise BoundExceeded("congruence enumeration", S.order, bound)
    out = []
    for rgs in restricted_growth_strings(S.order):
        if _congruence_on_map(S, rgs):
            blocks: dict[int, set[str]] = {}
            for i, k in enumerate(rgs):
                blocks.setdefault(k, set()).add(S.elements[i])
            out.append(Partition(S, tuple(frozenset(blocks[k]) for k in sorted(blocks))))
    return out


# --- homomorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class HomomorphismMap:
    source: FiniteSemigroup
    target: FiniteSemigroup
    map: Mapping[str, str]

    def __call__(self, label: str) -> str:
        return self.map[label]

    def multiplicativity_witness(self) -> tuple[str, str] | None:
        S, f = self.source, self.map
        for a in S.elements:
            for b in S.elements:
                if f[S.mul(a, b)] != self.target.mul(f[a], f[b]):
                    return (a, b)
        return None

    def injectivity_witness(self) -> tuple[str, str] | None:
        seen: dict[str, str] = {}
        for a in self.source.elements:
            y = self.map[a]
            if y in seen:
                return (seen[y], a)
            seen[y] = a
        return None

    @property
    def is_zero_restricted(self) -> bool:
        return [a for a in self.source.elements if self.map[a] == self.target.zero] == [self.source.zero]

    def to_json(self) -> dict:
        return {a: self.map[a] for a in self.source.elements}


def check_homomorphism(f: HomomorphismMap) -> bool:
    if set(f.map) != set(f.source.elements) or not set(f.map.values()) <= set(f.target.elements):
        return False
    return f.multiplicativity_witness() is None


def is_injective(f: HomomorphismMap) -> bool:
    return f.injectivity_witness() is None


def is_surjective(f: HomomorphismMap) -> bool:
    return set(f.map.values()) == set(f.target.elements)


def quotient(S: FiniteSemigroup, p: Partition) -> tuple[FiniteSemigroup, HomomorphismMap]:
    """Quotient by a congruence; each block is named by its least member label."""
    if p.parent is not S and p.parent != S:
        raise ValueError("partition belongs to a different semigroup")
    if not is_congruence(S, p):
        raise ValueError("partition is not a congruence")
    cls = p.class_map()
    names = [min(b) for b in p.blocks]
    reps = [S.index(next(iter(b))) for b in p.blocks]
    table = tuple(tuple(cls[S.table[reps[u]][reps[v]]] for v in range(len(reps))) for u in range(len(reps)))
    Q = FiniteSemigroup(tuple(names), names[cls[S.zero_index]], table)
    proj = {x: names[cls[i]] for i, x in enumerate(S.elements)}
    return Q, HomomorphismMap(S, Q, proj)


def find_isomorphism(S: FiniteSemigroup, S2: FiniteSemigroup, bound: int = ISOMORPHISM_BOUND) -> dict[str, str] | None:
    """A zero-preserving multiplicative bijection S -> S2, or None.

    Backtracking over assignments of nonzero elements; a partial map is
    abandoned as soon as two assigned elements multiply inconsistently.
    """
    if S.order != S2.order:
        return None
    if S.order > bound:
        raise BoundExceeded("isomorphism search", S.order, bound)
    n = S.order
    z1, z2 = S.zero_index, S2.zero_index
    t1, t2 = S.table, S2.table
    # cheap invariant: number of zero products in each row and column
    def profile(T, z, i):
        return (sum(1 for j in range(n) if T[i][j] == z), sum(1 for j in range(n) if T[j][i] == z), T[i][i] == i)
    p1 = [profile(t1, z1, i) for i in range(n)]
    p2 = [profile(t2, z2, i) for i in range(n)]
    if sorted(p1) != sorted(p2):
        return None

    src = [i for i in range(n) if i != z1]
    f = [-1] * n
    f[z1] = z2
    used = [False] * n
    used[z2] = True
    assigned = [z1]

    def consistent(a: int) -> bool:
        for b in assigned:
            for x, y in ((a, b), (b, a)):
                prod = t1[x][y]
                if f[prod] >= 0 and f[prod] != t2[f[x]][f[y]]:
                    return False
        prod = t1[a][a]
        return f[prod] < 0 or f[prod] == t2[f[a]][f[a]]

    def rec(k: int) -> bool:
        if k == len(src):
            return True
        a = src[k]
        for c in range(n):
            if used[c] or p1[a] != p2[c]:
                continue
            f[a] = c
            used[c] = True
            assigned.append(a)
            if consistent(a) and rec(k + 1):
                return True
            assigned.pop()
            used[c] = False
            f[a] = -1
        return False

    if not rec(0):
        return None
    return {S.elements[i]: S2.elements[f[i]] for i in range(n)}


def canonical_form(S: FiniteSemigroup) -> tuple[int, ...]:
    """Lexicographically least relabelled table over zero-fixing relabellings.

    Two semigroups of equal order are isomorphic iff their canonical forms agree.
    """
    n, z = S.order, S.zero_index
    others = [i for i in range(n) if i != z]
    best = None
    for perm in itertools.permutations(others):
        order = [z, *perm]  # new index k holds old element order[k]
        pos = [0] * n
        for k, old in enumerate(order):
            pos[old] = k
        key = tuple(pos[S.table[order[u]][order[v]]] for u in range(n) for v in range(n))
        if best is None or key < best:
            best = key
    return best

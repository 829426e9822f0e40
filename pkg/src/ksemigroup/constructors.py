"""Ways of building semigroups that are categorical at zero.

* ``semigroup_of_category``: morphisms of a small category plus a zero,
  ``f*g`` is the composite "g then f" when ``dom f == cod g``.
* ``nilpotent_from_spec``: every 3-nilpotent K-semigroup arises this way.
* ``rees_semigroup``: Rees matrix semigroups over the trivial group.
* ``mor_extension``: morphisms from one subcategory into another, multiplied
  through a chosen connecting arrow.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .core import FiniteSemigroup, validate

ZERO = "0"


class CategoryError(ValueError):
    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems[:5]))


class SpecError(ValueError):
    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems[:5]))


# --- small categories ---------------------------------------------------------

@dataclass(frozen=True)
class SmallCategory:
    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]  # (name, dom, cod)
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str]  # (first, then) -> then . first
    _ends: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_ends", {m: (d, c) for m, d, c in self.morphisms})

    def dom(self, m: str) -> str:
        return self._ends[m][0]

    def cod(self, m: str) -> str:
        return self._ends[m][1]

    @property
    def names(self) -> list[str]:
        return [m for m, _, _ in self.morphisms]

    def compose(self, then: str, first: str) -> str:
        """``then . first``; requires ``cod first == dom then``."""
        try:
            return self.composition[(first, then)]
        except KeyError:
            raise CategoryError([f"no composite for first={first!r}, then={then!r}"]) from None

    def hom(self, a: str, b: str) -> list[str]:
        return [m for m, d, c in self.morphisms if d == a and c == b]

    def problems(self) -> list[str]:
        out = []
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            out.append("duplicate object labels")
        names = [m for m, _, _ in self.morphisms]
        if len(set(names)) != len(names):
            out.append("duplicate morphism names")
        if ZERO in names:
            out.append(f"morphism name {ZERO!r} is reserved for the zero")
        for m, d, c in self.morphisms:
            if d not in objs or c not in objs:
                out.append(f"morphism {m!r} has an unknown endpoint")
        if out:
            return out
        for o in self.objects:
            e = self.identities.get(o)
            if e is None or e not in self._ends:
                out.append(f"object {o!r} has no identity")
            elif self._ends[e] != (o, o):
                out.append(f"identity {e!r} of {o!r} is not an endomorphism of {o!r}")
        for (first, then), h in self.composition.items():
            if first not in self._ends or then not in self._ends or h not in self._ends:
                out.append(f"composition entry ({first}, {then}) -> {h} names an unknown morphism")
            elif self.cod(first) != self.dom(then):
                out.append(f"composition entry ({first}, {then}) is not a composable pair")
            elif self._ends[h] != (self.dom(first), self.cod(then)):
                out.append(f"composite of ({first}, {then}) has the wrong endpoints")
        if out:
            return out
        for f, g in itertools.product(names, repeat=2):
            if self.cod(f) == self.dom(g) and (f, g) not in self.composition:
                out.append(f"composite of first={f}, then={g} is missing")
        if out:
            return out
        for f in names:
            if self.compose(self.identities[self.cod(f)], f) != f or self.compose(f, self.identities[self.dom(f)]) != f:
                out.append(f"identity law fails at {f!r}")
        for f, g, h in itertools.product(names, repeat=3):
            if self.cod(f) == self.dom(g) and self.cod(g) == self.dom(h):
                if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                    out.append(f"associativity fails at ({f}, {g}, {h})")
        return out

    def validate(self) -> "SmallCategory":
        problems = self.problems()
        if problems:
            raise CategoryError(problems)
        return self

    @classmethod
    def from_json(cls, doc: Mapping) -> "SmallCategory":
        try:
            morphisms = tuple((m["name"], m["dom"], m["cod"]) for m in doc["morphisms"])
            comp = {}
            for entry in doc["composition"]:
                key = (entry["first"], entry["then"])
                if key in comp:
                    raise CategoryError([f"duplicate composition entry {key}"])
                comp[key] = entry["equals"]
            C = cls(tuple(doc["objects"]), morphisms, dict(doc["identities"]), comp)
        except (KeyError, TypeError) as exc:
            raise CategoryError([f"malformed category document: {exc!r}"]) from None
        return C.validate()

    def to_json(self) -> dict:
        return {
            "objects": list(self.objects),
            "morphisms": [{"name": m, "dom": d, "cod": c} for m, d, c in self.morphisms],
            "identities": {o: self.identities[o] for o in self.objects},
            "composition": [{"first": f, "then": g, "equals": h} for (f, g), h in self.composition.items()],
        }


def semigroup_of_category(C: SmallCategory) -> FiniteSemigroup:
    C.validate()
    names = C.names
    labels = [ZERO, *names]
    table = [[ZERO] * len(labels)]
    for f in names:
        row = [ZERO]
        for g in names:
            row.append(C.compose(f, g) if C.dom(f) == C.cod(g) else ZERO)
        table.append(row)
    return validate({"elements": labels, "zero": ZERO, "table": table})


def _function_category(sizes: Sequence[int], gens: Sequence[tuple[int, int, tuple[int, ...]]], cap: int):
    """Close a set of maps between finite sets under composition.

    Objects are ``range(len(sizes))``, object ``k`` is the set ``range(sizes[k])``.
    Returns the arrows ``(dom, cod, values)`` in discovery order, or None if
    the closure exceeds ``cap`` arrows.
    """
    arrows: list[tuple[int, int, tuple[int, ...]]] = [(k, k, tuple(range(s))) for k, s in enumerate(sizes)]
    seen = set(arrows)
    for g in gens:
        if g not in seen:
            seen.add(g)
            arrows.append(g)
    changed = True
    while changed:
        changed = False
        for f in list(arrows):
            for g in list(arrows):
                if f[1] == g[0]:
                    h = (f[0], g[1], tuple(g[2][v] for v in f[2]))
                    if h not in seen:
                        seen.add(h)
                        arrows.append(h)
                        changed = True
                        if len(arrows) > cap:
                            return None
    return arrows


def random_category(seed: int, object_count: int = 2, max_extra_arrows: int = 3,
                    max_morphisms: int = 8, max_tries: int = 200) -> SmallCategory:
    """Seeded random small category, realised concretely by maps between small sets.

    Extra arrows are random maps; the category is their closure under
    composition together with identities. Draws whose closure would exceed
    ``max_morphisms`` are retried with fewer generators.
    """
    if not 1 <= object_count <= 4:
        raise ValueError("object_count must be between 1 and 4")
    if max_morphisms < object_count:
        raise ValueError("max_morphisms must allow one identity per object")
    rng = random.Random(seed)
    for attempt in range(max_tries):
        sizes = [rng.randint(1, 3) for _ in range(object_count)]
        n_gens = rng.randint(0, max(0, max_extra_arrows - attempt // 20))
        gens = []
        for _ in range(n_gens):
            d, c = rng.randrange(object_count), rng.randrange(object_count)
            gens.append((d, c, tuple(rng.randrange(sizes[c]) for _ in range(sizes[d]))))
        arrows = _function_category(sizes, gens, max_morphisms)
        if arrows is None:
            continue
        objects = tuple(f"x{k}" for k in range(object_count))
        names = {}
        for a in arrows:
            if a[0] == a[1] and a[2] == tuple(range(sizes[a[0]])):
                names[a] = f"id{a[0]}"
        count = 0
        for a in arrows:
            if a not in names:
                count += 1
                names[a] = f"m{count}"
        morphisms = tuple((names[a], objects[a[0]], objects[a[1]]) for a in arrows)
        ids = {objects[k]: f"id{k}" for k in range(object_count)}
        comp = {}
        for f in arrows:
            for g in arrows:
                if f[1] == g[0]:
                    comp[(names[f], names[g])] = names[(f[0], g[1], tuple(g[2][v] for v in f[2]))]
        return SmallCategory(objects, morphisms, ids, comp).validate()
    raise RuntimeError(f"random_category: no category within {max_morphisms} morphisms after {max_tries} tries")


# --- 3-nilpotent K-semigroups -------------------------------------------------

@dataclass(frozen=True)
class NilpotentSpec:
    a_labels: tuple[str, ...]
    b_set: frozenset[str]
    c_set: frozenset[str]
    phi: Mapping[tuple[str, str], str]  # missing pairs map to zero

    def value(self, b: str, c: str) -> str:
        return self.phi.get((b, c), ZERO)

    def problems(self) -> list[str]:
        out = []
        A = set(self.a_labels)
        B, C = self.b_set, self.c_set
        if len(A) != len(self.a_labels):
            out.append("duplicate labels in A")
        if ZERO not in A:
            out.append(f"A must contain {ZERO!r}")
        if not B <= A or not C <= A:
            out.append("B and C must be subsets of A")
        if B | C != A:
            out.append(f"A is not B union C: missing {sorted(A - (B | C))}")
        if ZERO not in B & C:
            out.append(f"{ZERO!r} must lie in B and in C")
        b_only, c_only, both = B - C, C - B, B & C
        for (b, c), v in self.phi.items():
            if b not in b_only or c not in c_only:
                out.append(f"phi({b},{c}) is outside (B\\C) x (C\\B)")
            if v not in both:
                out.append(f"phi({b},{c}) = {v} is not in B n C")
        for b in sorted(b_only):
            if all(self.value(b, c) == ZERO for c in c_only):
                out.append(f"{b} in B\\C pairs to 0 with all of C\\B")
        for c in sorted(c_only):
            if all(self.value(b, c) == ZERO for b in b_only):
                out.append(f"{c} in C\\B pairs to 0 with all of B\\C")
        return out

    @classmethod
    def from_json(cls, doc: Mapping) -> "NilpotentSpec":
        try:
            phi = {}
            for entry in doc.get("phi", []):
                key = (entry["b"], entry["c"])
                if key in phi:
                    raise SpecError([f"duplicate phi entry {key}"])
                phi[key] = entry["value"]
            return cls(tuple(doc["A"]), frozenset(doc["B"]), frozenset(doc["C"]), phi)
        except (KeyError, TypeError) as exc:
            raise SpecError([f"malformed nilpotent spec: {exc!r}"]) from None

    def to_json(self) -> dict:
        order = {x: i for i, x in enumerate(self.a_labels)}
        key = order.__getitem__
        return {
            "A": list(self.a_labels),
            "B": sorted(self.b_set, key=key),
            "C": sorted(self.c_set, key=key),
            "phi": [{"b": b, "c": c, "value": v} for (b, c), v in sorted(self.phi.items(), key=lambda kv: (key(kv[0][0]), key(kv[0][1])))],
        }


def nilpotent_from_spec(spec: NilpotentSpec) -> FiniteSemigroup:
    problems = spec.problems()
    if problems:
        raise SpecError(problems)
    labels = list(spec.a_labels)
    table = []
    for x in labels:
        row = []
        for y in labels:
            if x in spec.c_set or y in spec.b_set:
                row.append(ZERO)
            else:
                row.append(spec.value(x, y))
        table.append(row)
    return validate({"elements": labels, "zero": ZERO, "table": table})


def random_nilpotent_spec(rng: random.Random, max_size: int = 8) -> NilpotentSpec:
    """A random valid spec: every row of B\\C and every column of C\\B has a nonzero φ value."""
    while True:
        n_both = rng.randint(0, max_size - 1)  # nonzero elements of B n C
        rest = max_size - 1 - n_both
        n_b = rng.randint(0, rest)
        n_c = rng.randint(0, rest - n_b)
        if (n_b == 0) != (n_c == 0):
            continue
        if n_b and not n_both:
            continue
        break
    both = [f"d{k}" for k in range(1, n_both + 1)]
    b_only = [f"b{k}" for k in range(1, n_b + 1)]
    c_only = [f"c{k}" for k in range(1, n_c + 1)]
    values = [ZERO, *both]
    phi = {(b, c): rng.choice(values) for b in b_only for c in c_only}
    for b in b_only:
        if all(phi[(b, c)] == ZERO for c in c_only):
            phi[(b, rng.choice(c_only))] = rng.choice(both)
    for c in c_only:
        if all(phi[(b, c)] == ZERO for b in b_only):
            phi[(rng.choice(b_only), c)] = rng.choice(both)
    phi = {k: v for k, v in phi.items() if v != ZERO}
    labels = (ZERO, *both, *b_only, *c_only)
    return NilpotentSpec(labels, frozenset([ZERO, *both, *b_only]), frozenset([ZERO, *both, *c_only]), phi)


# --- Rees matrix semigroups over the trivial group ----------------------------

def rees_label(i: str, lam: str) -> str:
    return f"({i},{lam})"


@dataclass(frozen=True)
class ReesSemigroup:
    i_labels: tuple[str, ...]
    lambda_labels: tuple[str, ...]
    w: tuple[tuple[int, ...], ...]  # rows indexed by lambda, columns by i

    def __post_init__(self):
        if len(self.w) != len(self.lambda_labels) or any(len(r) != len(self.i_labels) for r in self.w):
            raise ValueError(f"sandwich matrix must be {len(self.lambda_labels)}x{len(self.i_labels)} (rows indexed by Lambda)")
        if any(v not in (0, 1) for r in self.w for v in r):
            raise ValueError("sandwich entries must be 0 or 1")

    def entry(self, lam: str, i: str) -> int:
        return self.w[self.lambda_labels.index(lam)][self.i_labels.index(i)]

    def materialize(self) -> FiniteSemigroup:
        pairs = [(a, b) for a in range(len(self.i_labels)) for b in range(len(self.lambda_labels))]
        labels = [ZERO] + [rees_label(self.i_labels[a], self.lambda_labels[b]) for a, b in pairs]
        if len(set(labels)) != len(labels):
            raise ValueError("index labels produce clashing element names")
        pos = {p: k + 1 for k, p in enumerate(pairs)}
        rows = [tuple([0] * len(labels))]
        for i, lam in pairs:
            row = [0]
            for j, mu in pairs:
                row.append(pos[(i, mu)] if self.w[lam][j] else 0)
            rows.append(tuple(row))
        return FiniteSemigroup(tuple(labels), ZERO, tuple(rows))

    @classmethod
    def from_json(cls, doc: Mapping) -> "ReesSemigroup":
        try:
            return cls(tuple(doc["I"]), tuple(doc["Lambda"]), tuple(tuple(int(v) for v in r) for r in doc["W"]))
        except (KeyError, TypeError) as exc:
            raise SpecError([f"malformed Rees spec: {exc!r}"]) from None
        except ValueError as exc:
            raise SpecError([str(exc)]) from None

    def to_json(self) -> dict:
        return {"I": list(self.i_labels), "Lambda": list(self.lambda_labels), "W": [list(r) for r in self.w]}


def rees_semigroup(i_labels: Sequence[str], lambda_labels: Sequence[str], w: Sequence[Sequence[int]]) -> FiniteSemigroup:
    return ReesSemigroup(tuple(i_labels), tuple(lambda_labels), tuple(tuple(r) for r in w)).materialize()


def random_sandwich(rng: random.Random, max_dim: int = 4) -> ReesSemigroup:
    ni, nl = rng.randint(1, max_dim), rng.randint(1, max_dim)
    w = tuple(tuple(rng.randint(0, 1) for _ in range(ni)) for _ in range(nl))
    return ReesSemigroup(tuple(str(k) for k in range(1, ni + 1)), tuple(str(k) for k in range(1, nl + 1)), w)


# --- morphisms between two full subcategories ---------------------------------

@dataclass(frozen=True)
class MorExtensionSpec:
    """Subcategories are full and given by their object sets."""

    ambient: SmallCategory
    delta_objects: tuple[str, ...]
    d_objects: tuple[str, ...]
    epsilon: Mapping[str, str]

    def problems(self) -> list[str]:
        C = self.ambient
        out = [f"category: {p}" for p in C.problems()]
        if out:
            return out
        objs = set(C.objects)
        for o in (*self.delta_objects, *self.d_objects):
            if o not in objs:
                out.append(f"unknown object {o!r}")
        for a in self.d_objects:
            e = self.epsilon.get(a)
            if e is None:
                out.append(f"epsilon is not defined on {a!r}")
            elif e not in C.names:
                out.append(f"epsilon({a}) = {e!r} is not a morphism")
            elif C.dom(e) != a or C.cod(e) not in self.delta_objects:
                out.append(f"epsilon({a}) = {e!r} is not in Mor({a}, Delta)")
        for a in self.epsilon:
            if a not in self.d_objects:
                out.append(f"epsilon given on {a!r}, which is not an object of D")
        return out

    def bar(self, a: str) -> str:
        return self.ambient.cod(self.epsilon[a])

    def morphisms(self) -> list[str]:
        C = self.ambient
        return [m for m in C.names if C.dom(m) in self.delta_objects and C.cod(m) in self.d_objects]

    def expected_left_annihilator(self) -> frozenset[str]:
        """Elements whose domain is an object of Delta not hit by epsilon, plus zero."""
        image = {self.bar(a) for a in self.d_objects}
        C = self.ambient
        return frozenset([ZERO, *(g for g in self.morphisms() if C.dom(g) not in image)])

    @classmethod
    def from_json(cls, doc: Mapping) -> "MorExtensionSpec":
        try:
            C = SmallCategory.from_json(doc["category"])
            return cls(C, tuple(doc["delta"]), tuple(doc["d"]), dict(doc["epsilon"]))
        except (KeyError, TypeError) as exc:
            raise SpecError([f"malformed mor-extension spec: {exc!r}"]) from None

    def to_json(self) -> dict:
        return {"category": self.ambient.to_json(), "delta": list(self.delta_objects),
                "d": list(self.d_objects), "epsilon": dict(self.epsilon)}


def mor_extension(spec: MorExtensionSpec) -> FiniteSemigroup:
    """``g*f = g . eps_a . f`` for ``f: alpha -> a``, ``g: beta -> b`` when ``bar a == beta``."""
    problems = spec.problems()
    if problems:
        raise SpecError(problems)
    C = spec.ambient
    names = spec.morphisms()
    labels = [ZERO, *names]
    table = [[ZERO] * len(labels)]
    for g in names:
        row = [ZERO]
        for f in names:
            a = C.cod(f)
            if spec.bar(a) == C.dom(g):
                row.append(C.compose(g, C.compose(spec.epsilon[a], f)))
            else:
                row.append(ZERO)
        table.append(row)
    return validate({"elements": labels, "zero": ZERO, "table": table})


def mor_extension_discrepancies(spec: MorExtensionSpec, S: FiniteSemigroup | None = None) -> list[str]:
    """Where the computed annihilators of ``mor_extension(spec)`` differ from the closed forms.

    Expected: the right annihilator is {0} and the left annihilator is the
    set of arrows whose domain lies in Delta but outside the image of epsilon.
    An empty list means the instance agrees with both.
    """
    from .k_analysis import annihilators

    if S is None:
        S = mor_extension(spec)
    ann = annihilators(S)
    out = []
    if ann.right != {ZERO}:
        out.append(f"right annihilator is {sorted(ann.right, key=S.index)}, expected ['0']")
    expected = spec.expected_left_annihilator()
    if ann.left != expected:
        out.append(f"left annihilator is {sorted(ann.left, key=S.index)}, expected {sorted(expected, key=S.index)}")
    return out

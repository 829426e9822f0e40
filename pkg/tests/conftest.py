import pytest

from ksemigroup import SmallCategory, validate


def table(elements, rows):
    return validate({"elements": elements, "zero": "0", "table": rows})


@pytest.fixture
def trivial():
    return table(["0"], [["0"]])


@pytest.fixture
def null2():
    return table(["0", "a"], [["0", "0"], ["0", "0"]])


@pytest.fixture
def semilattice2():
    return table(["0", "e"], [["0", "0"], ["0", "e"]])


@pytest.fixture
def a2b():
    """a*a = b, every other product 0: 3-nilpotent but not categorical at zero."""
    return table(["0", "a", "b"], [["0", "0", "0"], ["0", "b", "0"], ["0", "0", "0"]])


def category(objects, morphisms, identities, composition):
    return SmallCategory(tuple(objects), tuple(morphisms), identities, composition).validate()


@pytest.fixture
def one_object():
    return category(["x"], [("id", "x", "x")], {"x": "id"}, {("id", "id"): "id"})


@pytest.fixture
def two_identities():
    return category(["x", "y"], [("ix", "x", "x"), ("iy", "y", "y")], {"x": "ix", "y": "iy"},
                    {("ix", "ix"): "ix", ("iy", "iy"): "iy"})


@pytest.fixture
def arrow():
    """x --f--> y with identities."""
    return category(["x", "y"], [("ix", "x", "x"), ("iy", "y", "y"), ("f", "x", "y")], {"x": "ix", "y": "iy"},
                    {("ix", "ix"): "ix", ("iy", "iy"): "iy", ("ix", "f"): "f", ("f", "iy"): "f"})


@pytest.fixture
def split_idempotent():
    """Objects p, q; e: q->p, h: p->q with e.h = id_p and k = h.e idempotent on q."""
    comp = {
        ("ip", "ip"): "ip", ("iq", "iq"): "iq",
        ("h", "e"): "ip", ("e", "h"): "k",
        ("h", "k"): "h", ("k", "e"): "e", ("k", "k"): "k",
        ("ip", "h"): "h", ("h", "iq"): "h", ("iq", "e"): "e", ("e", "ip"): "e",
        ("iq", "k"): "k", ("k", "iq"): "k",
    }
    return category(["p", "q"], [("ip", "p", "p"), ("iq", "q", "q"), ("e", "q", "p"), ("h", "p", "q"), ("k", "q", "q")],
                    {"p": "ip", "q": "iq"}, comp)

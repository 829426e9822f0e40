import json

import pytest

from ksemigroup import MorExtensionSpec, NilpotentSpec, SmallCategory, validate
from ksemigroup.cli import run
from ksemigroup.constructors import ReesSemigroup


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


NULL2 = {"elements": ["0", "a"], "zero": "0", "table": [["0", "0"], ["0", "0"]]}
A2B = {"elements": ["0", "a", "b"], "zero": "0", "table": [["0", "0", "0"], ["0", "b", "0"], ["0", "0", "0"]]}


def test_analyze_null(capsys, write):
    code, out, _ = call(capsys, "analyze", "--input", write("null2.json", NULL2))
    doc = json.loads(out)
    assert code == 0
    assert doc["k_semigroup"] is True
    assert doc["annihilators"]["quasi"] == ["0", "a"]
    assert doc["nilpotency_degree"] == 2


def test_decompose_non_k(capsys, write):
    code, out, _ = call(capsys, "decompose", "--input", write("a2b.json", A2B))
    assert code == 1
    assert json.loads(out) == {"k_semigroup": False, "witness": ["a", "a", "a"]}


def test_decompose_ok(capsys, write, arrow):
    from ksemigroup import semigroup_of_category
    S = semigroup_of_category(arrow)
    code, out, _ = call(capsys, "decompose", "--input", write("s.json", S.to_json()))
    assert code == 0
    doc = json.loads(out)
    assert doc["annihilators"]["quasi"] == ["0"]
    assert doc["sandwich"]["rows"] == [[1, 0], [0, 1]]


def test_validate(capsys, write):
    code, out, _ = call(capsys, "validate", "--input", write("ok.json", A2B))
    assert code == 0 and json.loads(out)["valid"]
    bad = {"elements": ["0", "a"], "zero": "0", "table": [["0", "a"], ["0", "0"]]}
    code, out, _ = call(capsys, "validate", "--input", write("bad.json", bad))
    doc = json.loads(out)
    assert code == 1 and not doc["valid"]
    assert {"kind": "associativity", "elements": ["a", "a", "a"], "message": doc["violations"][-1]["message"],
            "left": "a", "right": "0"} in doc["violations"]


def test_usage_errors(capsys, write, tmp_path):
    code, _, err = call(capsys, "analyze", "--input", write("x.json", "{not json"))
    assert code == 2 and "malformed JSON" in err
    code, _, err = call(capsys, "analyze", "--input", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, _ = call(capsys, "analyze", "--bogus")
    assert code == 2
    code, _, err = call(capsys, "enumerate", "--order", "5")
    assert code == 2 and "capped" in err
    code, _, err = call(capsys, "analyze", "--input", write("bad.json", {"elements": ["0"], "zero": "z", "table": [["0"]]}))
    assert code == 2


def test_construct_all_kinds(capsys, write, arrow, split_idempotent):
    specs = {
        "category": arrow.to_json(),
        "nilpotent": {"A": ["0", "b", "c", "d"], "B": ["0", "b", "d"], "C": ["0", "c", "d"],
                      "phi": [{"b": "b", "c": "c", "value": "d"}]},
        "rees": {"I": ["1", "2"], "Lambda": ["1", "2"], "W": [[1, 0], [0, 1]]},
        "mor-ext": {"category": split_idempotent.to_json(), "delta": ["p", "q"], "d": ["q"], "epsilon": {"q": "e"}},
    }
    for kind, spec in specs.items():
        code, out, _ = call(capsys, "construct", kind, "--input", write(f"{kind}.json", spec))
        assert code == 0, kind
        validate(json.loads(out))
    # spec documents re-parse through their own readers
    SmallCategory.from_json(specs["category"])
    NilpotentSpec.from_json(specs["nilpotent"])
    ReesSemigroup.from_json(specs["rees"])
    MorExtensionSpec.from_json(specs["mor-ext"])


def test_construct_bad_spec(capsys, write):
    bad = {"A": ["0", "b", "c"], "B": ["0", "b"], "C": ["0", "c"], "phi": []}
    code, _, err = call(capsys, "construct", "nilpotent", "--input", write("bad.json", bad))
    assert code == 2 and "pairs to 0 with all of C\\B" in err


def test_enumerate_lines_and_count(capsys):
    code, out, _ = call(capsys, "enumerate", "--order", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 20
    for line in lines:
        validate(json.loads(line))
    code, out, _ = call(capsys, "enumerate", "--order", "4", "--k-only", "--up-to-iso", "--count")
    assert json.loads(out)["count"] == 59
    assert json.loads(out)["tables_scanned"] == 262144


def test_enumerate_jobs_byte_identical(capsys):
    _, one, _ = call(capsys, "enumerate", "--order", "3", "--jobs", "1")
    _, four, _ = call(capsys, "enumerate", "--order", "3", "--jobs", "4")
    assert one == four


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--max-order", "3")
    doc = json.loads(out)
    assert code == 0 and doc["property_failures"] == []


def test_check_category(capsys, write, arrow):
    from ksemigroup import semigroup_of_category
    s = write("s.json", semigroup_of_category(arrow).to_json())
    c = write("c.json", arrow.to_json())
    code, out, _ = call(capsys, "check-category", "--semigroup", s, "--category", c)
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    code, out, _ = call(capsys, "check-category", "--semigroup", write("n.json", NULL2), "--category", c)
    assert code == 1


def test_text_format_and_output_file(capsys, write, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = call(capsys, "construct", "rees", "--format", "text", "--output", str(target),
                        "--input", write("r.json", {"I": ["1"], "Lambda": ["1"], "W": [[1]]}))
    assert code == 0 and out == ""
    text = target.read_text()
    assert "(1,1) |     0 (1,1)" in text


def test_outputs_are_deterministic(capsys, write, arrow):
    from ksemigroup import semigroup_of_category
    path = write("s.json", semigroup_of_category(arrow).to_json())
    _, a, _ = call(capsys, "decompose", "--input", path)
    _, b, _ = call(capsys, "decompose", "--input", path)
    assert a == b

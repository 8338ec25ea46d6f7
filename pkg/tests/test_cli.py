import json

import pytest

from liecohom.catalog import CATALOG_KEYS, catalog_entry
from liecohom.cli import main


def write_doc(tmp_path, doc, name="doc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def so3_doc():
    return {
        "name": "so3",
        "dimension": 3,
        "field": "Q",
        "brackets": [
            {"i": 1, "j": 2, "terms": [{"k": 3, "coeff": "1"}]},
            {"i": 2, "j": 3, "terms": [{"k": 1, "coeff": "1"}]},
            {"i": 1, "j": 3, "terms": [{"k": 2, "coeff": "-1"}]},
        ],
    }


def abelian_doc(n):
    return {"name": "abelian_%d" % n, "dimension": n, "field": "Q", "brackets": []}


def bad_jacobi_doc():
    return {
        "name": "bad",
        "dimension": 3,
        "field": "Q",
        "brackets": [
            {"i": 1, "j": 2, "terms": [{"k": 1, "coeff": "1"}]},
            {"i": 1, "j": 3, "terms": [{"k": 3, "coeff": "1"}]},
        ],
    }


def heis_pipeline_doc():
    return {
        "algebra": {
            "name": "heisenberg3",
            "dimension": 3,
            "field": "Q",
            "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "coeff": "1"}]}],
        },
        "ideal": {"vectors": [["0", "0", "1"]]},
        "note": "central circle",
    }


def non_ideal_pipeline_doc():
    doc = {"algebra": so3_doc(), "ideal": {"vectors": [["1", "0", "0"]]}}
    return doc


# ---------------------------------------------------------------------------
# validate

def test_validate_algebra_ok(tmp_path, capsys):
    path = write_doc(tmp_path, so3_doc())
    assert main(["validate", path]) == 0
    out = capsys.readouterr().out
    assert "algebra: so3" in out
    assert "jacobi: ok" in out


def test_validate_pipeline_ok(tmp_path, capsys):
    path = write_doc(tmp_path, heis_pipeline_doc())
    assert main(["validate", path]) == 0
    out = capsys.readouterr().out
    assert "ideal: ok (dimension 1)" in out


def test_validate_jacobi_violation(tmp_path, capsys):
    path = write_doc(tmp_path, bad_jacobi_doc())
    assert main(["validate", path]) == 1
    out = capsys.readouterr().out
    assert "jacobi: FAIL" in out
    assert "(1, 2, 3)" in out


def test_validate_jacobi_violation_json(tmp_path, capsys):
    path = write_doc(tmp_path, bad_jacobi_doc())
    assert main(["validate", "--json", path]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "jacobi_violation"
    assert payload["violations"][0] == {
        "i": 1, "j": 2, "k": 3, "residual": ["0", "0", "1"]
    }


def test_validate_not_an_ideal(tmp_path, capsys):
    path = write_doc(tmp_path, non_ideal_pipeline_doc())
    assert main(["validate", path]) == 2
    assert "ideal: FAIL" in capsys.readouterr().out


def test_validate_parse_failures(tmp_path, capsys):
    missing = str(tmp_path / "absent.json")
    assert main(["validate", missing]) == 3
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json", encoding="utf-8")
    assert main(["validate", str(garbage)]) == 3
    unknown_key = dict(so3_doc())
    unknown_key["extra"] = 1
    path = write_doc(tmp_path, unknown_key)
    assert main(["validate", path]) == 3
    err = capsys.readouterr().err
    assert "error:" in err


# ---------------------------------------------------------------------------
# cohomology

def test_cohomology_so3(tmp_path, capsys):
    path = write_doc(tmp_path, so3_doc())
    assert main(["cohomology", path]) == 0
    out = capsys.readouterr().out
    assert "betti: 1 0 0 1" in out
    assert "ranks: 0 3 0 0" in out


def test_cohomology_abelian5(tmp_path, capsys):
    path = write_doc(tmp_path, abelian_doc(5))
    assert main(["cohomology", path]) == 0
    assert "betti: 1 5 10 10 5 1" in capsys.readouterr().out


def test_cohomology_representatives(tmp_path, capsys):
    path = write_doc(tmp_path, so3_doc())
    assert main(["cohomology", "--representatives", path]) == 0
    out = capsys.readouterr().out
    assert "representatives:" in out
    assert "degree 3: t[1,2,3]" in out


def test_cohomology_json(tmp_path, capsys):
    path = write_doc(tmp_path, so3_doc())
    assert main(["cohomology", "--json", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["algebra"] == "so3"
    assert payload["betti"] == [1, 0, 0, 1]
    assert payload["ranks"] == [0, 3, 0, 0]
    degrees = [r["degree"] for r in payload["representatives"]]
    assert degrees == [0, 3]


def test_cohomology_rejects_pipeline_doc(tmp_path, capsys):
    path = write_doc(tmp_path, heis_pipeline_doc())
    assert main(["cohomology", path]) == 3
    assert "quotient command" in capsys.readouterr().err


def test_cohomology_jacobi_exit(tmp_path, capsys):
    path = write_doc(tmp_path, bad_jacobi_doc())
    assert main(["cohomology", path]) == 1
    capsys.readouterr()


def test_cohomology_dimension_cap(tmp_path, capsys):
    path = write_doc(tmp_path, abelian_doc(21))
    assert main(["cohomology", path]) == 4
    path = write_doc(tmp_path, so3_doc(), name="so3.json")
    assert main(["cohomology", "--max-dim", "2", path]) == 4
    err = capsys.readouterr().err
    assert "cap" in err


# ---------------------------------------------------------------------------
# quotient

def test_quotient_heisenberg(tmp_path, capsys):
    path = write_doc(tmp_path, heis_pipeline_doc())
    assert main(["quotient", path]) == 0
    out = capsys.readouterr().out
    assert "quotient_dim: 2" in out
    assert "abelian_quotient: true" in out
    assert "chain_iso: verified" in out
    assert "betti: 1 2 1" in out
    assert "note: central circle" in out


def test_quotient_no_chain_iso(tmp_path, capsys):
    path = write_doc(tmp_path, heis_pipeline_doc())
    assert main(["quotient", "--no-chain-iso", path]) == 0
    assert "chain_iso: skipped" in capsys.readouterr().out


def test_quotient_json(tmp_path, capsys):
    path = write_doc(tmp_path, heis_pipeline_doc())
    assert main(["quotient", "--json", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["quotient_dim"] == 2
    assert payload["abelian_quotient"] is True
    assert payload["chain_iso_verified"] is True
    assert payload["report"]["betti"] == [1, 2, 1]


def test_quotient_torus_catalog_doc(tmp_path, capsys):
    entry = catalog_entry("torus2_alpha")
    path = write_doc(tmp_path, entry.document)
    assert main(["quotient", path]) == 0
    out = capsys.readouterr().out
    assert "quotient_dim: 1" in out
    assert "betti: 1 1" in out


def test_quotient_not_an_ideal(tmp_path, capsys):
    path = write_doc(tmp_path, non_ideal_pipeline_doc())
    assert main(["quotient", path]) == 2
    assert "ideal: FAIL" in capsys.readouterr().out


def test_quotient_rejects_plain_algebra(tmp_path, capsys):
    path = write_doc(tmp_path, so3_doc())
    assert main(["quotient", path]) == 3
    assert "cohomology command" in capsys.readouterr().err


def test_quotient_dimension_cap(tmp_path, capsys):
    doc = {"algebra": abelian_doc(21), "ideal": {"vectors": []}}
    path = write_doc(tmp_path, doc)
    assert main(["quotient", path]) == 4
    capsys.readouterr()


# ---------------------------------------------------------------------------
# catalog

def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    for key in CATALOG_KEYS:
        assert key in out


def test_catalog_list_json(capsys):
    assert main(["catalog", "list", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["keys"] == list(CATALOG_KEYS)


def test_catalog_show(capsys):
    assert main(["catalog", "show", "so3"]) == 0
    out = capsys.readouterr().out
    assert "key: so3" in out
    assert "expected betti: 1 0 0 1" in out


def test_catalog_show_abelian_family(capsys):
    assert main(["catalog", "show", "abelian_4"]) == 0
    out = capsys.readouterr().out
    assert "expected betti: 1 4 6 4 1" in out


def test_catalog_show_doc_round_trips(tmp_path, capsys):
    assert main(["catalog", "show", "heisenberg3", "--doc"]) == 0
    text = capsys.readouterr().out
    assert json.loads(text) == catalog_entry("heisenberg3").document
    path = tmp_path / "heis.json"
    path.write_text(text, encoding="utf-8")
    assert main(["validate", str(path)]) == 0
    capsys.readouterr()
    assert main(["cohomology", str(path)]) == 0
    assert "betti: 1 2 2 1" in capsys.readouterr().out


def test_catalog_show_unknown(capsys):
    assert main(["catalog", "show", "no_such_algebra"]) == 3
    assert "error:" in capsys.readouterr().err


def test_catalog_show_missing_key(capsys):
    assert main(["catalog", "show"]) == 3
    capsys.readouterr()


def test_catalog_documents_round_trip(tmp_path, capsys):
    # every shipped document must validate and reproduce its stated numbers
    for key in CATALOG_KEYS:
        entry = catalog_entry(key)
        path = write_doc(tmp_path, entry.document, name="%s.json" % key)
        assert main(["validate", path]) == 0, key
        capsys.readouterr()
        if "algebra" in entry.document:
            assert main(["quotient", path]) == 0, key
        else:
            assert main(["cohomology", path]) == 0, key
        out = capsys.readouterr().out
        expected = "betti: %s" % " ".join(str(b) for b in entry.expected_betti)
        assert expected in out, key


def test_argparse_usage_errors_exit_2():
    # malformed invocations are argparse's domain; its usage failures exit 2
    # before any document is read, distinct from our not-an-ideal code path
    with pytest.raises(SystemExit) as exc_info:
        main(["cohomology"])
    assert exc_info.value.code == 2
    with pytest.raises(SystemExit) as exc_info:
        main(["selftest", "--seed", "-1"])
    assert exc_info.value.code == 2


# ---------------------------------------------------------------------------
# selftest

def test_selftest_passes_and_is_deterministic(capsys):
    assert main(["selftest", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert "selftest: PASS" in first
    assert main(["selftest", "--seed", "5"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_selftest_fails_at_impossible_tolerance(capsys):
    assert main(["selftest", "--tol", "1e-15"]) == 5
    out = capsys.readouterr().out
    assert "selftest: FAIL" in out
    assert "maurer_cartan_numeric" in out

import json

import pytest

from conicbundle import certify
from conicbundle.certify import (
    AXIOM,
    CITATION_KEYS,
    LEAF_IDS,
    CaseLeaf,
    parse_certificate,
    run_full_verification,
    serialize_certificate,
    summarize,
)


@pytest.fixture(scope="module")
def cert():
    return run_full_verification()


def test_all_leaves_pass(cert):
    failing = [leaf.id for leaf in cert.leaves if not leaf.passed]
    assert failing == []
    assert cert.summary == {"admissible_degrees": [4, 5], "all_passed": True}
    assert cert.bounds == {"d_max": 42, "delta_max": 31}


def test_leaf_ids_cover_the_decomposition(cert):
    assert [leaf.id for leaf in cert.leaves] == list(LEAF_IDS)
    assert len(set(LEAF_IDS)) == len(LEAF_IDS)


def test_axiom_leaves_cite_known_sources(cert):
    axioms = [leaf for leaf in cert.leaves if leaf.method == AXIOM]
    cited = {key for leaf in axioms for key in leaf.parameters["citation"]}
    assert cited == set(CITATION_KEYS)
    assert all(leaf.status == "axiom-closed" for leaf in axioms)


def test_axiom_without_citation_fails():
    leaf = CaseLeaf("x", "-", AXIOM, "axiom-closed", {"citation": []}, [], {}).evaluate()
    assert not leaf.passed
    leaf = CaseLeaf("x", "-", AXIOM, "axiom-closed", {"citation": ["Wikipedia"]}, [], {}).evaluate()
    assert not leaf.passed


def test_leaf_rejects_unknown_method():
    with pytest.raises(ValueError):
        CaseLeaf("x", "-", "guess", "closed", {}, [], {})


def test_quartic_scroll_witnesses(cert):
    leaf = cert.leaf("quartic-scroll")
    assert [w["class_data"]["label"] for w in leaf.witnesses] == ["3E-F", "6E+2F"]
    residuals = [cert.leaf(f"quartic-scroll-residual-{c}").witnesses[0] for c in ("3E-F", "6E+2F")]
    assert [(r["residual_degree"], r["residual_p_a"]) for r in residuals] == [(9, 16), (24, 133)]
    assert [r["castelnuovo_p3"] for r in residuals] == [12, 121]
    assert all(r["impossible"] for r in residuals)


def test_endgame_witnesses(cert):
    keys = [(w["d"], w["delta"], w["g"], w["pi"]) for w in cert.leaf("endgame").witnesses]
    assert keys == [(4, 2, 0, 1), (5, 2, 0, 2), (8, 4, 1, 5)]


def test_no_unresolved_survivors(cert):
    assert certify.unresolved_survivors(cert.leaves) == {}


def test_removing_okonek_reopens_degree_eight():
    cert = run_full_verification(omit=["okonek-degree-8"])
    assert cert.summary == {"admissible_degrees": [4, 5, 8], "all_passed": False}


def test_removing_a_residual_leaf_leaves_a_survivor_open():
    cert = run_full_verification(omit=["quartic-scroll-residual-6E+2F"])
    assert certify.unresolved_survivors(cert.leaves) == {"quartic-scroll": [[36, 26, 65]]}
    assert not cert.all_passed


def test_removing_cone_closure_leaves_cone_open():
    cert = run_full_verification(omit=["cone-case-closure"])
    assert "cone-case" in certify.unresolved_survivors(cert.leaves)
    assert cert.summary["admissible_degrees"] == [4, 5]
    assert not cert.all_passed


def test_unknown_omitted_leaf_rejected():
    with pytest.raises(ValueError):
        run_full_verification(omit=["no-such-leaf"])


def test_delta_max_tamper_is_caught():
    cert = run_full_verification(delta_max=25)
    leaf = cert.leaf("quartic-scroll")
    assert not leaf.passed
    assert [w["class_data"]["label"] for w in leaf.witnesses] == ["3E-F"]
    assert not cert.all_passed


def test_summary_is_computed_from_leaves(cert):
    leaves = [leaf for leaf in cert.leaves]
    endgame = next(leaf for leaf in leaves if leaf.id == "endgame")
    forged = CaseLeaf(**{**endgame.__dict__, "witnesses": endgame.witnesses[:1]})
    patched = [forged if leaf.id == "endgame" else leaf for leaf in leaves]
    assert summarize(patched)["admissible_degrees"] == [4]


def test_json_round_trip(cert):
    data = serialize_certificate(cert, "json")
    assert parse_certificate(data) == cert
    assert serialize_certificate(parse_certificate(data), "json") == data


def test_json_schema(cert):
    doc = json.loads(serialize_certificate(cert, "json"))
    assert list(doc) == ["version", "bounds", "leaves", "summary"]
    assert list(doc["bounds"]) == ["d_max", "delta_max"]
    assert list(doc["summary"]) == ["admissible_degrees", "all_passed"]
    for leaf in doc["leaves"]:
        assert list(leaf) == [
            "id", "section", "method", "status", "parameters", "witnesses", "expected", "passed",
        ]
        assert isinstance(leaf["parameters"], dict)
        assert isinstance(leaf["witnesses"], list)
        assert isinstance(leaf["expected"], dict)
        assert isinstance(leaf["passed"], bool)


def test_deterministic():
    a = serialize_certificate(run_full_verification(), "json")
    b = serialize_certificate(run_full_verification(), "json")
    assert a == b


def test_text_report(cert):
    text = serialize_certificate(cert, "text").decode("utf-8")
    lines = text.rstrip("\n").splitlines()
    assert lines[-1] == "THEOREM: degree ∈ {4, 5} — VERIFIED"
    for leaf_id in LEAF_IDS:
        assert any(line.startswith(leaf_id + " ") for line in lines)


def test_text_report_failure():
    text = serialize_certificate(run_full_verification(omit=["okonek-degree-8"]), "text").decode()
    assert "missing leaves: okonek-degree-8" in text
    assert text.rstrip().endswith("NOT VERIFIED")


def test_unknown_format():
    with pytest.raises(ValueError):
        serialize_certificate(run_full_verification(), "xml")

"""JSON round-trips for quivers, certificates, and reports."""

from __future__ import annotations

import pytest

from quiverforge.errors import MalformedDocumentError, TwoCycleError
from quiverforge.membership import ClassId, MembershipSearcher, check_certificate
from quiverforge.quiver import from_arrows
from quiverforge.search import SearchBudget, explore_class
from quiverforge.serialization import (
    analysis_report,
    budget_from_dict,
    budget_to_dict,
    certificate_from_dict,
    certificate_to_dict,
    certify_result_to_dict,
    class_id_from_string,
    dumps_canonical,
    exploration_to_dict,
    quiver_from_dict,
    quiver_hash,
    quiver_to_dict,
)

from helpers import remark_quiver


def test_quiver_roundtrip():
    q = remark_quiver()
    assert quiver_from_dict(quiver_to_dict(q)) == q


def test_quiver_dict_shape():
    q = from_arrows(2, [(1, 2, 3)])
    assert quiver_to_dict(q) == {"n": 2, "arrows": [[1, 2, 3]]}


def test_quiver_hash_is_stable_and_label_sensitive():
    q = from_arrows(2, [(1, 2, 1)])
    r = from_arrows(2, [(2, 1, 1)])
    assert quiver_hash(q) == quiver_hash(q)
    assert quiver_hash(q) != quiver_hash(r)


@pytest.mark.parametrize(
    "doc",
    [
        None,
        [],
        {},
        {"n": 2},
        {"arrows": []},
        {"n": "2", "arrows": []},
        {"n": 2, "arrows": [[1, 2]]},
        {"n": 2, "arrows": [[1, 2, "1"]]},
        {"n": 2, "arrows": "nope"},
    ],
)
def test_malformed_quiver_docs(doc):
    with pytest.raises(MalformedDocumentError):
        quiver_from_dict(doc)


def test_semantic_quiver_errors_pass_through():
    with pytest.raises(TwoCycleError):
        quiver_from_dict({"n": 2, "arrows": [[1, 2, 1], [2, 1, 1]]})


def test_analysis_report_remark():
    report = analysis_report(remark_quiver())
    assert report == {
        "acyclic": False,
        "sources": [6],
        "sinks": [],
        "cycle_vertices": [1, 2, 3, 4, 5],
        "covering_pairs": [[6, 5]],
    }


def test_budget_roundtrip_and_defaults():
    assert budget_from_dict(None) == SearchBudget()
    b = SearchBudget(max_iso_classes=7, max_millis=100)
    assert budget_from_dict(budget_to_dict(b)) == b
    assert budget_from_dict({"max_depth": 3}) == SearchBudget(max_depth=3)
    with pytest.raises(MalformedDocumentError):
        budget_from_dict({"bogus": 1})
    with pytest.raises(MalformedDocumentError):
        budget_from_dict({"max_depth": "3"})


def test_exploration_dict_shape():
    exp = explore_class(from_arrows(3, [(1, 2, 1), (2, 3, 1)]))
    doc = exploration_to_dict(exp)
    assert doc["exhausted"] is True
    assert doc["truncation_reason"] is None
    assert len(doc["representatives"]) == 4
    assert all(len(edge) == 3 for edge in doc["edges"])


def test_certificate_roundtrip_every_kind():
    searcher = MembershipSearcher()
    q = remark_quiver()
    for cls in (ClassId.BANFF, ClassId.LOUISE):
        verdict = searcher.derive(q, cls)
        assert verdict.is_certified
        doc = certificate_to_dict(verdict.witness)
        back = certificate_from_dict(doc)
        assert back == verdict.witness
        assert check_certificate(q, back, cls)
    # prime and triangular kinds
    p2 = from_arrows(2, [(1, 2, 1)])
    for cls in (ClassId.BANFF_PRIME, ClassId.LOUISE_PRIME, ClassId.P_PRIME):
        verdict = searcher.derive(p2, cls)
        assert verdict.is_certified
        back = certificate_from_dict(certificate_to_dict(verdict.witness))
        assert back == verdict.witness


def test_certificate_malformed_docs():
    with pytest.raises(MalformedDocumentError):
        certificate_from_dict({"kind": "mystery"})
    with pytest.raises(MalformedDocumentError):
        certificate_from_dict({"kind": "mutation_step", "sequence": [1]})
    with pytest.raises(MalformedDocumentError):
        certificate_from_dict(
            {"kind": "source_sink_split", "arrow": [1, 2], "mode": "sideways"}
        )
    with pytest.raises(MalformedDocumentError):
        certificate_from_dict(42)


def test_class_id_parsing():
    assert class_id_from_string("banff") is ClassId.BANFF
    assert class_id_from_string("pprime") is ClassId.P_PRIME
    with pytest.raises(MalformedDocumentError):
        class_id_from_string("fancy")


def test_certify_result_shapes():
    searcher = MembershipSearcher()
    q = from_arrows(3, [(1, 2, 1), (2, 3, 1)])
    verdict = searcher.derive(q, ClassId.BANFF)
    doc = certify_result_to_dict(ClassId.BANFF, verdict)
    assert doc["class"] == "banff"
    assert doc["verdict"] == "certified"
    assert doc["certificate"]["kind"] == "base_acyclic"


def test_dumps_canonical_is_deterministic():
    a = dumps_canonical({"b": 1, "a": [3, 2]})
    b = dumps_canonical({"a": [3, 2], "b": 1})
    assert a == b == '{"a":[3,2],"b":1}'

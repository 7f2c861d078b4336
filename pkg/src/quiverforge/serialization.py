"""JSON schemas shared by the CLI, the HTTP service, and the explorer UI.

Quiver documents are {"n": int, "arrows": [[src, dst, mult], ...]};
certificates are tagged unions keyed by "kind".  Everything round-trips
through dumps_canonical so the CLI and the service emit byte-identical
result JSON.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Optional

from . import membership as mb
from .errors import MalformedDocumentError
from .quiver import Quiver, from_arrows
from .search import ClassExploration, SearchBudget, Verdict
from .structure import (
    CrossDirection,
    covering_pairs,
    cycle_vertices,
    is_acyclic,
    sinks,
    sources,
)


def dumps_canonical(obj: Any) -> str:
    """Deterministic JSON: sorted keys, no whitespace."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


# --------------------------------------------------------------------------
# Quivers
# --------------------------------------------------------------------------


def quiver_to_dict(q: Quiver) -> dict:
    return {"n": q.n, "arrows": [[i, j, m] for i, j, m in q.arrows()]}


def quiver_from_dict(doc: Any) -> Quiver:
    if not isinstance(doc, dict):
        raise MalformedDocumentError("quiver document must be an object")
    if "n" not in doc or "arrows" not in doc:
        raise MalformedDocumentError('quiver document needs "n" and "arrows"')
    n = doc["n"]
    arrows = doc["arrows"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise MalformedDocumentError('"n" must be an integer')
    if not isinstance(arrows, list):
        raise MalformedDocumentError('"arrows" must be a list')
    triples = []
    for entry in arrows:
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise MalformedDocumentError(f"arrow entry {entry!r} is not [src, dst, mult]")
        triples.append((entry[0], entry[1], entry[2]))
    return from_arrows(n, triples)


def quiver_hash(q: Quiver) -> str:
    """Stable content hash of a quiver document."""
    return hashlib.sha256(dumps_canonical(quiver_to_dict(q)).encode()).hexdigest()


# --------------------------------------------------------------------------
# Analysis reports
# --------------------------------------------------------------------------


def analysis_report(q: Quiver) -> dict:
    return {
        "acyclic": is_acyclic(q),
        "sources": sorted(sources(q)),
        "sinks": sorted(sinks(q)),
        "cycle_vertices": sorted(cycle_vertices(q)),
        "covering_pairs": [[i, j] for i, j in covering_pairs(q)],
    }


# --------------------------------------------------------------------------
# Budgets, explorations, verdicts
# --------------------------------------------------------------------------


def budget_to_dict(budget: SearchBudget) -> dict:
    return {
        "max_iso_classes": budget.max_iso_classes,
        "max_depth": budget.max_depth,
        "max_abs_entry": budget.max_abs_entry,
        "max_millis": budget.max_millis,
    }


def budget_from_dict(doc: Any) -> SearchBudget:
    if doc is None:
        return SearchBudget()
    if not isinstance(doc, dict):
        raise MalformedDocumentError("budget must be an object")
    defaults = SearchBudget()
    kwargs = {}
    for field in ("max_iso_classes", "max_depth", "max_abs_entry", "max_millis"):
        value = doc.get(field, getattr(defaults, field))
        if not isinstance(value, int) or isinstance(value, bool):
            raise MalformedDocumentError(f'budget field "{field}" must be an integer')
        kwargs[field] = value
    unknown = set(doc) - {"max_iso_classes", "max_depth", "max_abs_entry", "max_millis"}
    if unknown:
        raise MalformedDocumentError(f"unknown budget fields {sorted(unknown)}")
    return SearchBudget(**kwargs)


def exploration_to_dict(exp: ClassExploration) -> dict:
    return {
        "representatives": [quiver_to_dict(r) for r in exp.representatives],
        "edges": [[p, k, c] for p, k, c in exp.edges],
        "exhausted": exp.exhausted,
        "truncation_reason": exp.truncation_reason.value if exp.truncation_reason else None,
    }


# --------------------------------------------------------------------------
# Certificates
# --------------------------------------------------------------------------


def _label_map_to_list(lm: mb.LabelMap) -> list[list[int]]:
    return [[old, new] for old, new in lm]


def _label_map_from_list(doc: Any, field: str) -> mb.LabelMap:
    if not isinstance(doc, list):
        raise MalformedDocumentError(f'"{field}" must be a list of [old, new] pairs')
    pairs = []
    for entry in doc:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise MalformedDocumentError(f"label map entry {entry!r} is not [old, new]")
        pairs.append((entry[0], entry[1]))
    return tuple(sorted(pairs))


def certificate_to_dict(cert: mb.Certificate) -> dict:
    if isinstance(cert, mb.BaseNoArrows):
        return {"kind": "base_no_arrows", "n": cert.n}
    if isinstance(cert, mb.BaseAcyclic):
        return {"kind": "base_acyclic", "ordering": list(cert.ordering)}
    if isinstance(cert, mb.BaseTrivial):
        return {"kind": "base_trivial"}
    if isinstance(cert, mb.MutationStep):
        return {
            "kind": "mutation_step",
            "sequence": list(cert.sequence),
            "child": certificate_to_dict(cert.child),
        }
    if isinstance(cert, (mb.CoverSplit, mb.SourceSinkSplit)):
        if isinstance(cert, mb.CoverSplit):
            doc = {"kind": "cover_split", "pair": list(cert.pair)}
        else:
            doc = {
                "kind": "source_sink_split",
                "arrow": list(cert.arrow),
                "mode": cert.mode.value,
            }
        doc["map_i"] = _label_map_to_list(cert.map_i)
        doc["child_i"] = certificate_to_dict(cert.child_i)
        doc["map_j"] = _label_map_to_list(cert.map_j)
        doc["child_j"] = certificate_to_dict(cert.child_j)
        if cert.child_ij is not None and cert.map_ij is not None:
            doc["map_ij"] = _label_map_to_list(cert.map_ij)
            doc["child_ij"] = certificate_to_dict(cert.child_ij)
        return doc
    if isinstance(cert, mb.TriangularStep):
        return {
            "kind": "triangular_step",
            "apex": cert.apex,
            "direction": cert.direction.value,
            "map": _label_map_to_list(cert.label_map),
            "child": certificate_to_dict(cert.child),
        }
    raise MalformedDocumentError(f"unknown certificate node {type(cert).__name__}")


def _require(doc: dict, field: str) -> Any:
    if field not in doc:
        raise MalformedDocumentError(f'certificate node is missing "{field}"')
    return doc[field]


def _int_list(doc: Any, field: str) -> tuple[int, ...]:
    if not isinstance(doc, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in doc
    ):
        raise MalformedDocumentError(f'"{field}" must be a list of integers')
    return tuple(doc)


def certificate_from_dict(doc: Any) -> mb.Certificate:
    if not isinstance(doc, dict):
        raise MalformedDocumentError("certificate node must be an object")
    kind = _require(doc, "kind")
    if kind == "base_no_arrows":
        n = _require(doc, "n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise MalformedDocumentError('"n" must be a nonnegative integer')
        return mb.BaseNoArrows(n)
    if kind == "base_acyclic":
        return mb.BaseAcyclic(_int_list(_require(doc, "ordering"), "ordering"))
    if kind == "base_trivial":
        return mb.BaseTrivial()
    if kind == "mutation_step":
        return mb.MutationStep(
            _int_list(_require(doc, "sequence"), "sequence"),
            certificate_from_dict(_require(doc, "child")),
        )
    if kind in ("cover_split", "source_sink_split"):
        arrow = _int_list(
            _require(doc, "pair" if kind == "cover_split" else "arrow"),
            "pair/arrow",
        )
        if len(arrow) != 2:
            raise MalformedDocumentError("split endpoint must be a pair of vertices")
        map_i = _label_map_from_list(_require(doc, "map_i"), "map_i")
        child_i = certificate_from_dict(_require(doc, "child_i"))
        map_j = _label_map_from_list(_require(doc, "map_j"), "map_j")
        child_j = certificate_from_dict(_require(doc, "child_j"))
        map_ij = child_ij = None
        if "child_ij" in doc or "map_ij" in doc:
            map_ij = _label_map_from_list(_require(doc, "map_ij"), "map_ij")
            child_ij = certificate_from_dict(_require(doc, "child_ij"))
        if kind == "cover_split":
            return mb.CoverSplit(
                (arrow[0], arrow[1]), map_i, child_i, map_j, child_j, map_ij, child_ij
            )
        mode_raw = _require(doc, "mode")
        try:
            mode = mb.SplitMode(mode_raw)
        except ValueError:
            raise MalformedDocumentError(f"unknown split mode {mode_raw!r}") from None
        return mb.SourceSinkSplit(
            (arrow[0], arrow[1]), mode, map_i, child_i, map_j, child_j, map_ij, child_ij
        )
    if kind == "triangular_step":
        apex = _require(doc, "apex")
        if not isinstance(apex, int) or isinstance(apex, bool):
            raise MalformedDocumentError('"apex" must be an integer')
        direction_raw = _require(doc, "direction")
        try:
            direction = CrossDirection(direction_raw)
        except ValueError:
            raise MalformedDocumentError(
                f"unknown triangular direction {direction_raw!r}"
            ) from None
        return mb.TriangularStep(
            apex,
            direction,
            _label_map_from_list(_require(doc, "map"), "map"),
            certificate_from_dict(_require(doc, "child")),
        )
    raise MalformedDocumentError(f"unknown certificate kind {kind!r}")


def class_id_from_string(raw: Any) -> mb.ClassId:
    try:
        return mb.ClassId(raw)
    except ValueError:
        raise MalformedDocumentError(
            f"unknown class {raw!r}; expected one of "
            f"{[c.value for c in mb.ClassId]}"
        ) from None


def certify_result_to_dict(class_id: mb.ClassId, verdict: Verdict) -> dict:
    doc: dict = {"class": class_id.value, "verdict": verdict.kind}
    if verdict.is_certified:
        doc["certificate"] = certificate_to_dict(verdict.witness)
    elif verdict.is_unknown:
        doc["reason"] = verdict.reason
    return doc


def scan_report_to_dict(report: "mb.ScanReport") -> dict:
    return {
        "n": report.n,
        "max_mult": report.max_mult,
        "mode": report.mode,
        "seed": report.seed,
        "examined": report.examined,
        "budget": budget_to_dict(report.budget),
        "candidates": [
            {
                "quiver": quiver_to_dict(q),
                "banff": certify_result_to_dict(mb.ClassId.BANFF, bv),
                "louise": certify_result_to_dict(mb.ClassId.LOUISE, lv),
            }
            for q, bv, lv in report.candidates
        ],
    }

"""Certificates and budgeted search for the five quiver classes.

Class membership is witnessed by a finite derivation tree that an
independent checker replays: base leaves (arrowless, acyclic with an
ordering, or the one-vertex quiver), mutation steps, covering-pair or
source/sink splits into vertex-deleted children, and single-apex
triangular steps.  Splits record explicit old-to-new label maps because
deleting a vertex compacts the child's labels; the checker recomputes
and compares them.

The searcher interleaves base checks, split attempts, and mutation-class
exploration under a shared budget, and the constructive transformations
turn covering-pair certificates into source/sink ones (and those into
triangular ones) without further search.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .canonical import canonical_form, canonical_key, enumerate_quivers_up_to_iso
from .errors import (
    IllegalNodeForClassError,
    InvalidInputCertificateError,
    LabelMapMismatchError,
    QuiverError,
)
from .quiver import (
    Permutation,
    Quiver,
    apply_sequence,
    delete_vertices,
    random_quiver,
    sinks,
    sources,
)
from .search import BudgetPool, Explorer, SearchBudget, Verdict
from .structure import (
    CoveringPair,
    CrossDirection,
    NormalizationMode,
    acyclic_ordering,
    covering_pairs,
    is_acyclic,
    is_triangular_extension,
    is_valid_acyclic_ordering,
    normalize_covering_pair,
)


class ClassId(Enum):
    BANFF = "banff"
    BANFF_PRIME = "bprime"
    LOUISE = "louise"
    LOUISE_PRIME = "lprime"
    P_PRIME = "pprime"


class SplitMode(Enum):
    SOURCE = "source"
    SINK = "sink"


LabelMap = tuple[tuple[int, int], ...]


def compaction_map(n: int, removed: set[int]) -> dict[int, int]:
    """Order-preserving relabeling of 1..n onto 1..n-|removed| after deletion."""
    kept = [v for v in range(1, n + 1) if v not in removed]
    return {old: new + 1 for new, old in enumerate(kept)}


def label_map_tuple(mapping: dict[int, int]) -> LabelMap:
    return tuple(sorted(mapping.items()))


@dataclass(frozen=True)
class BaseNoArrows:
    """Leaf for the prime classes: the quiver has no arrows at all."""

    n: int


@dataclass(frozen=True)
class BaseAcyclic:
    """Leaf for Banff/Louise: an acyclic ordering witnesses acyclicity."""

    ordering: tuple[int, ...]


@dataclass(frozen=True)
class BaseTrivial:
    """Leaf for the triangular class: the one-vertex quiver."""


@dataclass(frozen=True)
class MutationStep:
    """Membership through mutation equivalence: child certifies the mutated quiver."""

    sequence: tuple[int, ...]
    child: "Certificate"


@dataclass(frozen=True)
class CoverSplit:
    """Split at a covering pair; children certify the vertex deletions.

    The third (doubly-deleted) child is required for Louise and must be
    absent for Banff.
    """

    pair: tuple[int, int]
    map_i: LabelMap
    child_i: "Certificate"
    map_j: LabelMap
    child_j: "Certificate"
    map_ij: Optional[LabelMap] = None
    child_ij: Optional["Certificate"] = None


@dataclass(frozen=True)
class SourceSinkSplit:
    """Split at an arrow whose tail is a source or whose head is a sink."""

    arrow: tuple[int, int]
    mode: SplitMode
    map_i: LabelMap
    child_i: "Certificate"
    map_j: LabelMap
    child_j: "Certificate"
    map_ij: Optional[LabelMap] = None
    child_ij: Optional["Certificate"] = None


@dataclass(frozen=True)
class TriangularStep:
    """The quiver is a triangular extension of one vertex with the rest."""

    apex: int
    direction: CrossDirection
    label_map: LabelMap
    child: "Certificate"


Certificate = Union[
    BaseNoArrows,
    BaseAcyclic,
    BaseTrivial,
    MutationStep,
    CoverSplit,
    SourceSinkSplit,
    TriangularStep,
]

_ALLOWED_KINDS: dict[ClassId, tuple[type, ...]] = {
    ClassId.BANFF: (BaseAcyclic, MutationStep, CoverSplit),
    ClassId.LOUISE: (BaseAcyclic, MutationStep, CoverSplit),
    ClassId.BANFF_PRIME: (BaseNoArrows, MutationStep, SourceSinkSplit),
    ClassId.LOUISE_PRIME: (BaseNoArrows, MutationStep, SourceSinkSplit),
    ClassId.P_PRIME: (BaseTrivial, MutationStep, TriangularStep),
}

_NEEDS_THIRD_CHILD = {ClassId.LOUISE, ClassId.LOUISE_PRIME}


def relabel_certificate(cert: Certificate, sigma: Permutation) -> Certificate:
    """Transport a certificate along a relabeling of the quiver it certifies."""
    if isinstance(cert, (BaseNoArrows, BaseTrivial)):
        return cert
    if isinstance(cert, BaseAcyclic):
        return BaseAcyclic(tuple(sigma(v) for v in cert.ordering))
    if isinstance(cert, MutationStep):
        return MutationStep(
            tuple(sigma(v) for v in cert.sequence),
            relabel_certificate(cert.child, sigma),
        )
    if isinstance(cert, (CoverSplit, SourceSinkSplit)):
        i, j = cert.pair if isinstance(cert, CoverSplit) else cert.arrow
        mi, ci = _transport_child(sigma, cert.map_i, {i}, cert.child_i)
        mj, cj = _transport_child(sigma, cert.map_j, {j}, cert.child_j)
        mij, cij = None, None
        if cert.child_ij is not None and cert.map_ij is not None:
            mij, cij = _transport_child(sigma, cert.map_ij, {i, j}, cert.child_ij)
        if isinstance(cert, CoverSplit):
            return CoverSplit((sigma(i), sigma(j)), mi, ci, mj, cj, mij, cij)
        return SourceSinkSplit((sigma(i), sigma(j)), cert.mode, mi, ci, mj, cj, mij, cij)
    if isinstance(cert, TriangularStep):
        lm, child = _transport_child(sigma, cert.label_map, {cert.apex}, cert.child)
        return TriangularStep(sigma(cert.apex), cert.direction, lm, child)
    raise InvalidInputCertificateError(f"unknown certificate node {type(cert).__name__}")


def _transport_child(
    sigma: Permutation,
    old_map: LabelMap,
    removed: set[int],
    child: Certificate,
) -> tuple[LabelMap, Certificate]:
    n = len(sigma)
    removed_new = {sigma(v) for v in removed}
    new_map = compaction_map(n, removed_new)
    gamma_image = [0] * (n - len(removed))
    for old_vertex, child_label in old_map:
        gamma_image[child_label - 1] = new_map[sigma(old_vertex)]
    gamma = Permutation(tuple(gamma_image))
    return label_map_tuple(new_map), relabel_certificate(child, gamma)


def _split_parts(
    cert: Union[CoverSplit, SourceSinkSplit],
) -> list[tuple[set[int], LabelMap, Certificate]]:
    i, j = cert.pair if isinstance(cert, CoverSplit) else cert.arrow
    parts = [({i}, cert.map_i, cert.child_i), ({j}, cert.map_j, cert.child_j)]
    if cert.child_ij is not None:
        parts.append(({i, j}, cert.map_ij or (), cert.child_ij))
    return parts


def check_certificate(q: Quiver, cert: Certificate, class_id: ClassId) -> bool:
    """Replay a derivation tree against a quiver.

    Returns False for unsatisfied leaves, missing arrows, wrong
    source/sink modes, or children that fail recursively.  Raises
    IllegalNodeForClassError for node kinds (or split arities) the class
    does not admit, and LabelMapMismatchError when a stored label map is
    not the order-preserving compaction.
    """
    if type(cert) not in _ALLOWED_KINDS[class_id]:
        raise IllegalNodeForClassError(
            f"{type(cert).__name__} not allowed in a {class_id.value} certificate"
        )

    if isinstance(cert, BaseNoArrows):
        return cert.n == q.n and not q.has_arrows()
    if isinstance(cert, BaseAcyclic):
        return is_valid_acyclic_ordering(q, cert.ordering)
    if isinstance(cert, BaseTrivial):
        return q.n == 1

    if isinstance(cert, MutationStep):
        if any(not (1 <= v <= q.n) for v in cert.sequence):
            return False
        return check_certificate(apply_sequence(q, cert.sequence), cert.child, class_id)

    if isinstance(cert, (CoverSplit, SourceSinkSplit)):
        needs_third = class_id in _NEEDS_THIRD_CHILD
        if needs_third and cert.child_ij is None:
            raise IllegalNodeForClassError(
                f"{class_id.value} split requires the doubly-deleted child"
            )
        if not needs_third and cert.child_ij is not None:
            raise IllegalNodeForClassError(
                f"{class_id.value} split must not carry a doubly-deleted child"
            )
        i, j = cert.pair if isinstance(cert, CoverSplit) else cert.arrow
        if not (1 <= i <= q.n and 1 <= j <= q.n) or i == j:
            return False
        if isinstance(cert, CoverSplit):
            if CoveringPair(i, j) not in covering_pairs(q):
                return False
        else:
            if not q.has_arrow(i, j):
                return False
            if cert.mode is SplitMode.SOURCE and i not in sources(q):
                return False
            if cert.mode is SplitMode.SINK and j not in sinks(q):
                return False
        for removed, stored_map, child in _split_parts(cert):
            expected = label_map_tuple(compaction_map(q.n, removed))
            if stored_map != expected:
                raise LabelMapMismatchError(
                    f"label map for deleting {sorted(removed)} is not the "
                    f"order-preserving compaction"
                )
            sub, _ = delete_vertices(q, removed)
            if not check_certificate(sub, child, class_id):
                return False
        return True

    if isinstance(cert, TriangularStep):
        v = cert.apex
        if not (1 <= v <= q.n) or q.n < 2:
            return False
        if cert.direction is CrossDirection.MIXED:
            return False
        if is_triangular_extension(q, {v}) is not cert.direction:
            return False
        expected = label_map_tuple(compaction_map(q.n, {v}))
        if cert.label_map != expected:
            raise LabelMapMismatchError(
                f"label map for deleting apex {v} is not the order-preserving compaction"
            )
        sub, _ = delete_vertices(q, {v})
        return check_certificate(sub, cert.child, class_id)

    raise IllegalNodeForClassError(f"unknown certificate node {type(cert).__name__}")


def _base_certificate(q: Quiver, class_id: ClassId) -> Optional[Certificate]:
    if class_id in (ClassId.BANFF, ClassId.LOUISE):
        if is_acyclic(q):
            return BaseAcyclic(acyclic_ordering(q).order)
        return None
    if class_id in (ClassId.BANFF_PRIME, ClassId.LOUISE_PRIME):
        if not q.has_arrows():
            return BaseNoArrows(q.n)
        return None
    if q.n == 1:
        return BaseTrivial()
    return None


class MembershipSearcher:
    """Budgeted certificate search with verdict memoization.

    Certified and refuted verdicts are facts about an isomorphism class
    and persist across calls; unknown verdicts depend on how much budget
    was left when they were computed, so they are only reused within a
    single top-level derivation.
    """

    def __init__(self, budget: Optional[SearchBudget] = None):
        self.budget = budget or SearchBudget()
        self._decided: dict[tuple[ClassId, tuple], Verdict] = {}
        self._unknown: dict[tuple[ClassId, tuple], str] = {}
        self._pool: Optional[BudgetPool] = None

    def derive(self, q: Quiver, class_id: ClassId) -> Verdict:
        """Search for a membership certificate under this searcher's budget."""
        self._unknown = {}
        self._pool = BudgetPool(self.budget)
        return self._derive(q, class_id)

    def _derive(self, q: Quiver, class_id: ClassId) -> Verdict:
        canon, tau = canonical_form(q)
        key = (class_id, canon.b)
        decided = self._decided.get(key)
        if decided is not None:
            if decided.is_certified:
                return Verdict.certified(
                    relabel_certificate(decided.witness, tau.inverse())
                )
            return decided
        if key in self._unknown:
            return Verdict.unknown(self._unknown[key])
        verdict = self._derive_canonical(canon, class_id)
        if verdict.is_unknown:
            self._unknown[key] = verdict.reason or "budget"
            return verdict
        self._decided[key] = verdict
        if verdict.is_certified:
            return Verdict.certified(relabel_certificate(verdict.witness, tau.inverse()))
        return verdict

    def _derive_canonical(self, canon: Quiver, class_id: ClassId) -> Verdict:
        base = _base_certificate(canon, class_id)
        if base is not None:
            return Verdict.certified(base)

        all_refuted = True
        unknown_reason: Optional[str] = None
        status, payload = self._try_splits(canon, class_id)
        if status == "certified":
            return Verdict.certified(payload)
        if status == "unknown":
            all_refuted = False
            unknown_reason = unknown_reason or payload

        explorer = Explorer(canon, self.budget, pool=self._pool)
        scanned = 1  # index 0 is the quiver itself, handled above
        while True:
            while scanned < len(explorer.reached):
                rep = explorer.reached[scanned]
                base = _base_certificate(rep, class_id)
                if base is not None:
                    self._memo_rep(class_id, explorer, scanned, base)
                    return Verdict.certified(
                        MutationStep(explorer.witness_sequence(scanned), base)
                    )
                status, payload = self._try_splits(rep, class_id)
                if status == "certified":
                    self._memo_rep(class_id, explorer, scanned, payload)
                    return Verdict.certified(
                        MutationStep(explorer.witness_sequence(scanned), payload)
                    )
                if status == "unknown":
                    all_refuted = False
                    unknown_reason = unknown_reason or payload
                scanned += 1
            if not explorer.expand_one():
                break

        if explorer.exhausted and all_refuted:
            verdict = Verdict.refuted_exhaustive()
            # Refutation covers the entire (exhausted) mutation class.
            for t in range(1, len(explorer.reps)):
                self._decided.setdefault((class_id, explorer.reps[t].b), verdict)
            return verdict
        if explorer.trunc is not None:
            unknown_reason = unknown_reason or explorer.trunc.value
        return Verdict.unknown(unknown_reason)

    def _memo_rep(
        self, class_id: ClassId, explorer: Explorer, idx: int, cert: Certificate
    ) -> None:
        key = (class_id, explorer.reps[idx].b)
        if key not in self._decided:
            self._decided[key] = Verdict.certified(
                relabel_certificate(cert, explorer.taus[idx])
            )

    def _try_splits(self, q: Quiver, class_id: ClassId) -> tuple[str, object]:
        if class_id in (ClassId.BANFF, ClassId.LOUISE):
            candidates = [
                (tuple(cp), None) for cp in covering_pairs(q)
            ]
        elif class_id in (ClassId.BANFF_PRIME, ClassId.LOUISE_PRIME):
            srcs = sources(q)
            snks = sinks(q)
            candidates = []
            for i, j, _ in q.arrows():
                if i in srcs:
                    candidates.append(((i, j), SplitMode.SOURCE))
                elif j in snks:
                    candidates.append(((i, j), SplitMode.SINK))
        else:
            return self._try_triangular_steps(q)

        any_unknown = False
        reason: Optional[str] = None
        with_third = class_id in _NEEDS_THIRD_CHILD
        for (i, j), mode in candidates:
            removed_sets = [{i}, {j}] + ([{i, j}] if with_third else [])
            status, payload = self._derive_children(q, class_id, removed_sets)
            if status == "certified":
                (mi, ci), (mj, cj) = payload[0], payload[1]
                mij, cij = payload[2] if with_third else (None, None)
                if mode is None:
                    cert: Certificate = CoverSplit((i, j), mi, ci, mj, cj, mij, cij)
                else:
                    cert = SourceSinkSplit((i, j), mode, mi, ci, mj, cj, mij, cij)
                return "certified", cert
            if status == "unknown":
                any_unknown = True
                reason = reason or payload
        if any_unknown:
            return "unknown", reason
        return "refuted", None

    def _try_triangular_steps(self, q: Quiver) -> tuple[str, object]:
        any_unknown = False
        reason: Optional[str] = None
        for v in q.vertices:
            if q.n < 2:
                break
            direction = is_triangular_extension(q, {v})
            if direction is CrossDirection.MIXED:
                continue
            sub, lm = delete_vertices(q, {v})
            verdict = self._derive(sub, ClassId.P_PRIME)
            if verdict.is_certified:
                cert = TriangularStep(v, direction, label_map_tuple(lm), verdict.witness)
                return "certified", cert
            if verdict.is_unknown:
                any_unknown = True
                reason = reason or verdict.reason
        if any_unknown:
            return "unknown", reason
        return "refuted", None

    def _derive_children(
        self, q: Quiver, class_id: ClassId, removed_sets: list[set[int]]
    ) -> tuple[str, object]:
        """Derive every deleted child; one refuted child refutes the split."""
        out: list[tuple[LabelMap, Certificate]] = []
        unknown_reason: Optional[str] = None
        for removed in removed_sets:
            sub, lm = delete_vertices(q, removed)
            verdict = self._derive(sub, class_id)
            if verdict.is_refuted:
                return "refuted", None
            if verdict.is_unknown:
                unknown_reason = unknown_reason or verdict.reason
            else:
                out.append((label_map_tuple(lm), verdict.witness))
        if unknown_reason is not None:
            return "unknown", unknown_reason
        return "certified", out


def derive_certificate(
    q: Quiver,
    class_id: ClassId,
    budget: Optional[SearchBudget] = None,
    searcher: Optional[MembershipSearcher] = None,
) -> Verdict:
    """Search for a membership certificate; see MembershipSearcher.

    Passing a searcher reuses its memo of decided isomorphism classes
    across calls (the budget then comes from the searcher).
    """
    if searcher is None:
        searcher = MembershipSearcher(budget)
    return searcher.derive(q, class_id)


# ---------------------------------------------------------------------------
# Constructive transformations between certificate styles.
# ---------------------------------------------------------------------------


def _certificate_valid(q: Quiver, cert: Certificate, class_id: ClassId) -> bool:
    try:
        return check_certificate(q, cert, class_id)
    except QuiverError:
        return False


def bprime_from_banff(
    q: Quiver, cert: Certificate, budget: Optional[SearchBudget] = None
) -> Certificate:
    """Rewrite a Banff certificate into a source/sink-split one.

    Acyclic leaves unfold into nested source splits along the acyclic
    ordering; covering-pair splits are normalized into a source or sink
    mutation sequence followed by a source/sink split whose children are
    the original children mutated accordingly.  No search happens, so the
    budget is accepted for interface symmetry but never consumed.
    """
    del budget
    if not _certificate_valid(q, cert, ClassId.BANFF):
        raise InvalidInputCertificateError("input does not certify the quiver as banff")
    return _prime_transform(q, cert, with_third=False)


def lprime_from_louise(
    q: Quiver, cert: Certificate, budget: Optional[SearchBudget] = None
) -> Certificate:
    """Louise-side analogue of bprime_from_banff, carrying the third child."""
    del budget
    if not _certificate_valid(q, cert, ClassId.LOUISE):
        raise InvalidInputCertificateError("input does not certify the quiver as louise")
    return _prime_transform(q, cert, with_third=True)


def _prime_transform(q: Quiver, cert: Certificate, with_third: bool) -> Certificate:
    if isinstance(cert, BaseAcyclic):
        return _acyclic_prime_certificate(q, with_third)
    if isinstance(cert, MutationStep):
        mutated = apply_sequence(q, cert.sequence)
        return MutationStep(cert.sequence, _prime_transform(mutated, cert.child, with_third))
    if isinstance(cert, CoverSplit):
        i, j = cert.pair
        norm = normalize_covering_pair(q, (i, j))
        mode = (
            SplitMode.SOURCE
            if norm.mode is NormalizationMode.SOURCE_AT_I
            else SplitMode.SINK
        )

        def transformed_child(
            removed: set[int], input_child: Certificate
        ) -> tuple[LabelMap, Certificate]:
            sub, lm = delete_vertices(q, removed)
            prime_child = _prime_transform(sub, input_child, with_third)
            # The normalized quiver's deletion equals the original deletion
            # mutated along w (labels compacted); undo w to reach it.
            mapped_w = tuple(lm[v] for v in norm.w)
            return label_map_tuple(lm), MutationStep(
                tuple(reversed(mapped_w)), prime_child
            )

        mi, ci = transformed_child({i}, cert.child_i)
        mj, cj = transformed_child({j}, cert.child_j)
        mij, cij = None, None
        if with_third:
            assert cert.child_ij is not None
            mij, cij = transformed_child({i, j}, cert.child_ij)
        inner = SourceSinkSplit((i, j), mode, mi, ci, mj, cj, mij, cij)
        return MutationStep(norm.w, inner)
    raise InvalidInputCertificateError(
        f"unexpected node {type(cert).__name__} in a covering-pair certificate"
    )


def _acyclic_prime_certificate(q: Quiver, with_third: bool) -> Certificate:
    """Source splits along the acyclic ordering, down to arrowless leaves."""
    if not q.has_arrows():
        return BaseNoArrows(q.n)
    i = min(v for v in sources(q) if q.out_neighbors(v))
    j = min(q.out_neighbors(i))

    def child(removed: set[int]) -> tuple[LabelMap, Certificate]:
        sub, lm = delete_vertices(q, removed)
        return label_map_tuple(lm), _acyclic_prime_certificate(sub, with_third)

    mi, ci = child({i})
    mj, cj = child({j})
    mij, cij = child({i, j}) if with_third else (None, None)
    return SourceSinkSplit((i, j), SplitMode.SOURCE, mi, ci, mj, cj, mij, cij)


def pprime_from_bprime(cert: Certificate) -> Certificate:
    """Rewrite a source/sink certificate into a triangular one.

    A source split makes the quiver a triangular extension of its source
    vertex with the rest, so one child suffices; arrowless leaves unfold
    into chains of cross-free triangular steps ending at one vertex.
    """
    if isinstance(cert, BaseNoArrows):
        return _arrowless_pprime(cert.n)
    if isinstance(cert, MutationStep):
        return MutationStep(cert.sequence, pprime_from_bprime(cert.child))
    if isinstance(cert, SourceSinkSplit):
        if cert.child_ij is not None:
            raise InvalidInputCertificateError(
                "a bprime split must not carry a doubly-deleted child"
            )
        i, j = cert.arrow
        if cert.mode is SplitMode.SOURCE:
            return TriangularStep(
                i, CrossDirection.X_TO_Y, cert.map_i, pprime_from_bprime(cert.child_i)
            )
        return TriangularStep(
            j, CrossDirection.Y_TO_X, cert.map_j, pprime_from_bprime(cert.child_j)
        )
    raise InvalidInputCertificateError(
        f"unexpected node {type(cert).__name__} in a bprime certificate"
    )


def _arrowless_pprime(n: int) -> Certificate:
    if n < 1:
        raise InvalidInputCertificateError("cannot build a triangular chain on 0 vertices")
    if n == 1:
        return BaseTrivial()
    lm = label_map_tuple(compaction_map(n, {1}))
    return TriangularStep(1, CrossDirection.NO_CROSS, lm, _arrowless_pprime(n - 1))


def louise_cert_to_banff_cert(cert: Certificate) -> Certificate:
    """Drop the doubly-deleted child at every split."""
    if isinstance(cert, BaseAcyclic):
        return cert
    if isinstance(cert, MutationStep):
        return MutationStep(cert.sequence, louise_cert_to_banff_cert(cert.child))
    if isinstance(cert, CoverSplit):
        if cert.child_ij is None:
            raise InvalidInputCertificateError("louise split is missing its third child")
        return CoverSplit(
            cert.pair,
            cert.map_i,
            louise_cert_to_banff_cert(cert.child_i),
            cert.map_j,
            louise_cert_to_banff_cert(cert.child_j),
        )
    raise InvalidInputCertificateError(
        f"unexpected node {type(cert).__name__} in a louise certificate"
    )


def lprime_cert_to_bprime_cert(cert: Certificate) -> Certificate:
    """Drop the doubly-deleted child at every source/sink split."""
    if isinstance(cert, BaseNoArrows):
        return cert
    if isinstance(cert, MutationStep):
        return MutationStep(cert.sequence, lprime_cert_to_bprime_cert(cert.child))
    if isinstance(cert, SourceSinkSplit):
        if cert.child_ij is None:
            raise InvalidInputCertificateError("lprime split is missing its third child")
        return SourceSinkSplit(
            cert.arrow,
            cert.mode,
            cert.map_i,
            lprime_cert_to_bprime_cert(cert.child_i),
            cert.map_j,
            lprime_cert_to_bprime_cert(cert.child_j),
        )
    raise InvalidInputCertificateError(
        f"unexpected node {type(cert).__name__} in an lprime certificate"
    )


# ---------------------------------------------------------------------------
# Candidate scanning: Banff-certified quivers that resist Louise certification.
# ---------------------------------------------------------------------------


@dataclass
class ScanReport:
    """Quivers certified Banff whose Louise search did not certify.

    Candidates are leads, never claims: an unknown Louise verdict only
    reflects the budget.
    """

    n: int
    max_mult: int
    mode: str
    seed: Optional[int]
    examined: int
    budget: SearchBudget
    candidates: list[tuple[Quiver, Verdict, Verdict]]


def scan_opac033(
    n: int,
    max_mult: int = 2,
    mode: str = "sample",
    budget: Optional[SearchBudget] = None,
    seed: int = 0,
    samples: int = 100,
    include: tuple[Quiver, ...] = (),
) -> ScanReport:
    """Scan quivers on n >= 6 vertices for Banff-certified, Louise-uncertified cases.

    Sample mode draws seeded random quivers; exhaustive mode enumerates
    all exchange matrices with entries bounded by max_mult up to
    isomorphism (practical only for tiny bounds).  ``include`` prepends
    explicit quivers to the examined list.
    """
    if n < 6:
        raise QuiverError(
            "candidate scanning needs n >= 6; smaller quivers cannot separate the classes"
        )
    if mode not in ("sample", "exhaustive"):
        raise QuiverError(f"unknown scan mode {mode!r}")
    for q in include:
        if q.n != n:
            raise QuiverError(f"included quiver has {q.n} vertices, scan expects {n}")
    budget = budget or SearchBudget()
    searcher = MembershipSearcher(budget)

    if mode == "sample":
        quivers = list(include) + [random_quiver(n, max_mult, seed + t) for t in range(samples)]
    else:
        seen = {canonical_key(q) for q in include}
        quivers = list(include) + [
            q for q in enumerate_quivers_up_to_iso(n, max_mult)
            if canonical_key(q) not in seen
        ]

    candidates: list[tuple[Quiver, Verdict, Verdict]] = []
    for q in quivers:
        banff = searcher.derive(q, ClassId.BANFF)
        louise = searcher.derive(q, ClassId.LOUISE)
        if banff.is_certified and not louise.is_certified:
            candidates.append((q, banff, louise))
    return ScanReport(
        n=n,
        max_mult=max_mult,
        mode=mode,
        seed=seed if mode == "sample" else None,
        examined=len(quivers),
        budget=budget,
        candidates=candidates,
    )

"""Bounded BFS over mutation classes up to isomorphism.

Mutation classes may be infinite, so every exploration runs under a
budget and reports one of three outcomes: a witness was found, the whole
class was enumerated and refutes the goal, or a cap was hit and the
answer is unknown.  An exploration is *exhausted* only when every single
mutation of every representative stayed within the entry cap and landed
on a known representative; in that case the representative list is the
entire mutation class up to isomorphism.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .canonical import canonical_form
from .errors import BadBudgetError
from .quiver import Permutation, Quiver, mutate
from .structure import is_acyclic


class TruncationReason(Enum):
    ENTRY_CAP = "entry_cap"
    NODE_CAP = "node_cap"
    DEPTH_CAP = "depth_cap"
    TIME_CAP = "time_cap"


@dataclass(frozen=True)
class SearchBudget:
    """Resource caps for class exploration and certificate search."""

    max_iso_classes: int = 50_000
    max_depth: int = 64
    max_abs_entry: int = 12
    max_millis: int = 0

    def __post_init__(self) -> None:
        for name in ("max_iso_classes", "max_depth", "max_abs_entry"):
            if getattr(self, name) < 1:
                raise BadBudgetError(f"{name} must be >= 1")
        if self.max_millis < 0:
            raise BadBudgetError("max_millis must be >= 0 (0 = unlimited)")

    def scaled(self, factor: int) -> "SearchBudget":
        """Budget with every finite field multiplied by ``factor``."""
        return SearchBudget(
            max_iso_classes=self.max_iso_classes * factor,
            max_depth=self.max_depth * factor,
            max_abs_entry=self.max_abs_entry * factor,
            max_millis=self.max_millis * factor,
        )


class BudgetPool:
    """Mutable allowance shared by nested explorations of one search.

    Tracks how many new isomorphism classes may still be discovered and
    the wall-clock deadline.
    """

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.remaining_classes = budget.max_iso_classes
        self.deadline: Optional[float] = (
            time.monotonic() + budget.max_millis / 1000.0 if budget.max_millis else None
        )

    def take_class(self) -> bool:
        if self.remaining_classes <= 0:
            return False
        self.remaining_classes -= 1
        return True

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


@dataclass(frozen=True)
class Verdict:
    """Three-valued search outcome.

    ``certified`` carries a witness, ``refuted_exhaustive`` is only
    issued on top of an exhausted exploration, and ``unknown`` names the
    cap that stopped the search.
    """

    kind: str
    witness: object = None
    reason: Optional[str] = None

    CERTIFIED = "certified"
    REFUTED_EXHAUSTIVE = "refuted_exhaustive"
    UNKNOWN = "unknown"

    @classmethod
    def certified(cls, witness: object) -> "Verdict":
        return cls(cls.CERTIFIED, witness=witness)

    @classmethod
    def refuted_exhaustive(cls) -> "Verdict":
        return cls(cls.REFUTED_EXHAUSTIVE)

    @classmethod
    def unknown(cls, reason: Optional[str]) -> "Verdict":
        return cls(cls.UNKNOWN, reason=reason or "budget")

    @property
    def is_certified(self) -> bool:
        return self.kind == self.CERTIFIED

    @property
    def is_refuted(self) -> bool:
        return self.kind == self.REFUTED_EXHAUSTIVE

    @property
    def is_unknown(self) -> bool:
        return self.kind == self.UNKNOWN


@dataclass
class ClassExploration:
    """BFS result: representatives up to isomorphism plus the mutation graph.

    ``representatives`` hold canonical forms; ``edges`` record
    (parent index, vertex in the parent representative's labels, child
    index).  The remaining fields reconstruct witnesses: ``reached[t]``
    is the t-th class as first reached, in the coordinate system of
    ``representatives[0]``, with ``taus[t]`` the relabeling onto its
    canonical form and ``parents[t]`` the BFS back-pointer
    (parent index, mutated vertex in reached coordinates).
    """

    representatives: list[Quiver]
    edges: list[tuple[int, int, int]]
    exhausted: bool
    truncation_reason: Optional[TruncationReason]
    reached: list[Quiver] = field(repr=False, default_factory=list)
    taus: list[Permutation] = field(repr=False, default_factory=list)
    parents: list[Optional[tuple[int, int]]] = field(repr=False, default_factory=list)

    def witness_sequence(self, idx: int) -> tuple[int, ...]:
        """Mutation sequence from ``reached[0]`` to ``reached[idx]``."""
        seq: list[int] = []
        t = idx
        while self.parents[t] is not None:
            parent, v = self.parents[t]
            seq.append(v)
            t = parent
        return tuple(reversed(seq))


class Explorer:
    """Incremental engine behind explore_class.

    Consumers may interleave work with expansion: representatives appear
    in ``reached`` in deterministic BFS order (layer, then vertex label)
    as ``expand_one`` is called.  The root representative is present from
    the start.
    """

    def __init__(
        self,
        q: Quiver,
        budget: Optional[SearchBudget] = None,
        pool: Optional[BudgetPool] = None,
    ):
        self.budget = budget or SearchBudget()
        self.pool = pool or BudgetPool(self.budget)
        root, _ = canonical_form(q)
        self.n = q.n
        self.reps: list[Quiver] = [root]
        self.reached: list[Quiver] = [root]
        self.taus: list[Permutation] = [Permutation.identity(q.n)]
        self.parents: list[Optional[tuple[int, int]]] = [None]
        self.depth: list[int] = [0]
        self.edges: list[tuple[int, int, int]] = []
        self.trunc: Optional[TruncationReason] = None
        self._seen: dict[tuple[tuple[int, ...], ...], int] = {root.b: 0}
        self._queue: deque[int] = deque([0])
        self._canon_cache: dict[
            tuple[tuple[int, ...], ...], tuple[Quiver, Permutation]
        ] = {}
        self._finished = False
        # The root occupies one slot of a shared pool when available, but an
        # exploration always holds at least its own root.
        self.pool.take_class()

    @property
    def finished(self) -> bool:
        return self._finished and not self._queue

    @property
    def exhausted(self) -> bool:
        return self.finished and self.trunc is None

    def witness_sequence(self, idx: int) -> tuple[int, ...]:
        seq: list[int] = []
        t = idx
        while self.parents[t] is not None:
            parent, v = self.parents[t]
            seq.append(v)
            t = parent
        return tuple(reversed(seq))

    def expand_one(self) -> bool:
        """Expand the next queued representative; False once finished."""
        if self._finished or not self._queue:
            self._finished = True
            return False
        if self.pool.expired():
            self.trunc = self.trunc or TruncationReason.TIME_CAP
            self._queue.clear()
            self._finished = True
            return False
        p = self._queue.popleft()
        if self.depth[p] >= self.budget.max_depth:
            if self.trunc is None:
                self.trunc = TruncationReason.DEPTH_CAP
            return True
        tau_inv = self.taus[p].inverse()
        rq = self.reached[p]
        for k in range(1, self.n + 1):
            v = tau_inv(k)
            child = mutate(rq, v)
            if child.max_abs_entry() > self.budget.max_abs_entry:
                if self.trunc is None:
                    self.trunc = TruncationReason.ENTRY_CAP
                continue
            cached = self._canon_cache.get(child.b)
            if cached is None:
                cached = canonical_form(child)
                self._canon_cache[child.b] = cached
            crep, ctau = cached
            idx = self._seen.get(crep.b)
            if idx is None:
                if len(self.reps) >= self.budget.max_iso_classes or not self.pool.take_class():
                    if self.trunc is None:
                        self.trunc = TruncationReason.NODE_CAP
                    continue
                idx = len(self.reps)
                self._seen[crep.b] = idx
                self.reps.append(crep)
                self.reached.append(child)
                self.taus.append(ctau)
                self.parents.append((p, v))
                self.depth.append(self.depth[p] + 1)
                self._queue.append(idx)
            self.edges.append((p, k, idx))
        return True

    def run(self) -> None:
        while self.expand_one():
            pass

    def snapshot(self) -> ClassExploration:
        return ClassExploration(
            representatives=list(self.reps),
            edges=list(self.edges),
            exhausted=self.exhausted,
            truncation_reason=self.trunc,
            reached=list(self.reached),
            taus=list(self.taus),
            parents=list(self.parents),
        )


def explore_class(
    q: Quiver,
    budget: Optional[SearchBudget] = None,
    pool: Optional[BudgetPool] = None,
) -> ClassExploration:
    """Breadth-first enumeration of the mutation class of q up to isomorphism.

    The root is canonical_form(q); children are the n single mutations of
    each representative, expanded in vertex-label order and deduplicated
    by canonical form.  Hitting any cap records the first truncation
    reason; entry-cap hits skip the offending child but keep exploring.
    Deterministic: identical inputs produce identical explorations.
    """
    ex = Explorer(q, budget, pool)
    ex.run()
    return ex.snapshot()


def find_matching(
    q: Quiver,
    predicate: Callable[[Quiver], bool],
    budget: Optional[SearchBudget] = None,
) -> Verdict:
    """Search the mutation class for a quiver satisfying the predicate.

    The predicate is evaluated on quivers exactly as a replay of the
    returned witness from q would produce them, so every certified
    witness replays to a satisfying quiver.  The predicate must be pure.
    """
    _, sigma = canonical_form(q)
    inv = sigma.inverse()
    ex = Explorer(q, budget)
    scanned = 0
    while True:
        while scanned < len(ex.reached):
            original = ex.reached[scanned].permuted(inv)
            if predicate(original):
                witness = tuple(inv(v) for v in ex.witness_sequence(scanned))
                return Verdict.certified(witness)
            scanned += 1
        if not ex.expand_one():
            break
    if ex.exhausted:
        return Verdict.refuted_exhaustive()
    reason = ex.trunc.value if ex.trunc else None
    return Verdict.unknown(reason)


def is_mutation_acyclic(q: Quiver, budget: Optional[SearchBudget] = None) -> Verdict:
    """Is q mutation-equivalent to an acyclic quiver?

    Certified verdicts carry a mutation sequence whose replay is acyclic;
    refutation requires the exhausted class to contain no acyclic member.
    """
    return find_matching(q, is_acyclic, budget)

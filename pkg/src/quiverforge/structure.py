"""Acyclicity, orderings, covering pairs, and source/sink normalization.

A covering pair is an arrow i->j lying on no bi-infinite path.  The
characterization used throughout: an arrow sits on a bi-infinite path
exactly when i is reachable from a directed cycle and j reaches a
directed cycle (membership counts as reachable).  Everything here is a
pure function over immutable quivers.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import (
    ArrowMissingError,
    BadPartitionError,
    NotACoveringPairError,
    NotAcyclicError,
)
from .quiver import (
    Quiver,
    apply_sequence,
    induced_subquiver,
    mutate,
    sinks,
    sources,
)


class CoveringPair(NamedTuple):
    src: int
    dst: int


@dataclass(frozen=True)
class AcyclicOrdering:
    """Vertex ordering with every arrow pointing forward."""

    order: tuple[int, ...]


class CrossDirection(Enum):
    """Orientation of the arrows crossing a bipartition (X, Y)."""

    X_TO_Y = "x_to_y"
    Y_TO_X = "y_to_x"
    NO_CROSS = "no_cross"
    MIXED = "mixed"


class NormalizationMode(Enum):
    SOURCE_AT_I = "source_at_i"
    SINK_AT_J = "sink_at_j"


@dataclass(frozen=True)
class TriangularSplit:
    """Vertex partition induced by a covering pair (i, j).

    a = vertices with a directed path to i (including i), b = vertices
    reachable from j (including j), c and d their complements.  All cross
    arrows point a->c and d->b, and at least one of a, b is acyclic.
    """

    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]
    d: frozenset[int]


@dataclass(frozen=True)
class NormalizationResult:
    """Source or sink mutation sequence exposing a covering pair.

    ``w`` avoids both endpoints; in ``quiver = apply_sequence(Q, w)`` the
    tail i is a source (SOURCE_AT_I) or the head j is a sink (SINK_AT_J).
    """

    w: tuple[int, ...]
    quiver: Quiver
    mode: NormalizationMode


def is_acyclic(q: Quiver) -> bool:
    """True iff the quiver has no directed cycle (iterated source removal)."""
    indeg = [0] * q.n
    for i in range(q.n):
        for j in range(q.n):
            if q.b[i][j] > 0:
                indeg[j] += 1
    queue = [v for v in range(q.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for j in range(q.n):
            if q.b[v][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
    return seen == q.n


def acyclic_ordering(q: Quiver) -> AcyclicOrdering:
    """Topological order with smallest-label-first tie-breaking."""
    indeg = [0] * q.n
    for i in range(q.n):
        for j in range(q.n):
            if q.b[i][j] > 0:
                indeg[j] += 1
    heap = [v for v in range(q.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v + 1)
        for j in range(q.n):
            if q.b[v][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
    if len(order) != q.n:
        raise NotAcyclicError("quiver has a directed cycle, no acyclic ordering exists")
    return AcyclicOrdering(tuple(order))


def is_valid_acyclic_ordering(q: Quiver, order: Sequence[int]) -> bool:
    """Check that ``order`` lists all vertices with every arrow forward."""
    if sorted(order) != list(q.vertices):
        return False
    pos = {v: t for t, v in enumerate(order)}
    return all(pos[i] < pos[j] for i, j, _ in q.arrows())


def verify_source_sequence(q: Quiver, w: Sequence[int]) -> bool:
    """True iff each step is a source in the quiver mutated so far."""
    cur = q
    for v in w:
        if v not in sources(cur):
            return False
        cur = mutate(cur, v)
    return True


def verify_sink_sequence(q: Quiver, w: Sequence[int]) -> bool:
    """True iff each step is a sink in the quiver mutated so far."""
    cur = q
    for v in w:
        if v not in sinks(cur):
            return False
        cur = mutate(cur, v)
    return True


def source_sequence_from_ordering(q: Quiver) -> tuple[int, ...]:
    """The acyclic ordering read as a mutation sequence.

    Mutating an acyclic quiver along its topological order is a source
    mutation sequence, every intermediate quiver is acyclic, and the full
    sequence returns the original quiver.
    """
    return acyclic_ordering(q).order


def cycle_vertices(q: Quiver) -> frozenset[int]:
    """Vertices lying on some directed cycle.

    Since loops are forbidden, these are exactly the vertices whose
    strongly connected component has two or more members.
    """
    n = q.n
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    visited = [False] * (n + 1)
    stack: list[int] = []
    counter = [1]
    result: set[int] = set()

    def strongconnect(root: int) -> None:
        # Iterative Tarjan; each frame is (vertex, iterator over out-neighbors).
        work = [(root, iter(q.out_neighbors(root)))]
        visited[root] = True
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if not visited[u]:
                    visited[u] = True
                    index[u] = low[u] = counter[0]
                    counter[0] += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, iter(q.out_neighbors(u))))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                component = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    component.append(u)
                    if u == v:
                        break
                if len(component) >= 2:
                    result.update(component)

    for v in q.vertices:
        if not visited[v]:
            strongconnect(v)
    return frozenset(result)


def _closure(q: Quiver, starts: Iterable[int], neighbors: Callable[[int], list[int]]) -> set[int]:
    seen = set(starts)
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for u in neighbors(v):
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen


def ancestors(q: Quiver, v: int) -> set[int]:
    """Vertices with a directed path to v, including v."""
    return _closure(q, [v], q.in_neighbors)


def descendants(q: Quiver, v: int) -> set[int]:
    """Vertices reachable from v by a directed path, including v."""
    return _closure(q, [v], q.out_neighbors)


def covering_pairs(q: Quiver) -> list[CoveringPair]:
    """All arrows that lie on no bi-infinite path, sorted by (src, dst)."""
    cyc = cycle_vertices(q)
    fed_by_cycle = _closure(q, cyc, q.out_neighbors)
    feeds_cycle = _closure(q, cyc, q.in_neighbors)
    return [
        CoveringPair(i, j)
        for i, j, _ in q.arrows()
        if not (i in fed_by_cycle and j in feeds_cycle)
    ]


def _repeating_walk_exists(
    start: int, neighbors: Callable[[int], list[int]], length: int
) -> bool:
    """Brute-force: does some walk of exactly ``length`` steps from ``start``
    revisit a vertex?  Enumerates walks outright; no reachability shortcuts."""

    def extend(walk: list[int]) -> bool:
        if len(walk) == length + 1:
            return len(set(walk)) <= length
        return any(extend(walk + [u]) for u in neighbors(walk[-1]))

    return extend([start])


def on_bi_infinite_path_oracle(q: Quiver, arrow: tuple[int, int]) -> bool:
    """Independent check that an arrow sits on a bi-infinite path.

    One exists iff some backward walk of length n from the tail repeats a
    vertex and some forward walk of length n from the head repeats one.
    Exponential; shipped as the cross-check oracle for covering_pairs.
    """
    i, j = arrow
    if not q.has_arrow(i, j):
        raise ArrowMissingError(f"no arrow {i}->{j}")
    return _repeating_walk_exists(i, q.in_neighbors, q.n) and _repeating_walk_exists(
        j, q.out_neighbors, q.n
    )


def covering_split(q: Quiver, cp: CoveringPair | tuple[int, int]) -> TriangularSplit:
    """The A/B/C/D partition induced by a covering pair.

    Raises NotACoveringPairError when the arrow is absent or lies on a
    bi-infinite path.
    """
    i, j = cp
    if not q.has_arrow(i, j):
        raise NotACoveringPairError(f"no arrow {i}->{j}")
    if CoveringPair(i, j) not in covering_pairs(q):
        raise NotACoveringPairError(f"arrow {i}->{j} lies on a bi-infinite path")
    a = frozenset(ancestors(q, i))
    b = frozenset(descendants(q, j))
    verts = set(q.vertices)
    return TriangularSplit(a=a, b=b, c=frozenset(verts - a), d=frozenset(verts - b))


def is_triangular_extension(q: Quiver, x: Iterable[int]) -> CrossDirection:
    """Classify all arrows crossing the bipartition (X, complement).

    X_TO_Y, Y_TO_X, and NO_CROSS each witness a triangular extension of
    the two induced subquivers; MIXED means there is none on this split.
    """
    xs = set(x)
    verts = set(q.vertices)
    if not xs or not xs < verts:
        raise BadPartitionError(f"need an nonempty proper subset of vertices, got {sorted(xs)}")
    forward = backward = False
    for s, t, _ in q.arrows():
        if s in xs and t not in xs:
            forward = True
        elif s not in xs and t in xs:
            backward = True
    if forward and backward:
        return CrossDirection.MIXED
    if forward:
        return CrossDirection.X_TO_Y
    if backward:
        return CrossDirection.Y_TO_X
    return CrossDirection.NO_CROSS


def normalize_covering_pair(q: Quiver, cp: CoveringPair | tuple[int, int]) -> NormalizationResult:
    """Source or sink mutation sequence turning a covering pair's tail into
    a source or its head into a sink.

    The sequence avoids both endpoints.  When the tail's ancestor side is
    acyclic, its topological order up to (excluding) the tail is a source
    sequence doing the job; otherwise the descendant side is acyclic and
    the mirrored sink sequence is used.  The tail case is preferred when
    both apply.
    """
    i, j = cp
    split = covering_split(q, cp)
    if i in sources(q):
        return NormalizationResult((), q, NormalizationMode.SOURCE_AT_I)
    if j in sinks(q):
        return NormalizationResult((), q, NormalizationMode.SINK_AT_J)

    sub_a, map_a = induced_subquiver(q, split.a)
    if is_acyclic(sub_a):
        inv = {new: old for old, new in map_a.items()}
        order = [inv[v] for v in acyclic_ordering(sub_a).order]
        w = tuple(order[: order.index(i)])
        return NormalizationResult(w, apply_sequence(q, w), NormalizationMode.SOURCE_AT_I)

    sub_b, map_b = induced_subquiver(q, split.b)
    inv = {new: old for old, new in map_b.items()}
    order = [inv[v] for v in acyclic_ordering(sub_b).order]
    sink_seq = list(reversed(order))
    w = tuple(sink_seq[: sink_seq.index(j)])
    return NormalizationResult(w, apply_sequence(q, w), NormalizationMode.SINK_AT_J)

"""Exchange-matrix quivers, mutation, and subquivers.

A quiver is a finite multidigraph without loops or directed 2-cycles.
Because 2-cycles are forbidden, the skew-symmetric integer matrix
``b[i][j] = (#arrows i->j) - (#arrows j->i)`` is a lossless encoding:
a positive entry is a bundle of parallel arrows, and the opposite
direction is empty.  Vertices are labeled 1..n throughout.

All values are immutable; every operation returns a new quiver.
Entries are plain Python integers, so multiplicities never overflow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadMultiplicityError,
    EmptySetError,
    LoopArrowError,
    QuiverShapeError,
    TwoCycleError,
    UnknownVertexError,
)


@dataclass(frozen=True)
class Permutation:
    """Bijection on vertex labels 1..n; ``image[i-1]`` is the image of i."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {self.image!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, v: int) -> int:
        return self.image[v - 1]

    def __len__(self) -> int:
        return len(self.image)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, s in enumerate(self.image):
            inv[s - 1] = i + 1
        return Permutation(tuple(inv))

    def after(self, other: "Permutation") -> "Permutation":
        """Composition ``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self(other(v)) for v in range(1, len(self.image) + 1)))


@dataclass(frozen=True)
class Quiver:
    """A quiver as a skew-symmetric integer exchange matrix."""

    n: int
    b: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise QuiverShapeError(f"negative vertex count n={self.n}")
        if len(self.b) != self.n or any(len(row) != self.n for row in self.b):
            raise QuiverShapeError(f"matrix shape does not match n={self.n}")
        for i in range(self.n):
            if self.b[i][i] != 0:
                raise LoopArrowError(f"nonzero diagonal entry at vertex {i + 1}")
            for j in range(i + 1, self.n):
                if self.b[i][j] != -self.b[j][i]:
                    raise QuiverShapeError(
                        f"matrix is not skew-symmetric at ({i + 1},{j + 1})"
                    )

    # Internal constructor for values already known to be valid (hot paths).
    @classmethod
    def _wrap(cls, n: int, b: tuple[tuple[int, ...], ...]) -> "Quiver":
        q = object.__new__(cls)
        object.__setattr__(q, "n", n)
        object.__setattr__(q, "b", b)
        return q

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow_mult(self, i: int, j: int) -> int:
        """Number of parallel arrows i->j (0 if the arrow points the other way)."""
        return max(self.b[i - 1][j - 1], 0)

    def has_arrow(self, i: int, j: int) -> bool:
        return self.b[i - 1][j - 1] > 0

    def arrows(self) -> Iterator[tuple[int, int, int]]:
        """Yield (src, dst, mult) for every arrow bundle, sorted by (src, dst)."""
        for i in range(self.n):
            for j in range(self.n):
                if self.b[i][j] > 0:
                    yield (i + 1, j + 1, self.b[i][j])

    def arrow_count(self) -> int:
        """Total number of arrows, counting multiplicity."""
        return sum(m for _, _, m in self.arrows())

    def has_arrows(self) -> bool:
        return any(x > 0 for row in self.b for x in row)

    def out_neighbors(self, v: int) -> list[int]:
        row = self.b[v - 1]
        return [j + 1 for j in range(self.n) if row[j] > 0]

    def in_neighbors(self, v: int) -> list[int]:
        row = self.b[v - 1]
        return [j + 1 for j in range(self.n) if row[j] < 0]

    def max_abs_entry(self) -> int:
        return max((abs(x) for row in self.b for x in row), default=0)

    def permuted(self, sigma: Permutation) -> "Quiver":
        """Relabeled quiver sigma.Q with an arrow sigma(i)->sigma(j) per arrow i->j."""
        if len(sigma) != self.n:
            raise UnknownVertexError(
                f"permutation on {len(sigma)} labels applied to quiver on {self.n}"
            )
        new = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            si = sigma(i + 1) - 1
            row = self.b[i]
            for j in range(self.n):
                new[si][sigma(j + 1) - 1] = row[j]
        return Quiver._wrap(self.n, tuple(tuple(r) for r in new))

    def __repr__(self) -> str:
        arrs = ", ".join(f"{i}->{j}x{m}" if m > 1 else f"{i}->{j}" for i, j, m in self.arrows())
        return f"Quiver(n={self.n}, [{arrs}])"


def _check_vertex(q_n: int, v: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= q_n:
        raise UnknownVertexError(f"vertex {v!r} outside 1..{q_n}")


def from_arrows(n: int, arrows: Iterable[tuple[int, int, int]]) -> Quiver:
    """Build a quiver on n vertices from (src, dst, mult) triples.

    Duplicate (src, dst) entries accumulate.  Raises LoopArrowError for
    src == dst, TwoCycleError if both directions between a pair appear,
    and BadMultiplicityError for mult <= 0.  The empty quiver (n=0, no
    arrows) is allowed; it arises as a doubly-deleted subquiver.
    """
    if n < 0:
        raise EmptySetError(f"negative vertex count n={n}")
    b = [[0] * n for _ in range(n)]
    seen: dict[tuple[int, int], int] = {}
    for src, dst, mult in arrows:
        _check_vertex(n, src)
        _check_vertex(n, dst)
        if src == dst:
            raise LoopArrowError(f"loop at vertex {src}")
        if mult <= 0:
            raise BadMultiplicityError(f"multiplicity {mult} for arrow {src}->{dst}")
        seen[(src, dst)] = seen.get((src, dst), 0) + mult
    for (src, dst), mult in seen.items():
        if (dst, src) in seen:
            raise TwoCycleError(f"arrows both ways between {src} and {dst}")
        b[src - 1][dst - 1] = mult
        b[dst - 1][src - 1] = -mult
    return Quiver._wrap(n, tuple(tuple(row) for row in b))


def from_matrix(rows: Sequence[Sequence[int]]) -> Quiver:
    """Build a quiver from a full skew-symmetric matrix, with validation."""
    return Quiver(len(rows), tuple(tuple(int(x) for x in row) for row in rows))


def mutate(q: Quiver, k: int) -> Quiver:
    """Mutation at vertex k via the exchange-matrix rule.

    Entries in row/column k flip sign; any other entry picks up the
    composition through k when both legs point the same way.  Agrees with
    mutate_graphical on every input (tested property).
    """
    _check_vertex(q.n, k)
    n = q.n
    b = q.b
    ki = k - 1
    new_rows = []
    for i in range(n):
        row = b[i]
        if i == ki:
            new_rows.append(tuple(-x for x in row))
            continue
        bik = row[ki]
        new = list(row)
        new[ki] = -bik
        if bik != 0:
            krow = b[ki]
            sign = 1 if bik > 0 else -1
            for j in range(n):
                if j == ki or j == i:
                    continue
                prod = bik * krow[j]
                if prod > 0:
                    new[j] = row[j] + sign * prod
        new_rows.append(tuple(new))
    return Quiver._wrap(n, tuple(new_rows))


def mutate_graphical(q: Quiver, k: int) -> Quiver:
    """Mutation at vertex k by the literal three-step arrow procedure.

    (1) for each 2-path j->k->l add one arrow j->l per ordered pair of
    arrows, (2) reverse every arrow incident to k, (3) cancel opposite
    arrow pairs.  Kept as the permanently shipped reference oracle for
    mutate().
    """
    _check_vertex(q.n, k)
    counts: dict[tuple[int, int], int] = {(i, j): m for i, j, m in q.arrows()}

    into_k = [(i, m) for (i, j), m in counts.items() if j == k]
    out_of_k = [(j, m) for (i, j), m in counts.items() if i == k]

    # Step 1: compose 2-paths through k.
    for i, m_in in into_k:
        for j, m_out in out_of_k:
            counts[(i, j)] = counts.get((i, j), 0) + m_in * m_out

    # Step 2: reverse arrows incident to k.
    reversed_counts: dict[tuple[int, int], int] = {}
    for (i, j), m in counts.items():
        key = (j, i) if k in (i, j) else (i, j)
        reversed_counts[key] = reversed_counts.get(key, 0) + m

    # Step 3: cancel 2-cycles created in step 1.
    b = [[0] * q.n for _ in range(q.n)]
    for (i, j), m in reversed_counts.items():
        b[i - 1][j - 1] += m
        b[j - 1][i - 1] -= m
    return Quiver._wrap(q.n, tuple(tuple(row) for row in b))


def apply_sequence(q: Quiver, steps: Sequence[int]) -> Quiver:
    """Left-to-right fold of mutate over a mutation sequence."""
    for k in steps:
        q = mutate(q, k)
    return q


def induced_subquiver(q: Quiver, keep: Iterable[int]) -> tuple[Quiver, dict[int, int]]:
    """Full subquiver on the given vertices plus the old->new label map.

    Labels are compacted to 1..|keep| preserving numeric order.
    """
    kept = sorted(set(keep))
    if not kept:
        raise EmptySetError("cannot take the subquiver on an empty vertex set")
    for v in kept:
        _check_vertex(q.n, v)
    label_map = {old: new + 1 for new, old in enumerate(kept)}
    b = tuple(tuple(q.b[i - 1][j - 1] for j in kept) for i in kept)
    return Quiver._wrap(len(kept), b), label_map


def delete_vertices(q: Quiver, removed: Iterable[int]) -> tuple[Quiver, dict[int, int]]:
    """Subquiver with the given vertices removed; companion to induced_subquiver.

    Unlike induced_subquiver this may produce the empty quiver, which is
    what a split on a 2-vertex quiver deletes down to.
    """
    removed_set = set(removed)
    for v in removed_set:
        _check_vertex(q.n, v)
    if len(removed_set) == q.n:
        return Quiver._wrap(0, ()), {}
    return induced_subquiver(q, (v for v in q.vertices if v not in removed_set))


def sources(q: Quiver) -> frozenset[int]:
    """Vertices with no incoming arrows."""
    return frozenset(
        i + 1 for i in range(q.n) if all(x >= 0 for x in q.b[i])
    )


def sinks(q: Quiver) -> frozenset[int]:
    """Vertices with no outgoing arrows."""
    return frozenset(
        i + 1 for i in range(q.n) if all(x <= 0 for x in q.b[i])
    )


def random_quiver(n: int, max_mult: int, seed: int) -> Quiver:
    """Seed-deterministic random quiver with |entries| <= max_mult."""
    if n < 1:
        raise EmptySetError("a quiver needs at least one vertex")
    if max_mult < 0:
        raise BadMultiplicityError(f"max_mult must be >= 0, got {max_mult}")
    rng = random.Random(seed)
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            val = rng.randint(-max_mult, max_mult)
            b[i][j] = val
            b[j][i] = -val
    return Quiver._wrap(n, tuple(tuple(row) for row in b))

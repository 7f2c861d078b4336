"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from quiverforge.quiver import Quiver, mutate, random_quiver

# The 6-vertex running example: arrows (src, dst, mult).  Vertex 6 feeds
# the 5-cycle region through the single arrow 6->5.
REMARK_ARROWS = [
    (1, 2, 2),
    (2, 3, 1),
    (2, 4, 1),
    (3, 1, 1),
    (3, 4, 1),
    (4, 1, 1),
    (4, 5, 1),
    (5, 3, 1),
    (6, 5, 1),
]


def remark_quiver() -> Quiver:
    from quiverforge.quiver import from_arrows

    return from_arrows(6, REMARK_ARROWS)


def random_acyclic(n: int, max_mult: int, rng: random.Random) -> Quiver:
    """Random quiver with all arrows oriented along a random vertex order."""
    base = random_quiver(n, max_mult, rng.randrange(1 << 30))
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pos = {v: t for t, v in enumerate(order)}
    b = [[0] * n for _ in range(n)]
    for i, j, m in base.arrows():
        s, t = (i, j) if pos[i] < pos[j] else (j, i)
        b[s - 1][t - 1] = m
        b[t - 1][s - 1] = -m
    return Quiver._wrap(n, tuple(tuple(row) for row in b))


def mutation_walk_within_cap(q: Quiver, length: int, cap: int, rng: random.Random) -> Quiver:
    """Random mutation walk whose every intermediate stays within the entry cap."""
    cur = q
    for _ in range(length):
        options = [v for v in cur.vertices if mutate(cur, v).max_abs_entry() <= cap]
        if not options:
            break
        cur = mutate(cur, rng.choice(options))
    return cur


def brute_force_canonical(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Independent canonical form: plain minimum over all permutations."""
    n = q.n
    best = None
    for p in itertools.permutations(range(n)):
        rows = tuple(tuple(q.b[p[i]][p[j]] for j in range(n)) for i in range(n))
        if best is None or rows < best:
            best = rows
    assert best is not None
    return best


@st.composite
def quivers(draw, min_n: int = 1, max_n: int = 6, max_mult: int = 3):
    """Hypothesis strategy for valid quivers."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pair_count = n * (n - 1) // 2
    entries = draw(
        st.lists(
            st.integers(min_value=-max_mult, max_value=max_mult),
            min_size=pair_count,
            max_size=pair_count,
        )
    )
    b = [[0] * n for _ in range(n)]
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            b[i][j] = entries[idx]
            b[j][i] = -entries[idx]
            idx += 1
    return Quiver._wrap(n, tuple(tuple(row) for row in b))


@st.composite
def quivers_with_vertex(draw, **kwargs):
    q = draw(quivers(**kwargs))
    k = draw(st.integers(min_value=1, max_value=q.n))
    return q, k

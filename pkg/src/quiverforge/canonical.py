"""Canonical labeling and isomorphism testing for small quivers.

The canonical form of a quiver is the lexicographically smallest exchange
matrix over all vertex relabelings, compared row-major.  Two quivers are
isomorphic exactly when their canonical matrices coincide.

Two interchangeable engines compute the minimum: a vectorized sweep over
the full permutation table (small n, small entries) and a backtracking
search with a per-row lower bound (everything else).  Both return the
same matrix; they are cross-checked in the test suite.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Optional

import numpy as np

from .quiver import Permutation, Quiver

# The table path gathers every permuted matrix at once; beyond n=7 the
# table itself is too large, and entries must fit an offset byte.
_TABLE_MAX_N = 7
_TABLE_MAX_ENTRY = 100


@lru_cache(maxsize=None)
def _perm_table(n: int) -> tuple[tuple[tuple[int, ...], ...], np.ndarray]:
    """All permutations of 0..n-1 plus flat gather indices of shape (n!, n*n)."""
    perms = tuple(itertools.permutations(range(n)))
    flat = np.empty((len(perms), n * n), dtype=np.int32)
    for t, p in enumerate(perms):
        for i in range(n):
            base = p[i] * n
            for j in range(n):
                flat[t, i * n + j] = base + p[j]
    return perms, flat


def _canon_table(q: Quiver) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    n = q.n
    perms, flat_idx = _perm_table(n)
    flat_b = np.fromiter(
        (x + 128 for row in q.b for x in row), dtype=np.uint8, count=n * n
    )
    gathered = flat_b[flat_idx]
    buf = gathered.tobytes()
    m = n * n
    best_t = min(range(len(perms)), key=lambda t: buf[t * m : (t + 1) * m])
    p = perms[best_t]
    rows = tuple(tuple(q.b[p[i]][p[j]] for j in range(n)) for i in range(n))
    return rows, p


def _vertex_profile(b: tuple[tuple[int, ...], ...], v: int) -> tuple:
    row = b[v]
    outs = sorted((x for x in row if x > 0), reverse=True)
    ins = sorted((-x for x in row if x < 0), reverse=True)
    return (tuple(outs), tuple(ins))


def _canon_search(q: Quiver) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Branch-and-bound over vertex orderings.

    A partial ordering of k vertices fixes the top-left k x k block; padding
    each of the first k rows with its remaining entries sorted ascending is a
    row-major lower bound for every completion, so any prefix whose bound
    already exceeds the incumbent's first k rows can be dropped.
    """
    n, b = q.n, q.b
    order_hint = sorted(range(n), key=lambda v: (_vertex_profile(b, v), v))
    best_rows: Optional[list[tuple[int, ...]]] = None
    best_perm: Optional[tuple[int, ...]] = None
    prefix: list[int] = []
    in_prefix = [False] * n

    def extend() -> None:
        nonlocal best_rows, best_perm
        k = len(prefix)
        if k == n:
            rows = [tuple(b[u][v] for v in prefix) for u in prefix]
            if best_rows is None or rows < best_rows:
                best_rows = rows
                best_perm = tuple(prefix)
            return
        if best_rows is not None and k > 0:
            unused = [u for u in range(n) if not in_prefix[u]]
            bound = []
            for i in range(k):
                bi = b[prefix[i]]
                det = [bi[p] for p in prefix]
                det.extend(sorted(bi[u] for u in unused))
                bound.append(tuple(det))
            if bound > best_rows[:k]:
                return
        for v in order_hint:
            if in_prefix[v]:
                continue
            prefix.append(v)
            in_prefix[v] = True
            extend()
            prefix.pop()
            in_prefix[v] = False

    extend()
    assert best_rows is not None and best_perm is not None
    return tuple(best_rows), best_perm


def canonical_form(q: Quiver) -> tuple[Quiver, Permutation]:
    """Smallest relabeled exchange matrix plus a witnessing permutation.

    The witness sigma satisfies ``q.permuted(sigma) == canonical quiver``.
    Equality of canonical matrices is exactly isomorphism.
    """
    if q.n <= 1:
        return q, Permutation.identity(q.n)
    if q.n <= _TABLE_MAX_N and q.max_abs_entry() <= _TABLE_MAX_ENTRY:
        rows, p = _canon_table(q)
    else:
        rows, p = _canon_search(q)
    image = [0] * q.n
    for new_pos, old in enumerate(p):
        image[old] = new_pos + 1
    return Quiver._wrap(q.n, rows), Permutation(tuple(image))


def canonical_key(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Hashable canonical matrix, for dedup sets and memo keys."""
    return canonical_form(q)[0].b


def is_isomorphic(q: Quiver, r: Quiver) -> Optional[Permutation]:
    """A permutation sigma with sigma.q == r, or None if not isomorphic."""
    if q.n != r.n:
        return None
    cq, sq = canonical_form(q)
    cr, sr = canonical_form(r)
    if cq.b != cr.b:
        return None
    return sr.inverse().after(sq)


def enumerate_quivers_up_to_iso(n: int, max_mult: int) -> list[Quiver]:
    """All quivers on n vertices with |entries| <= max_mult, one per iso class.

    Enumerates every upper-triangle assignment, so the cost is
    (2*max_mult+1)^(n(n-1)/2) before deduplication; fine for desk-scale
    arguments, hopeless beyond them.
    """
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[tuple[tuple[int, ...], ...]] = set()
    out: list[Quiver] = []
    for entries in itertools.product(range(-max_mult, max_mult + 1), repeat=len(pairs)):
        b = [[0] * n for _ in range(n)]
        for (r, c), val in zip(pairs, entries):
            b[r][c] = val
            b[c][r] = -val
        q = Quiver._wrap(n, tuple(tuple(row) for row in b))
        key = canonical_key(q)
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out

"""Partitions, multipartitions and the box statistics attached to them.

A partition is a weakly decreasing tuple of positive integers, a
multipartition is a tuple of n partitions with |mu_i| = gamma_i.  The
statistics below control the polytope attached to a multipartition: the
capacities P_{s,i} and the base grade shift K.
"""

from __future__ import annotations

from functools import lru_cache


def check_partition(mu) -> tuple[int, ...]:
    parts = tuple(mu)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError("parts must be weakly decreasing, got %r" % (parts,))
    if parts and parts[-1] <= 0:
        raise ValueError("parts must be positive, got %r" % (parts,))
    return parts


def col_count(mu, s: int) -> int:
    """Number of boxes in the first s columns, sum of min(part, s)."""
    return sum(min(p, s) for p in mu)


def row_mult(mu, r: int) -> int:
    """Number of rows of length exactly r."""
    return sum(1 for p in mu if p == r)


@lru_cache(maxsize=None)
def _partitions_bounded(m: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, maxpart), 0, -1):
        for rest in _partitions_bounded(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(m: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of m, largest first part first."""
    if m < 0:
        raise ValueError("cannot partition %d" % m)
    return _partitions_bounded(m, m)


def compute_P(mp, lam, s: int, i: int) -> int:
    """Capacity at depth s and node i.

    lam_i - 2 mu_i(s) + mu_{i-1}(s) + mu_{i+1}(s), where mu(s) counts the
    boxes in the first s columns and missing neighbours count as empty.
    """
    n = len(lam)
    if not 1 <= i <= n:
        raise ValueError("node %d out of range" % i)
    left = col_count(mp[i - 2], s) if i >= 2 else 0
    right = col_count(mp[i], s) if i <= n - 1 else 0
    return lam[i - 1] - 2 * col_count(mp[i - 1], s) + left + right


def compute_K(mp, lam) -> int:
    """Base grade of a multipartition.

    Sum over nodes of  sum_j (2 j mu_i^j - mu_{i+1}(mu_i^j)) - lam_i d(mu_i),
    with d the number of rows and mu_{n+1} empty.
    """
    n = len(lam)
    total = 0
    for i in range(1, n + 1):
        mu = mp[i - 1]
        nxt = mp[i] if i <= n - 1 else ()
        for j, part in enumerate(mu, start=1):
            total += 2 * j * part - col_count(nxt, part)
        total -= lam[i - 1] * len(mu)
    return total


def enumerate_multipartitions(gamma, lam, prune: bool = True,
                              relaxed_empty_groups: bool = False):
    """All multipartitions mu with |mu_i| = gamma_i, optionally pruned.

    With prune on, a multipartition survives only if every capacity
    P_{s,i} for 1 <= s <= gamma_i is nonnegative.  In relaxed mode the
    depths s with no row of length s are exempt.  Pruning happens during
    the node-by-node search: the capacities at node i only involve
    mu_{i-1}, mu_i, mu_{i+1}, so they are checked as soon as the next
    component is chosen.
    """
    lam = tuple(lam)
    gamma = tuple(gamma)
    n = len(lam)
    if len(gamma) != n:
        raise ValueError("gamma and lam have different ranks")
    if any(g < 0 for g in gamma):
        raise ValueError("gamma must be nonnegative, got %r" % (gamma,))
    choices = [partitions_of(g) for g in gamma]
    out = []
    cur = []

    def caps_ok(i):
        # capacities at node i; callable once cur holds mu_1 .. mu_{i+1}
        mu_prev = cur[i - 2] if i >= 2 else ()
        mu_i = cur[i - 1]
        mu_next = cur[i] if i <= n - 1 else ()
        base = lam[i - 1]
        for s in range(1, gamma[i - 1] + 1):
            if relaxed_empty_groups and row_mult(mu_i, s) == 0:
                continue
            if base - 2 * col_count(mu_i, s) + col_count(mu_prev, s) + col_count(mu_next, s) < 0:
                return False
        return True

    def extend(i):
        for part in choices[i - 1]:
            cur.append(part)
            if prune and i >= 2 and not caps_ok(i - 1):
                cur.pop()
                continue
            if i == n:
                if not prune or caps_ok(n):
                    out.append(tuple(cur))
            else:
                extend(i + 1)
            cur.pop()

    if n:
        extend(1)
    return out

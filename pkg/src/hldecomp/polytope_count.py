"""Graded multiplicities as lattice point counts.

Each multipartition mu of shape gamma carries a polytope: variables
C_{d,r,i} grouped by node i and row length r (d runs over the m_{i,r}
rows of that length), subject to

  * C >= 0 and sum_d C_{d,r,i} <= P_{r,i} for every depth 1 <= r <= r_i,
  * for every pair of consecutive word nodes (a, b), at least one of
    the top variables C_{m_{t,1},1,t} with a <= t <= b is positive.

The grade of a lattice point with level sum_{d,r,i} d * C_{d,r,i} is
p = (|gamma| - K(mu)) - level, and the multiplicity polynomial of gamma
is the sum over multipartitions of the grade histograms.
"""

from __future__ import annotations

import os
from itertools import combinations

from . import multipartition as mpart
from .hl_category import consecutive_pairs, weight_of


def _load_kernel():
    if not os.environ.get("HLDECOMP_PURE"):
        try:
            from . import _enumeration as kernel  # type: ignore[attr-defined]
            return kernel, "compiled"
        except ImportError:
            pass
    from . import _enumeration_py as kernel
    return kernel, "pure"


_kernel, _KERNEL_NAME = _load_kernel()


def kernel_name() -> str:
    """Enumeration backend selected at import ("compiled" or "pure")."""
    return _KERNEL_NAME


class QPolynomial:
    """Polynomial in q with nonnegative integer coefficients.

    Stored sparsely as {grade: coefficient}; zeros are never kept.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for p, c in items:
                p = int(p)
                c = int(c)
                if p < 0:
                    raise ValueError("negative grade %d" % p)
                if c < 0:
                    raise ValueError("negative coefficient %d at grade %d" % (c, p))
                if c:
                    data[p] = data.get(p, 0) + c
        self.coeffs = data

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return QPolynomial(out)

    def __getitem__(self, p):
        return self.coeffs.get(int(p), 0)

    def at_one(self) -> int:
        """Value at q = 1, the ungraded multiplicity."""
        return sum(self.coeffs.values())

    def support(self):
        return sorted(self.coeffs)

    def __repr__(self):
        return "QPolynomial(%r)" % (self.coeffs,)

    def plain(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for p in sorted(self.coeffs):
            c = self.coeffs[p]
            power = "" if p == 0 else ("q" if p == 1 else "q^%d" % p)
            if not power:
                terms.append(str(c))
            else:
                terms.append(power if c == 1 else "%d%s" % (c, power))
        return " + ".join(terms)

    def latex(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for p in sorted(self.coeffs):
            c = self.coeffs[p]
            power = "" if p == 0 else ("q" if p == 1 else "q^{%d}" % p)
            if not power:
                terms.append(str(c))
            else:
                terms.append(power if c == 1 else "%d%s" % (c, power))
        return "+".join(terms)

    def to_json(self) -> dict:
        return {str(p): self.coeffs[p] for p in sorted(self.coeffs)}

    @classmethod
    def from_json(cls, data) -> "QPolynomial":
        return cls({int(p): c for p, c in data.items()})


class PolytopeSpec:
    """Counting data for one multipartition.

    groups: ((r, i), size, cap) triples for the depths with at least one
    row, in (i, r) order; flat variables enumerate each group as
    d = 1..size.  pair_sets: flat index sets of the emitted pair
    constraints.  infeasible: some capacity is negative (on an empty
    depth this only counts in strict mode), so the count is zero.
    """

    __slots__ = ("n", "groups", "pair_sets", "infeasible")

    def __init__(self, n, groups, pair_sets, infeasible=False):
        self.n = n
        self.groups = tuple(groups)
        self.pair_sets = tuple(tuple(s) for s in pair_sets)
        self.infeasible = bool(infeasible)

    def variables(self):
        """Flat variable labels (d, r, i) in enumeration order."""
        out = []
        for (r, i), size, _ in self.groups:
            out.extend((d, r, i) for d in range(1, size + 1))
        return out

    def group_caps(self):
        return {key: cap for key, _, cap in self.groups}


def build_polytope(parts, lam, pairs=(), relaxed_empty_groups: bool = False) -> PolytopeSpec:
    """Polytope of one multipartition.

    parts: tuple of partitions, component i holding gamma_i boxes.
    pairs: node intervals (a, b) of consecutive word factors.  The pair
    constraint for (a, b) is emitted only when every node in the range
    has a row of length 1; otherwise the underlying relation is vacuous
    and the constraint is dropped.
    """
    n = len(lam)
    if len(parts) != n:
        raise ValueError("multipartition has %d components, expected %d" % (len(parts), n))
    groups = []
    start_of = {}
    flat = 0
    infeasible = False
    for i in range(1, n + 1):
        mu = parts[i - 1]
        r_i = sum(mu)
        for r in range(1, r_i + 1):
            size = mpart.row_mult(mu, r)
            cap = mpart.compute_P(parts, lam, r, i)
            if size:
                if cap < 0:
                    infeasible = True
                start_of[(r, i)] = flat
                groups.append(((r, i), size, cap))
                flat += size
            elif cap < 0 and not relaxed_empty_groups:
                infeasible = True
    pair_sets = []
    for (a, b) in pairs:
        tops = []
        for t in range(a, b + 1):
            m_t = mpart.row_mult(parts[t - 1], 1)
            if m_t == 0:
                tops = None
                break
            tops.append(start_of[(1, t)] + m_t - 1)
        if tops is not None:
            pair_sets.append(tuple(tops))
    return PolytopeSpec(n, groups, pair_sets, infeasible)


def count_by_grade(spec: PolytopeSpec, height: int, K: int) -> QPolynomial:
    """Grade polynomial of one polytope.

    height is |gamma|; a point of level L contributes to grade
    p = (height - K) - L, so the histogram is read off in reverse.
    """
    max_level = height - K
    if spec.infeasible or max_level < 0:
        return QPolynomial()
    sizes = [size for _, size, _ in spec.groups]
    caps = [cap for _, _, cap in spec.groups]
    hist = _kernel.count_levels(sizes, caps, [list(s) for s in spec.pair_sets], max_level)
    return QPolynomial({max_level - lvl: cnt for lvl, cnt in enumerate(hist) if cnt})


def count_by_grade_ie(spec: PolytopeSpec, height: int, K: int) -> QPolynomial:
    """Independent recount of count_by_grade by inclusion-exclusion.

    A pair constraint fails exactly when all its variables vanish, so
    summing (-1)^|S| over subsets S of constraints with their variable
    union pinned to zero counts the admissible points.  Each term is a
    product of per-group level generating polynomials; used to cross
    check the depth-first kernel, not for speed.
    """
    max_level = height - K
    if spec.infeasible or max_level < 0:
        return QPolynomial()
    owner = []
    for g, (_, size, _) in enumerate(spec.groups):
        owner.extend((g, d) for d in range(1, size + 1))
    npairs = len(spec.pair_sets)
    acc = [0] * (max_level + 1)
    for k in range(npairs + 1):
        sign = -1 if k % 2 else 1
        for S in combinations(range(npairs), k):
            banned = [set() for _ in spec.groups]
            for c in S:
                for v in spec.pair_sets[c]:
                    g, d = owner[v]
                    banned[g].add(d)
            term = [1] + [0] * max_level
            for g, (_, size, cap) in enumerate(spec.groups):
                term = _convolve_truncated(
                    term, _group_poly(size, cap, banned[g], max_level), max_level)
                if not any(term):
                    break
            for lvl, cnt in enumerate(term):
                acc[lvl] += sign * cnt
    assert all(c >= 0 for c in acc), "inclusion-exclusion went negative"
    return QPolynomial({max_level - lvl: c for lvl, c in enumerate(acc) if c})


def _group_poly(size, cap, banned, max_level):
    # level histogram of one group: C_d >= 0 for d = 1..size with the
    # banned weights pinned to zero, sum C <= cap, level sum d*C_d
    if cap < 0:
        return [0] * (max_level + 1)
    states = {(0, 0): 1}  # (used, level) -> count
    for d in range(1, size + 1):
        if d in banned:
            continue
        nxt = {}
        for (used, lvl), cnt in states.items():
            c = 0
            while used + c <= cap and lvl + c * d <= max_level:
                key = (used + c, lvl + c * d)
                nxt[key] = nxt.get(key, 0) + cnt
                c += 1
        states = nxt
    out = [0] * (max_level + 1)
    for (_, lvl), cnt in states.items():
        out[lvl] += cnt
    return out


def _convolve_truncated(a, b, max_level):
    out = [0] * (max_level + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if i + j > max_level:
                break
            if y:
                out[i + j] += x * y
    return out


def multiplicity(word, gamma, relaxed_empty_groups: bool = False,
                 strategy: str = "dfs") -> QPolynomial:
    """Graded multiplicity polynomial of V(wt(word) - gamma).

    Sums the grade histograms of the polytopes of all multipartitions of
    shape gamma that survive the capacity pruning.
    """
    if strategy not in ("dfs", "ie"):
        raise ValueError("unknown strategy %r" % (strategy,))
    lam = weight_of(word)
    gamma = tuple(gamma)
    if len(gamma) != len(lam):
        raise ValueError("gamma has rank %d, expected %d" % (len(gamma), len(lam)))
    pairs = consecutive_pairs(word)
    height = sum(gamma)
    counter = count_by_grade if strategy == "dfs" else count_by_grade_ie
    total = QPolynomial()
    for parts in mpart.enumerate_multipartitions(
            gamma, lam, prune=True, relaxed_empty_groups=relaxed_empty_groups):
        spec = build_polytope(parts, lam, pairs, relaxed_empty_groups)
        total = total + counter(spec, height, mpart.compute_K(parts, lam))
    return total

"""Dual realization of graded multiplicities as spaces of Laurent polynomials.

For gamma = sum_i r_i alpha_i attach variables x_{i,1}, ..., x_{i,r_i}
to node i.  The multiplicity of grade p at gamma equals the dimension
of the space of Laurent polynomials f that are

  * symmetric in each node's variables,
  * vanishing under the specialization x_{i,1} = x_{i,2} = x_{j,1} for
    every edge (i, j) of the diagram,
  * homogeneous of total degree -p - |gamma| + e_gamma, where
    e_gamma = sum_i r_i r_{i+1},
  * of degree at most r_{i-1} + r_{i+1} - 2 in each variable of node i,

and satisfy two families of specialization conditions:

  * pole depth: z^{lam_i} f|_{x_{i,1}=...=x_{i,r}=z} has no pole at
    z = 0, for every node i and 2 <= r <= r_i (the r = 1 case is the
    monomial window below),
  * interval vanishing: z^{v} f|_{x_{a,1}=x_{a+1,1}=...=x_{b,1}=z} has
    no pole at z = 0, where in full mode (a, b) runs over all intervals
    whose nodes all carry a variable and v = xi_{a,b}, and in pair mode
    only over consecutive word node pairs with v = 1.

Symmetry reduces everything to the orbit basis: one spanning function
per family of per-node exponent multisets inside the window
[lo_i, hi_i], lo_i = -lam_i (pair mode) or -min(lam_i, xi_{i,i}) (full
mode), hi_i = r_{i-1} + r_{i+1} - 2.  Each condition contributes integer
linear relations on orbit coefficients; the dimension is the corank of
the relation matrix, computed fraction-free.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .hl_category import consecutive_pairs, is_normalized, weight_of
from .polytope_count import QPolynomial
from .root_system import e_gamma, enumerate_dominant_gammas, gamma_height, pairing


def variable_bounds(lam, gamma, mode: str, xi=None) -> dict[int, tuple[int, int]]:
    """Exponent window [lo_i, hi_i] for each node carrying a variable."""
    n = len(lam)
    r = (0,) + tuple(gamma) + (0,)
    out = {}
    for i in range(1, n + 1):
        if r[i] == 0:
            continue
        hi = r[i - 1] + r[i + 1] - 2
        if mode == "pair":
            lo = -lam[i - 1]
        elif mode == "full":
            lo = -min(lam[i - 1], xi[(i, i)])
        else:
            raise ValueError("unknown mode %r" % (mode,))
        out[i] = (lo, hi)
    return out


def _node_multisets(r, lo, hi):
    """Weakly decreasing exponent tuples, grouped by total degree."""
    out = {}

    def rec(prefix, maxv, total):
        if len(prefix) == r:
            out.setdefault(total, []).append(tuple(prefix))
            return
        for v in range(min(maxv, hi), lo - 1, -1):
            prefix.append(v)
            rec(prefix, v, total + v)
            prefix.pop()

    rec([], hi, 0)
    return out


def orbit_basis(gamma, bounds, degree):
    """Families of per-node exponent multisets of the given total degree.

    Each orbit is a tuple with one weakly decreasing exponent tuple per
    node (empty for nodes without variables) and represents the sum of
    the distinct monomials in its symmetric group orbit.
    """
    n = len(gamma)
    tables = []
    for i in range(1, n + 1):
        r = gamma[i - 1]
        if r == 0:
            tables.append({0: [()]})
            continue
        lo, hi = bounds[i]
        if lo > hi:
            return []
        tables.append(_node_multisets(r, lo, hi))
    sufmin = [0] * (n + 1)
    sufmax = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        sufmin[i] = sufmin[i + 1] + min(tables[i])
        sufmax[i] = sufmax[i + 1] + max(tables[i])
    out = []
    cur = []

    def rec(i, need):
        if i == n:
            out.append(tuple(cur))
            return
        for d, msets in tables[i].items():
            rest = need - d
            if sufmin[i + 1] <= rest <= sufmax[i + 1]:
                for ms in msets:
                    cur.append(ms)
                    rec(i + 1, rest)
                    cur.pop()

    rec(0, degree)
    out.sort()
    return out


@lru_cache(maxsize=None)
def _distinct_perms(ms):
    return tuple(sorted(set(permutations(ms))))


def _desc(seq):
    return tuple(sorted(seq, reverse=True))


def constraint_rows(lam, gamma, mode: str, orbits, xi=None, intervals=None):
    """Linear relations on orbit coefficients, one row per forbidden
    monomial signature of a specialized expression.

    intervals: list of (a, b, v) to use for the interval conditions;
    derived from mode/xi when omitted.  Returns rows as dicts mapping
    orbit index to integer coefficient.
    """
    n = len(lam)
    r = (0,) + tuple(gamma) + (0,)
    index = {orb: k for k, orb in enumerate(orbits)}
    rows = {}

    def add(cond, key, orbit_idx, coeff=1):
        row = rows.setdefault((cond, key), {})
        row[orbit_idx] = row.get(orbit_idx, 0) + coeff

    # vanishing under x_{i,1} = x_{i,2} = x_{nb,1}: every signature of
    # the specialized expression must cancel
    for i in range(1, n + 1):
        if r[i] < 2:
            continue
        for nb in (i - 1, i + 1):
            if not 1 <= nb <= n or r[nb] == 0:
                continue
            cond = ("join", i, nb)
            for o, orb in enumerate(orbits):
                others = tuple(orb[t] for t in range(n) if t + 1 not in (i, nb))
                for pi in _distinct_perms(orb[i - 1]):
                    for pn in _distinct_perms(orb[nb - 1]):
                        w = pi[0] + pi[1] + pn[0]
                        key = (w, _desc(pi[2:]), _desc(pn[1:]), others)
                        add(cond, key, o)

    # pole depth: signatures with z-exponent below -lam_i must cancel
    for i in range(1, n + 1):
        for depth in range(2, r[i] + 1):
            cond = ("pole", i, depth)
            for o, orb in enumerate(orbits):
                others = tuple(orb[t] for t in range(n) if t + 1 != i)
                for pi in _distinct_perms(orb[i - 1]):
                    z = sum(pi[:depth])
                    if z + lam[i - 1] < 0:
                        key = (z, _desc(pi[depth:]), others)
                        add(cond, key, o)

    # interval vanishing: substitute the first variable of every node in
    # [a, b]; signatures with z-exponent below -v must cancel
    if intervals is None:
        intervals = derive_intervals(lam, gamma, mode, xi)
    for (a, b, v) in intervals:
        cond = ("interval", a, b)
        touched = list(range(a, b + 1))
        for o, orb in enumerate(orbits):
            others = tuple(orb[t] for t in range(n) if not a <= t + 1 <= b)
            for picks in product(*[_distinct_perms(orb[t - 1]) for t in touched]):
                z = sum(p[0] for p in picks)
                if z + v < 0:
                    key = (z, tuple(_desc(p[1:]) for p in picks), others)
                    add(cond, key, o)

    return rows


def derive_intervals(lam, gamma, mode: str, xi=None, pairs=None):
    """Interval conditions (a, b, pole depth) for the given mode.

    Intervals with a = b are covered by the monomial window and skipped;
    intervals containing a node without variables have no meaningful
    specialization and are skipped as well.
    """
    n = len(lam)
    r = tuple(gamma)
    out = []
    if mode == "pair":
        for (a, b) in pairs or ():
            if all(r[t - 1] >= 1 for t in range(a, b + 1)):
                out.append((a, b, 1))
    elif mode == "full":
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                if all(r[t - 1] >= 1 for t in range(a, b + 1)):
                    out.append((a, b, xi[(a, b)]))
    else:
        raise ValueError("unknown mode %r" % (mode,))
    return out


_PRIME = (1 << 31) - 1


def _corank_mod_p(rows, ncols, prime=_PRIME) -> int:
    """Corank of sparse integer rows over GF(prime).

    The modular rank never exceeds the rational rank, so a zero corank
    here proves the exact corank is zero; a positive value is only an
    upper bound estimate and callers must confirm it exactly.  Stops as
    soon as the echelon is full.
    """
    echelon: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {}
        for c, v in row.items():
            v %= prime
            if v:
                r[c] = v
        while r:
            lead = min(r)
            piv = echelon.get(lead)
            if piv is None:
                inv = pow(r[lead], prime - 2, prime)
                echelon[lead] = {c: (v * inv) % prime for c, v in r.items()}
                break
            coef = r[lead]
            for c, v in piv.items():
                nv = (r.get(c, 0) - coef * v) % prime
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        if len(echelon) == ncols:
            return 0
    return ncols - len(echelon)


def integer_rank(mat) -> int:
    """Rank of an integer matrix, by fraction-free elimination."""
    mat = [list(row) for row in mat if any(row)]
    if not mat:
        return 0
    m, ncols = len(mat), len(mat[0])
    rank = 0
    row = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for rr in range(row, m):
            if mat[rr][col]:
                piv = rr
                break
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        pv = mat[row][col]
        for rr in range(row + 1, m):
            v = mat[rr][col]
            for cc in range(col + 1, ncols):
                mat[rr][cc] = (pv * mat[rr][cc] - v * mat[row][cc]) // prev
            mat[rr][col] = 0
        prev = pv
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def _rows_to_matrix(rows, norbits):
    seen = set()
    mat = []
    for row in rows.values():
        vec = [0] * norbits
        for o, c in row.items():
            vec[o] = c
        key = tuple(vec)
        if any(vec) and key not in seen:
            seen.add(key)
            mat.append(vec)
    return mat


def dim_V(lam, gamma, p: int, mode: str, xi=None, pairs=None) -> int:
    """Dimension of the space of admissible functions at grade p."""
    if p < 0:
        raise ValueError("grade must be nonnegative")
    gamma = tuple(gamma)
    degree = -p - gamma_height(gamma) + e_gamma(gamma)
    bounds = variable_bounds(lam, gamma, mode, xi)
    orbits = orbit_basis(gamma, bounds, degree)
    if not orbits:
        return 0
    intervals = derive_intervals(lam, gamma, mode, xi, pairs)
    rows = constraint_rows(lam, gamma, mode, orbits, xi, intervals)
    # Sparse modular elimination first: corank 0 mod p certifies dim 0
    # exactly, and that is the common case away from gamma = 0.
    if _corank_mod_p(sorted(rows.values(), key=len), len(orbits)) == 0:
        return 0
    mat = _rows_to_matrix(rows, len(orbits))
    return len(orbits) - integer_rank(mat)


def grade_window(lam, gamma, mode: str, xi=None) -> range:
    """Grades p whose degree fits inside the monomial windows."""
    gamma = tuple(gamma)
    if not any(gamma):
        return range(0, 1)
    bounds = variable_bounds(lam, gamma, mode, xi)
    lo_total = 0
    hi_total = 0
    for i, r in enumerate(gamma, start=1):
        if r == 0:
            continue
        lo, hi = bounds[i]
        if lo > hi:
            return range(0, 0)
        lo_total += r * lo
        hi_total += r * hi
    base = -gamma_height(gamma) + e_gamma(gamma)
    return range(max(0, base - hi_total), max(0, base - lo_total + 1))


def oracle_multiplicity(lam, gamma, mode: str, xi=None, pairs=None) -> QPolynomial:
    """Graded multiplicity of V(lam - gamma) from the dual realization."""
    coeffs = {}
    for p in grade_window(lam, gamma, mode, xi):
        d = dim_V(lam, gamma, p, mode, xi=xi, pairs=pairs)
        if d:
            coeffs[p] = d
    return QPolynomial(coeffs)


def oracle_decomposition(lam=None, mode: str = "full", xi=None, word=None,
                         gammas=None):
    """Full graded decomposition through the dual realization.

    Pair mode takes a word (lam and the interval data are derived from
    it); full mode takes lam and a normalized xi tuple.  Returns a
    GradedDecomposition over the dominant gammas (or the given ones).
    """
    from .decomposition import GradedDecomposition

    pairs = None
    if mode == "pair":
        if word is None:
            raise ValueError("pair mode needs a word")
        lam = weight_of(word)
        pairs = consecutive_pairs(word)
        for (a, b) in pairs:
            v = -(-pairing(lam, (a, b)) // 2)
            assert v == 1, "level one words always give pole depth 1"
    elif mode == "full":
        if lam is None or xi is None:
            raise ValueError("full mode needs lam and xi")
        lam = tuple(lam)
        if not is_normalized(len(lam), xi):
            raise ValueError("xi tuple is not normalized")
    else:
        raise ValueError("unknown mode %r" % (mode,))
    domain = list(gammas) if gammas is not None else enumerate_dominant_gammas(lam)
    entries = {}
    for gamma in domain:
        poly = oracle_multiplicity(lam, tuple(gamma), mode, xi=xi, pairs=pairs)
        if poly:
            entries[tuple(gamma)] = poly
    return GradedDecomposition(len(lam), lam, entries, domain, word=word,
                               xi=dict(xi) if xi else None)

"""Pure Python lattice point enumeration kernel.

Reference implementation of the histogram walk; the compiled module
_enumeration has the same contract and is preferred when importable.
Kept dependency-free and allocation-light so the interpreted fallback
stays usable for the shipped workloads.
"""

from __future__ import annotations


def count_levels(sizes, caps, pair_sets, max_level):
    """Histogram over levels of the admissible lattice points.

    Variables come in groups: group g has sizes[g] variables with level
    weights 1 .. sizes[g] and group sum capped by caps[g].  Each entry
    of pair_sets is a collection of flat variable indices of which at
    least one must be positive.  A point's level is the weighted sum of
    its entries; only levels <= max_level are admissible.  Returns a
    list h with h[L] = number of points of level L.
    """
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    weights = []
    group_of = []
    for g, m in enumerate(sizes):
        for d in range(1, m + 1):
            weights.append(d)
            group_of.append(g)
    nvars = len(weights)

    npairs = len(pair_sets)
    member = [[] for _ in range(nvars)]   # var -> constraints containing it
    deadline = [[] for _ in range(nvars)]  # var -> constraints it closes
    for c, varset in enumerate(pair_sets):
        varset = sorted(set(varset))
        if not varset:
            return [0] * (max_level + 1)
        for v in varset:
            member[v].append(c)
        deadline[varset[-1]].append(c)

    hist = [0] * (max_level + 1)
    sat = [0] * npairs
    caps_left = list(caps)

    def walk(v, level):
        if v == nvars:
            hist[level] += 1
            return
        g = group_of[v]
        w = weights[v]
        top = min(caps_left[g], (max_level - level) // w)
        for val in range(top + 1):
            if val == 1:
                for c in member[v]:
                    sat[c] += 1
            ok = True
            for c in deadline[v]:
                if not sat[c]:
                    ok = False
                    break
            if ok:
                caps_left[g] -= val
                walk(v + 1, level + val * w)
                caps_left[g] += val
        if top >= 1:
            for c in member[v]:
                sat[c] -= 1

    walk(0, 0)
    return hist

"""Shared word grids for the cross validation tests."""

from itertools import combinations

from hldecomp.hl_category import DrinfeldWord


def sign_patterns(k):
    """Alternating step sign sequences for a word with k factors."""
    if k <= 1:
        return [()]
    out = []
    for first in (1, -1):
        pat = [first]
        while len(pat) < k - 1:
            pat.append(-pat[-1])
        out.append(tuple(pat))
    return out


def words_on_nodes(n, nodes, starts=(0,)):
    out = []
    for start in starts:
        for pat in sign_patterns(len(nodes)):
            facs = [(nodes[0], start)]
            for idx in range(1, len(nodes)):
                gap = nodes[idx] - nodes[idx - 1] + 2
                facs.append((nodes[idx], facs[-1][1] + pat[idx - 1] * gap))
            out.append(DrinfeldWord(n, facs))
    return out


def word_grid(n_max, k_max, starts=(0,)):
    """Every valid word with rank <= n_max and <= k_max factors, one
    copy per base exponent in starts."""
    out = []
    for n in range(1, n_max + 1):
        for k in range(1, min(k_max, n) + 1):
            for nodes in combinations(range(1, n + 1), k):
                out.extend(words_on_nodes(n, nodes, starts))
    return out

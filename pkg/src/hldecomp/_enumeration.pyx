# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled lattice point enumeration kernel.

Same contract as _enumeration_py.count_levels; see there for the
semantics.  The walk is a depth-first scan over flat variables with
group capacity, level budget and pair constraint pruning.
"""

from libc.stdlib cimport calloc, free


cdef struct Tables:
    int nvars
    int max_level
    int *weights
    int *group_of
    long long *caps_left
    int *sat
    int *mem_start
    int *mem
    int *dl_start
    int *dl
    long long *hist


cdef void walk(Tables *t, int v, int level) noexcept:
    cdef int g, w, val, k, ok
    cdef long long top
    if v == t.nvars:
        t.hist[level] += 1
        return
    g = t.group_of[v]
    w = t.weights[v]
    top = (t.max_level - level) // w
    if t.caps_left[g] < top:
        top = t.caps_left[g]
    for val in range(<int> top + 1):
        if val == 1:
            for k in range(t.mem_start[v], t.mem_start[v + 1]):
                t.sat[t.mem[k]] += 1
        ok = 1
        for k in range(t.dl_start[v], t.dl_start[v + 1]):
            if t.sat[t.dl[k]] == 0:
                ok = 0
                break
        if ok:
            t.caps_left[g] -= val
            walk(t, v + 1, level + val * w)
            t.caps_left[g] += val
    if top >= 1:
        for k in range(t.mem_start[v], t.mem_start[v + 1]):
            t.sat[t.mem[k]] -= 1


def count_levels(sizes, caps, pair_sets, max_level):
    """Histogram over levels of the admissible lattice points."""
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    cdef int ngroups = len(sizes)
    cdef int nvars = 0
    cdef int g, d, v, c, k
    for g in range(ngroups):
        nvars += <int> sizes[g]

    sets = [sorted(set(s)) for s in pair_sets]
    for s in sets:
        if not s:
            return [0] * (max_level + 1)
        for v in s:
            if not 0 <= v < nvars:
                raise ValueError("pair constraint variable %d out of range" % v)
    cdef int npairs = len(sets)
    cdef int nmem = 0
    for s in sets:
        nmem += len(s)

    cdef Tables t
    t.weights = NULL
    t.group_of = NULL
    t.caps_left = NULL
    t.sat = NULL
    t.mem_start = NULL
    t.mem = NULL
    t.dl_start = NULL
    t.dl = NULL
    t.hist = NULL
    t.nvars = nvars
    t.max_level = max_level
    t.weights = <int *> calloc(nvars if nvars else 1, sizeof(int))
    t.group_of = <int *> calloc(nvars if nvars else 1, sizeof(int))
    t.caps_left = <long long *> calloc(ngroups if ngroups else 1, sizeof(long long))
    t.sat = <int *> calloc(npairs if npairs else 1, sizeof(int))
    t.mem_start = <int *> calloc(nvars + 1, sizeof(int))
    t.mem = <int *> calloc(nmem if nmem else 1, sizeof(int))
    t.dl_start = <int *> calloc(nvars + 1, sizeof(int))
    t.dl = <int *> calloc(npairs if npairs else 1, sizeof(int))
    t.hist = <long long *> calloc(max_level + 1, sizeof(long long))
    if (t.weights == NULL or t.group_of == NULL or t.caps_left == NULL
            or t.sat == NULL or t.mem_start == NULL or t.mem == NULL
            or t.dl_start == NULL or t.dl == NULL or t.hist == NULL):
        _release(&t)
        raise MemoryError()

    try:
        v = 0
        for g in range(ngroups):
            t.caps_left[g] = caps[g]
            for d in range(1, <int> sizes[g] + 1):
                t.weights[v] = d
                t.group_of[v] = g
                v += 1

        # constraint membership and deadlines in CSR layout
        counts = [0] * (nvars + 1)
        for s in sets:
            for v in s:
                counts[v] += 1
        for v in range(nvars):
            t.mem_start[v + 1] = t.mem_start[v] + counts[v]
        fill = [t.mem_start[v] for v in range(nvars)]
        dl_counts = [0] * (nvars + 1)
        for c in range(npairs):
            sc = sets[c]
            for v in sc:
                t.mem[fill[v]] = c
                fill[v] += 1
            dl_counts[sc[len(sc) - 1]] += 1
        for v in range(nvars):
            t.dl_start[v + 1] = t.dl_start[v] + dl_counts[v]
        fill = [t.dl_start[v] for v in range(nvars)]
        for c in range(npairs):
            sc = sets[c]
            v = sc[len(sc) - 1]
            t.dl[fill[v]] = c
            fill[v] += 1

        walk(&t, 0, 0)
        return [t.hist[k] for k in range(max_level + 1)]
    finally:
        _release(&t)


cdef void _release(Tables *t) noexcept:
    free(t.weights)
    free(t.group_of)
    free(t.caps_left)
    free(t.sat)
    free(t.mem_start)
    free(t.mem)
    free(t.dl_start)
    free(t.dl)
    free(t.hist)

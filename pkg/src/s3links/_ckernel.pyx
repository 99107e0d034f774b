# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coloring search; same contract as ``_kernel_py``."""

from libc.stdlib cimport malloc, free

from .group import CONJ_INV_TABLE, CONJ_TABLE

cdef unsigned char FWD[2][6][6]   # [sign>0][x][y] -> z
cdef unsigned char BWD[2][6][6]   # [sign>0][x][z] -> y

cdef int _i, _j
for _i in range(6):
    for _j in range(6):
        FWD[1][_i][_j] = CONJ_TABLE[_i][_j]
        FWD[0][_i][_j] = CONJ_INV_TABLE[_i][_j]
        BWD[1][_i][_j] = CONJ_INV_TABLE[_i][_j]
        BWD[0][_i][_j] = CONJ_TABLE[_i][_j]


cdef struct Search:
    int n
    int m
    int *over
    int *uin
    int *uout
    int *pos
    int *inc_ptr
    int *inc
    unsigned char *col
    int *trail
    int ntrail
    int *queue


cdef bint assign(Search *s, int a, unsigned char v) nogil:
    cdef int qn = 0, b, k, i, c
    cdef unsigned char x, y, z, want
    s.col[a] = v
    s.trail[s.ntrail] = a
    s.ntrail += 1
    s.queue[qn] = a
    qn += 1
    while qn:
        qn -= 1
        b = s.queue[qn]
        for k in range(s.inc_ptr[b], s.inc_ptr[b + 1]):
            i = s.inc[k]
            x = s.col[s.over[i]]
            if not x:
                continue
            y = s.col[s.uin[i]]
            z = s.col[s.uout[i]]
            if y:
                want = FWD[s.pos[i]][x][y]
                if not z:
                    c = s.uout[i]
                    s.col[c] = want
                    s.trail[s.ntrail] = c
                    s.ntrail += 1
                    s.queue[qn] = c
                    qn += 1
                elif z != want:
                    return False
            elif z:
                c = s.uin[i]
                s.col[c] = BWD[s.pos[i]][x][z]
                s.trail[s.ntrail] = c
                s.ntrail += 1
                s.queue[qn] = c
                qn += 1
    return True


cdef inline void undo(Search *s, int mark) nogil:
    while s.ntrail > mark:
        s.ntrail -= 1
        s.col[s.trail[s.ntrail]] = 0


cdef int run(Search *s, int start, list out) except -1:
    cdef int a = start, k
    cdef unsigned char v
    cdef int mark
    while a < s.n and s.col[a]:
        a += 1
    if a == s.n:
        out.append(tuple([s.col[k] for k in range(s.n)]))
        return 0
    for v in range(1, 6):
        mark = s.ntrail
        if assign(s, a, v):
            run(s, a + 1, out)
        undo(s, mark)
    return 0


cdef int setup(Search *s, int num_arcs, over, under_in, under_out, sign) except -1:
    cdef int m = len(over), i, a, k
    s.n = num_arcs
    s.m = m
    s.over = <int *> malloc(max(m, 1) * sizeof(int))
    s.uin = <int *> malloc(max(m, 1) * sizeof(int))
    s.uout = <int *> malloc(max(m, 1) * sizeof(int))
    s.pos = <int *> malloc(max(m, 1) * sizeof(int))
    s.inc_ptr = <int *> malloc((num_arcs + 1) * sizeof(int))
    s.inc = <int *> malloc(max(3 * m, 1) * sizeof(int))
    s.col = <unsigned char *> malloc(max(num_arcs, 1))
    # an arc is set at most once, so trail and queue never exceed num_arcs
    s.trail = <int *> malloc((num_arcs + 1) * 2 * sizeof(int))
    s.queue = <int *> malloc((num_arcs + 1) * 2 * sizeof(int))
    s.ntrail = 0
    if (not s.over or not s.uin or not s.uout or not s.pos or not s.inc_ptr
            or not s.inc or not s.col or not s.trail or not s.queue):
        teardown(s)
        raise MemoryError()
    for a in range(num_arcs):
        s.col[a] = 0
        s.inc_ptr[a] = 0
    s.inc_ptr[num_arcs] = 0
    for i in range(m):
        s.over[i] = over[i]
        s.uin[i] = under_in[i]
        s.uout[i] = under_out[i]
        s.pos[i] = 1 if sign[i] > 0 else 0
    # CSR incidence, each crossing listed once per distinct arc
    incidence = [[] for _ in range(num_arcs)]
    for i in range(m):
        for a in {s.over[i], s.uin[i], s.uout[i]}:
            incidence[a].append(i)
    k = 0
    for a in range(num_arcs):
        s.inc_ptr[a] = k
        for i in incidence[a]:
            s.inc[k] = i
            k += 1
    s.inc_ptr[num_arcs] = k
    return 0


cdef void teardown(Search *s):
    free(s.over); free(s.uin); free(s.uout); free(s.pos)
    free(s.inc_ptr); free(s.inc); free(s.col); free(s.trail); free(s.queue)


def enumerate_colorings(int num_arcs, over, under_in, under_out, sign, fixed=None):
    """All valid colorings extending ``fixed`` in lexicographic order."""
    cdef Search s
    cdef list out = []
    cdef int a
    cdef unsigned char v
    setup(&s, num_arcs, over, under_in, under_out, sign)
    try:
        if fixed is not None:
            for a in range(num_arcs):
                v = fixed[a]
                if not v:
                    continue
                if s.col[a]:
                    if s.col[a] != v:
                        return out
                elif not assign(&s, a, v):
                    return out
        run(&s, 0, out)
    finally:
        teardown(&s)
    return out


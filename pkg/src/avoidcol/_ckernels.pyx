# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled pair detectors for graphs with at most 64 vertices.

Word-for-word twin of _pykernels operating on uint64 masks; _kernels selects
this module when the extension built and the host graph fits in one word.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


def pair_has_k1_k1(u64[::1] adj, u64 amask, u64 bmask):
    cdef int ca = __builtin_popcountll(amask)
    cdef int cb = __builtin_popcountll(bmask)
    if ca >= 2 or cb >= 2:
        return True
    if ca == 1 and cb == 1:
        return not (adj[__builtin_ctzll(amask)] & bmask)
    return False


def pair_has_k2(u64[::1] adj, u64 amask, u64 bmask):
    cdef u64 rest = amask
    while rest:
        if adj[__builtin_ctzll(rest)] & bmask:
            return True
        rest &= rest - 1
    return False


def pair_has_k2_k1(u64[::1] adj, u64 amask, u64 bmask):
    cdef u64 union_ = amask | bmask
    cdef u64 rest = amask, na, rest_a, nb
    cdef int a, b
    while rest:
        a = __builtin_ctzll(rest)
        rest &= rest - 1
        na = adj[a] & bmask
        if not na:
            continue
        rest_a = union_ & ~adj[a] & ~((<u64>1) << a)
        nb = na
        while nb:
            b = __builtin_ctzll(nb)
            nb &= nb - 1
            if rest_a & ~adj[b] & ~((<u64>1) << b):
                return True
    return False


def pair_has_p3(u64[::1] adj, u64 amask, u64 bmask):
    cdef u64 rest = amask
    while rest:
        if __builtin_popcountll(adj[__builtin_ctzll(rest)] & bmask) >= 2:
            return True
        rest &= rest - 1
    rest = bmask
    while rest:
        if __builtin_popcountll(adj[__builtin_ctzll(rest)] & amask) >= 2:
            return True
        rest &= rest - 1
    return False


def pair_has_p4(u64[::1] adj, u64 amask, u64 bmask):
    cdef u64 hoods[64]
    cdef int count = 0, i, j
    cdef u64 rest = amask, na, nb
    while rest:
        hoods[count] = adj[__builtin_ctzll(rest)] & bmask
        count += 1
        rest &= rest - 1
    for i in range(count):
        na = hoods[i]
        if not na:
            continue
        for j in range(count):
            nb = hoods[j]
            if i != j and (na & nb) and (nb & ~na):
                return True
    return False


def pair_has_two_k2(u64[::1] adj, u64 amask, u64 bmask):
    cdef u64 seen[64]
    cdef int count = 0, i
    cdef u64 rest = amask, na
    while rest:
        na = adj[__builtin_ctzll(rest)] & bmask
        rest &= rest - 1
        for i in range(count):
            if (na & ~seen[i]) and (seen[i] & ~na):
                return True
        seen[count] = na
        count += 1
    return False

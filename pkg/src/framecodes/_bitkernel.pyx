# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Same contract as ``_bitkernel_py``: Gray-code walks over a coset of the span
of up to 30 generator masks, each mask at most 128 bits wide (split into two
64-bit lanes).  The hot loop is branch-light C with hardware popcount.
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"

DEF MAXGENS = 30
DEF MAXBITS = 129

cdef uint64_t _LOW64 = 0xFFFFFFFFFFFFFFFFULL


def weight_counts(gen_masks, offset, length):
    """Histogram of Hamming weights over ``offset + span(gen_masks)``."""
    cdef uint64_t glo[MAXGENS]
    cdef uint64_t ghi[MAXGENS]
    cdef int64_t counts[MAXBITS]
    cdef int k = len(gen_masks)
    cdef int j
    if k > MAXGENS:
        raise ValueError("compiled kernel supports at most %d generators" % MAXGENS)
    for j in range(k):
        m = gen_masks[j]
        glo[j] = <uint64_t> (m & 0xFFFFFFFFFFFFFFFF)
        ghi[j] = <uint64_t> (m >> 64)
    cdef uint64_t wlo = <uint64_t> (offset & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t whi = <uint64_t> (offset >> 64)

    for j in range(MAXBITS):
        counts[j] = 0

    cdef uint64_t total = (<uint64_t> 1) << k
    cdef uint64_t i
    with nogil:
        counts[__builtin_popcountll(wlo) + __builtin_popcountll(whi)] += 1
        for i in range(1, total):
            j = __builtin_ctzll(i)
            wlo ^= glo[j]
            whi ^= ghi[j]
            counts[__builtin_popcountll(wlo) + __builtin_popcountll(whi)] += 1

    return [counts[j] for j in range(length + 1)]


def words_up_to_weight(gen_masks, offset, max_weight):
    """Collect the words of ``offset + span(gen_masks)`` with weight <= max_weight."""
    cdef uint64_t glo[MAXGENS]
    cdef uint64_t ghi[MAXGENS]
    cdef int k = len(gen_masks)
    cdef int j
    if k > MAXGENS:
        raise ValueError("compiled kernel supports at most %d generators" % MAXGENS)
    for j in range(k):
        m = gen_masks[j]
        glo[j] = <uint64_t> (m & 0xFFFFFFFFFFFFFFFF)
        ghi[j] = <uint64_t> (m >> 64)
    cdef uint64_t wlo = <uint64_t> (offset & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t whi = <uint64_t> (offset >> 64)
    cdef int wmax = max_weight

    found = []
    if __builtin_popcountll(wlo) + __builtin_popcountll(whi) <= wmax:
        found.append((<object> wlo) | ((<object> whi) << 64))
    cdef uint64_t total = (<uint64_t> 1) << k
    cdef uint64_t i
    for i in range(1, total):
        j = __builtin_ctzll(i)
        wlo ^= glo[j]
        whi ^= ghi[j]
        if __builtin_popcountll(wlo) + __builtin_popcountll(whi) <= wmax:
            found.append((<object> wlo) | ((<object> whi) << 64))
    return found

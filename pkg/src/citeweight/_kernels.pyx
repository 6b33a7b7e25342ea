# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; must agree exactly with ``_kernels_py``."""

from libc.stdlib cimport calloc, free, malloc, qsort


cdef long long* _floors(numerators, denominators, Py_ssize_t n) except NULL:
    cdef long long* out = <long long*> malloc((n if n > 0 else 1) * sizeof(long long))
    cdef long long num, den
    cdef Py_ssize_t i
    if out == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            num = numerators[i]
            den = denominators[i]
            if den < 1:
                raise ValueError(f"denominator must be >= 1, got {den}")
            if num < 0:
                raise ValueError(f"value must be non-negative, got {num}/{den}")
            out[i] = num // den
    except BaseException:
        free(out)
        raise
    return out


def h_from_pairs(numerators, denominators):
    """Largest k with at least k values >= k."""
    cdef Py_ssize_t n = len(numerators)
    cdef Py_ssize_t k
    cdef long long at_least = 0
    cdef long long f
    if len(denominators) != n:
        raise ValueError("numerators and denominators differ in length")
    cdef long long* floors = _floors(numerators, denominators, n)
    cdef long long* counts = <long long*> calloc(n + 1, sizeof(long long))
    if counts == NULL:
        free(floors)
        raise MemoryError()
    try:
        for k in range(n):
            f = floors[k]
            counts[f if f < n else n] += 1
        for k in range(n, 0, -1):
            at_least += counts[k]
            if at_least >= k:
                return k
        return 0
    finally:
        free(floors)
        free(counts)


def count_at_least(numerators, denominators, long long threshold):
    cdef Py_ssize_t n = len(numerators)
    cdef Py_ssize_t i
    cdef long long total = 0
    if len(denominators) != n:
        raise ValueError("numerators and denominators differ in length")
    cdef long long* floors = _floors(numerators, denominators, n)
    for i in range(n):
        if floors[i] >= threshold:
            total += 1
    free(floors)
    return total


cdef struct Dated:
    long long year
    long long value


cdef int _by_year(const void* a, const void* b) noexcept nogil:
    cdef long long ya = (<const Dated*> a).year
    cdef long long yb = (<const Dated*> b).year
    return (ya > yb) - (ya < yb)


def prefix_h(years, numerators, denominators, long long first_year, long long last_year):
    """h over the papers with ``year <= y``, for every y in [first_year, last_year]."""
    cdef Py_ssize_t n = len(numerators)
    if len(denominators) != n:
        raise ValueError("numerators and denominators differ in length")
    if len(years) != n:
        raise ValueError("years and values differ in length")
    cdef long long* floors = _floors(numerators, denominators, n)
    cdef long long* counts = <long long*> calloc(n + 2, sizeof(long long))
    cdef Dated* papers = <Dated*> malloc((n if n > 0 else 1) * sizeof(Dated))
    cdef Py_ssize_t i = 0, j
    cdef long long y, v, h = 0, above = 0
    out = []
    if counts == NULL or papers == NULL:
        free(floors); free(counts); free(papers)
        raise MemoryError()
    try:
        for j in range(n):
            papers[j].year = years[j]
            papers[j].value = floors[j] if floors[j] <= n else n + 1
        qsort(papers, n, sizeof(Dated), _by_year)
        for y in range(first_year, last_year + 1):
            while i < n and papers[i].year <= y:
                v = papers[i].value
                counts[v] += 1
                if v >= h + 1:
                    above += 1
                    while above >= h + 1:
                        h += 1
                        above -= counts[h]
                i += 1
            out.append(h)
        return out
    finally:
        free(floors); free(counts); free(papers)

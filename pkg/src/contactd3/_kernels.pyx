# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels on 64-bit words.

Same algorithms as ``contactd3._kernels_py``. Every arithmetic step is
overflow-checked; on overflow (or on input that does not fit in 64 bits)
``OverflowError`` is raised and the caller retries with Python integers.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int cd3_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int cd3_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int cd3_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int cd3_mul(long long a, long long b, long long *r) nogil
    int cd3_sub(long long a, long long b, long long *r) nogil
    int cd3_add(long long a, long long b, long long *r) nogil


cdef inline long long _abs(long long x) nogil:
    return -x if x < 0 else x


cdef inline long long _gcd(long long a, long long b) nogil:
    a = _abs(a)
    b = _abs(b)
    while b:
        a, b = b, a % b
    return a


cdef long long* _load(rows, Py_ssize_t n) except NULL:
    cdef long long* a = <long long*> malloc((n * n if n else 1) * sizeof(long long))
    cdef Py_ssize_t i, j
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row = rows[i]
            if len(row) != n:
                raise ValueError("matrix is not square")
            for j in range(n):
                a[i * n + j] = row[j]
    except BaseException:
        free(a)
        raise
    return a


cdef int _inertia(long long* a, Py_ssize_t n, char* active, Py_ssize_t* col,
                  Py_ssize_t* out) nogil:
    """Returns 1 on overflow, 0 on success; counts written to out[0:2]."""
    cdef Py_ssize_t remaining = n, pos = 0, neg = 0
    cdef Py_ssize_t i, j, k, t, piv, ncol, pk, pj
    cdef long long best, d, p, ap, sp, ai, g, tmp, tmp2
    for i in range(n):
        active[i] = 1
    while remaining > 0:
        piv = -1
        best = 0
        for k in range(n):
            if not active[k]:
                continue
            d = a[k * n + k]
            if d != 0 and (piv < 0 or _abs(d) < best):
                piv = k
                best = _abs(d)
                if best == 1:
                    break
        if piv < 0:
            pk = -1
            pj = -1
            for k in range(n):
                if not active[k]:
                    continue
                for j in range(n):
                    if active[j] and a[k * n + j] != 0:
                        pk = k
                        pj = j
                        break
                if pk >= 0:
                    break
            if pk < 0:
                break
            for t in range(n):
                if active[t]:
                    if cd3_add(a[pk * n + t], a[pj * n + t], &a[pk * n + t]):
                        return 1
            for t in range(n):
                if active[t]:
                    if cd3_add(a[t * n + pk], a[t * n + pj], &a[t * n + pk]):
                        return 1
            piv = pk
        p = a[piv * n + piv]
        active[piv] = 0
        remaining -= 1
        if p > 0:
            pos += 1
        else:
            neg += 1
        ncol = 0
        for i in range(n):
            if active[i] and a[i * n + piv] != 0:
                col[ncol] = i
                ncol += 1
        if ncol == 0:
            continue
        ap = _abs(p)
        sp = 1 if p > 0 else -1
        if ap != 1:
            for i in range(n):
                if not active[i]:
                    continue
                for j in range(n):
                    if active[j]:
                        if cd3_mul(a[i * n + j], ap, &a[i * n + j]):
                            return 1
        for t in range(ncol):
            i = col[t]
            ai = a[i * n + piv] * sp
            for k in range(ncol):
                j = col[k]
                if cd3_mul(ai, a[piv * n + j], &tmp):
                    return 1
                if cd3_sub(a[i * n + j], tmp, &tmp2):
                    return 1
                a[i * n + j] = tmp2
        if ap != 1:
            g = 0
            for i in range(n):
                if not active[i]:
                    continue
                for j in range(n):
                    if active[j] and a[i * n + j] != 0:
                        g = _gcd(g, a[i * n + j])
            if g > 1:
                for i in range(n):
                    if not active[i]:
                        continue
                    for j in range(n):
                        if active[j]:
                            a[i * n + j] = a[i * n + j] // g
    out[0] = pos
    out[1] = neg
    return 0


def int_inertia(rows):
    """Return ``(n_plus, n_minus, n_zero)`` of a symmetric integer matrix."""
    cdef Py_ssize_t n = len(rows)
    cdef long long* a = _load(rows, n)
    cdef char* active = <char*> malloc(n + 1)
    cdef Py_ssize_t* col = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t out[2]
    cdef int status
    try:
        if active == NULL or col == NULL:
            raise MemoryError()
        with nogil:
            status = _inertia(a, n, active, col, out)
        if status:
            raise OverflowError("64-bit overflow in inertia kernel")
        return out[0], out[1], n - out[0] - out[1]
    finally:
        free(a)
        free(active)
        free(col)


def int_det(rows):
    """Determinant of a square integer matrix by Bareiss elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef long long* a = _load(rows, n)
    cdef Py_ssize_t i, j, k
    cdef long long sign = 1, prev = 1, akk, aik, x, y, tmp
    cdef bint overflow = False, zero = False
    try:
        with nogil:
            for k in range(n - 1):
                if a[k * n + k] == 0:
                    for i in range(k + 1, n):
                        if a[i * n + k] != 0:
                            break
                    else:
                        zero = True
                        break
                    for j in range(n):
                        tmp = a[k * n + j]
                        a[k * n + j] = a[i * n + j]
                        a[i * n + j] = tmp
                    sign = -sign
                akk = a[k * n + k]
                for i in range(k + 1, n):
                    aik = a[i * n + k]
                    for j in range(k + 1, n):
                        if cd3_mul(a[i * n + j], akk, &x) or cd3_mul(aik, a[k * n + j], &y) \
                                or cd3_sub(x, y, &tmp):
                            overflow = True
                            break
                        a[i * n + j] = tmp // prev
                    if overflow:
                        break
                if overflow:
                    break
                prev = akk
        if overflow:
            raise OverflowError("64-bit overflow in determinant kernel")
        if zero:
            return 0
        return sign * a[(n - 1) * n + (n - 1)]
    finally:
        free(a)

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense Laurent kernels; same contract as _kernel_py.

Coefficients stay Python ints (minors overflow machine words), the win
is C-level loop and index handling.
"""


cdef _trim(long low, list coeffs):
    cdef Py_ssize_t i = 0, j = len(coeffs)
    while i < j and coeffs[i] == 0:
        i += 1
    while j > i and coeffs[j - 1] == 0:
        j -= 1
    if i == j:
        return 0, []
    return low + i, coeffs[i:j]


def poly_mul(long al, list ac, long bl, list bc):
    cdef Py_ssize_t na = len(ac), nb = len(bc), i, j
    if na == 0 or nb == 0:
        return 0, []
    cdef list out = [0] * (na + nb - 1)
    cdef object ci
    for i in range(na):
        ci = ac[i]
        if ci == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ci * bc[j]
    return al + bl, out


def poly_sub(long al, list ac, long bl, list bc):
    cdef Py_ssize_t i
    if not ac:
        return _trim(bl, [-c for c in bc])
    if not bc:
        return _trim(al, list(ac))
    cdef long low = al if al < bl else bl
    cdef long ha = al + len(ac), hb = bl + len(bc)
    cdef long high = ha if ha > hb else hb
    cdef list out = [0] * (high - low)
    for i in range(len(ac)):
        out[al - low + i] = ac[i]
    for i in range(len(bc)):
        out[bl - low + i] = out[bl - low + i] - bc[i]
    return _trim(low, out)


def poly_divexact(long al, list ac, long bl, list bc):
    cdef Py_ssize_t na = len(ac), nb = len(bc), k, j
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na == 0:
        return 0, []
    if na < nb:
        raise ValueError("inexact polynomial division")
    cdef list rem = list(ac)
    cdef object top = bc[nb - 1], r, q, s
    cdef list quot = [0] * (na - nb + 1)
    for k in range(na - nb, -1, -1):
        r = rem[k + nb - 1]
        if r == 0:
            continue
        q, s = divmod(r, top)
        if s != 0:
            raise ValueError("inexact polynomial division")
        quot[k] = q
        for j in range(nb):
            rem[k + j] = rem[k + j] - q * bc[j]
    for k in range(na):
        if rem[k] != 0:
            raise ValueError("inexact polynomial division")
    return _trim(al - bl, quot)


def bareiss_det(Py_ssize_t n, list entries):
    cdef Py_ssize_t i, j, k, pivot_row
    if n == 0:
        return 0, [1]
    cdef list lows = [0] * (n * n)
    cdef list polys = [None] * (n * n)
    for i in range(n * n):
        lows[i] = entries[i][0]
        polys[i] = entries[i][1]
    cdef int sign = 1
    cdef long plow = 0
    cdef list pco = [1]
    cdef long t1l, t2l, sl, klow
    cdef list t1c, t2c, sc, kco
    for k in range(n - 1):
        if not polys[k * n + k]:
            pivot_row = -1
            for i in range(k + 1, n):
                if polys[i * n + k]:
                    pivot_row = i
                    break
            if pivot_row < 0:
                return 0, []
            for j in range(n):
                lows[k * n + j], lows[pivot_row * n + j] = (
                    lows[pivot_row * n + j], lows[k * n + j])
                polys[k * n + j], polys[pivot_row * n + j] = (
                    polys[pivot_row * n + j], polys[k * n + j])
            sign = -sign
        klow = lows[k * n + k]
        kco = polys[k * n + k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t1l, t1c = poly_mul(klow, kco, lows[i * n + j],
                                    polys[i * n + j])
                t2l, t2c = poly_mul(lows[i * n + k], polys[i * n + k],
                                    lows[k * n + j], polys[k * n + j])
                sl, sc = poly_sub(t1l, t1c, t2l, t2c)
                lows[i * n + j], polys[i * n + j] = poly_divexact(
                    sl, sc, plow, pco)
            lows[i * n + k] = 0
            polys[i * n + k] = []
        plow = klow
        pco = kco
    cdef long rlow = lows[(n - 1) * n + (n - 1)]
    cdef list rco = polys[(n - 1) * n + (n - 1)]
    if sign < 0:
        return rlow, [-c for c in rco]
    return rlow, list(rco)

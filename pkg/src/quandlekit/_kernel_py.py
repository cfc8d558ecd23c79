"""Pure-Python fallback for the dense Laurent kernels.

A polynomial is a pair ``(low, coeffs)``: ``coeffs[i]`` is the integer
coefficient of ``A**(low + i)``.  Canonical form: zero is ``(0, [])``,
otherwise the first and last entries of ``coeffs`` are nonzero.
Mirrors ``_speedups.pyx``; keep the two in sync.
"""


def _trim(low, coeffs):
    i = 0
    j = len(coeffs)
    while i < j and coeffs[i] == 0:
        i += 1
    while j > i and coeffs[j - 1] == 0:
        j -= 1
    if i == j:
        return 0, []
    return low + i, coeffs[i:j]


def poly_mul(al, ac, bl, bc):
    na = len(ac)
    nb = len(bc)
    if na == 0 or nb == 0:
        return 0, []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ci = ac[i]
        if ci == 0:
            continue
        for j in range(nb):
            out[i + j] += ci * bc[j]
    # no trailing zeros can appear over ZZ (domain), but interior is fine
    return al + bl, out


def poly_sub(al, ac, bl, bc):
    if not ac:
        return _trim(bl, [-c for c in bc])
    if not bc:
        return _trim(al, list(ac))
    low = min(al, bl)
    high = max(al + len(ac), bl + len(bc))
    out = [0] * (high - low)
    for i, c in enumerate(ac):
        out[al - low + i] = c
    for i, c in enumerate(bc):
        out[bl - low + i] -= c
    return _trim(low, out)


def poly_divexact(al, ac, bl, bc):
    """Exact division; raises ValueError when the remainder is nonzero."""
    if not bc:
        raise ZeroDivisionError("polynomial division by zero")
    if not ac:
        return 0, []
    na = len(ac)
    nb = len(bc)
    if na < nb:
        raise ValueError("inexact polynomial division")
    rem = list(ac)
    top = bc[nb - 1]
    nq = na - nb + 1
    quot = [0] * nq
    for k in range(nq - 1, -1, -1):
        r = rem[k + nb - 1]
        if r == 0:
            continue
        q, s = divmod(r, top)
        if s != 0:
            raise ValueError("inexact polynomial division")
        quot[k] = q
        for j in range(nb):
            rem[k + j] -= q * bc[j]
    if any(rem):
        raise ValueError("inexact polynomial division")
    return _trim(al - bl, quot)


def bareiss_det(n, entries):
    """Exact determinant of an n x n Laurent matrix (row-major pairs)."""
    if n == 0:
        return 0, [1]
    m = [list(entries[i * n + j]) for i in range(n) for j in range(n)]
    # m[i*n+j] = [low, coeffs]
    sign = 1
    prev = (0, [1])
    for k in range(n - 1):
        if not m[k * n + k][1]:
            pivot_row = -1
            for i in range(k + 1, n):
                if m[i * n + k][1]:
                    pivot_row = i
                    break
            if pivot_row < 0:
                return 0, []
            for j in range(n):
                m[k * n + j], m[pivot_row * n + j] = (
                    m[pivot_row * n + j],
                    m[k * n + j],
                )
            sign = -sign
        pkk = m[k * n + k]
        for i in range(k + 1, n):
            mik = m[i * n + k]
            for j in range(k + 1, n):
                t1 = poly_mul(pkk[0], pkk[1], *m[i * n + j])
                t2 = poly_mul(mik[0], mik[1], *m[k * n + j])
                s = poly_sub(*t1, *t2)
                m[i * n + j] = list(poly_divexact(*s, prev[0], prev[1]))
            m[i * n + k] = [0, []]
        prev = (pkk[0], pkk[1])
    low, coeffs = m[(n - 1) * n + (n - 1)]
    if sign < 0:
        coeffs = [-c for c in coeffs]
    return low, list(coeffs)

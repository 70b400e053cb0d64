# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled brute-force scans; same contract as ``_kernels_py``."""

IA, IB, IIA, IIB, QUARTIC = range(5)


cdef inline bint _same(const unsigned char[::1] g, Py_ssize_t ncols,
                       Py_ssize_t i1, Py_ssize_t j1,
                       Py_ssize_t i2, Py_ssize_t j2,
                       Py_ssize_t r, Py_ssize_t c) noexcept nogil:
    cdef Py_ssize_t t, u, a, b
    for t in range(r):
        a = (i1 + t) * ncols + j1
        b = (i2 + t) * ncols + j2
        for u in range(c):
            if g[a + u] != g[b + u]:
                return False
    return True


def square_matches(word):
    cdef bytes raw = word.encode("ascii") if isinstance(word, str) else bytes(word)
    cdef const unsigned char[::1] w = raw
    cdef Py_ssize_t n = len(raw), i, half, u
    cdef bint ok
    out = []
    for i in range(n):
        for half in range(1, (n - i) // 2 + 1):
            ok = True
            for u in range(half):
                if w[i + u] != w[i + half + u]:
                    ok = False
                    break
            if ok:
                out.append((i, half))
    return out


def block_matches(lines, int kind):
    cdef Py_ssize_t nrows = len(lines)
    cdef Py_ssize_t ncols = len(lines[0]) if nrows else 0
    cdef bytes raw = "".join(lines).encode("ascii")
    cdef const unsigned char[::1] g = raw
    cdef Py_ssize_t r, c, i, j, span_r, span_c
    cdef bint wide = kind != IB
    cdef bint tall = kind != IA
    cdef bint hit
    out = []
    for r in range(1, nrows + 1):
        span_r = 2 * r if tall else r
        if span_r > nrows:
            break
        for c in range(1, ncols + 1):
            span_c = 2 * c if wide else c
            if span_c > ncols:
                break
            for i in range(nrows - span_r + 1):
                for j in range(ncols - span_c + 1):
                    if kind == IA:
                        hit = _same(g, ncols, i, j, i, j + c, r, c)
                    elif kind == IB:
                        hit = _same(g, ncols, i, j, i + r, j, r, c)
                    elif kind == IIA:
                        hit = _same(g, ncols, i, j, i + r, j + c, r, c)
                    elif kind == IIB:
                        hit = _same(g, ncols, i, j + c, i + r, j, r, c)
                    else:
                        hit = (_same(g, ncols, i, j, i, j + c, r, c)
                               and _same(g, ncols, i, j, i + r, j, r, c)
                               and _same(g, ncols, i, j, i + r, j + c, r, c))
                    if hit:
                        out.append((r, c, i, j))
    return out

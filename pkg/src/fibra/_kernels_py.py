"""Pure-Python brute-force scans; the reference twin of ``_kernels.pyx``.

Both modules expose the same functions with the same result ordering.
Grids are passed as a sequence of equal-length row strings.
"""

IA, IB, IIA, IIB, QUARTIC = range(5)


def square_matches(word):
    """All (start, half) with word[start:start+half] == word[start+half:start+2*half].

    Positions are 0-based; results are sorted by (start, half).
    """
    n = len(word)
    out = []
    for i in range(n):
        for half in range(1, (n - i) // 2 + 1):
            if word[i:i + half] == word[i + half:i + 2 * half]:
                out.append((i, half))
    return out


def _same(lines, i1, j1, i2, j2, r, c):
    for t in range(r):
        if lines[i1 + t][j1:j1 + c] != lines[i2 + t][j2:j2 + c]:
            return False
    return True


def block_matches(lines, kind):
    """Scan every root size (r, c) and window top-left (i, j), 0-based.

    ``kind`` selects which copies of the r x c block must agree:
    IA: (i, j) and (i, j+c); IB: (i, j) and (i+r, j);
    IIA: (i, j) and (i+r, j+c); IIB: (i, j+c) and (i+r, j);
    QUARTIC: all four blocks of the 2r x 2c window.
    Returns (r, c, i, j) tuples sorted in that order.
    """
    nrows = len(lines)
    ncols = len(lines[0]) if nrows else 0
    out = []
    wide = kind != IB
    tall = kind != IA
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
                        hit = _same(lines, i, j, i, j + c, r, c)
                    elif kind == IB:
                        hit = _same(lines, i, j, i + r, j, r, c)
                    elif kind == IIA:
                        hit = _same(lines, i, j, i + r, j + c, r, c)
                    elif kind == IIB:
                        hit = _same(lines, i, j + c, i + r, j, r, c)
                    else:
                        hit = (
                            _same(lines, i, j, i, j + c, r, c)
                            and _same(lines, i, j, i + r, j, r, c)
                            and _same(lines, i, j, i + r, j + c, r, c)
                        )
                    if hit:
                        out.append((r, c, i, j))
    return out

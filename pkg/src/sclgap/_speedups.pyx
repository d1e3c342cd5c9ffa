# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels; mirrors sclgap._pure exactly."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


cdef inline char inv_char(char c) nogil:
    if c == b'a':
        return b'A'
    if c == b'A':
        return b'a'
    if c == b'b':
        return b'B'
    return b'b'


cdef inline int pair_score(char x, char y) nogil:
    if x == b'a' and y == b'b':
        return 1
    if x == b'A' and y == b'B':
        return 1
    if x == b'b' and y == b'a':
        return -1
    if x == b'B' and y == b'A':
        return -1
    return 0


def reduce_word(str s):
    cdef bytes raw = s.encode("ascii")
    cdef const char* p = raw
    cdef Py_ssize_t n = len(raw)
    cdef char* out = <char*> malloc(n if n else 1)
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i
    try:
        for i in range(n):
            if top and out[top - 1] == inv_char(p[i]):
                top -= 1
            else:
                out[top] = p[i]
                top += 1
        return out[:top].decode("ascii")
    finally:
        free(out)


def eta0(str s):
    cdef bytes raw = s.encode("ascii")
    cdef const char* p = raw
    cdef Py_ssize_t n = len(raw)
    cdef int total = 0
    cdef Py_ssize_t i
    for i in range(n - 1):
        total += pair_score(p[i], p[i + 1])
    return total


cdef _collapse(str s, bint a_blocks):
    cdef bytes raw = s.encode("ascii")
    cdef const char* p = raw
    cdef Py_ssize_t n = len(raw)
    cdef char lo = b'a' if a_blocks else b'b'
    cdef char hi = b'A' if a_blocks else b'B'
    cdef char* out = <char*> malloc(n if n else 1)
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i = 0
    cdef char run_sign = 0
    cdef char prev_sep = 0
    cdef char ch
    try:
        if n and p[0] != lo and p[0] != hi:
            out[top] = p[0]
            top += 1
            i = 1
        while i < n:
            ch = p[i]
            if ch == lo or ch == hi:
                if run_sign == 0:
                    run_sign = ch
                elif ch != run_sign:
                    out[top] = run_sign
                    out[top + 1] = prev_sep
                    top += 2
                    run_sign = ch
            else:
                prev_sep = ch
            i += 1
        if run_sign != 0:
            out[top] = run_sign
            top += 1
            if n and p[n - 1] != lo and p[n - 1] != hi:
                out[top] = p[n - 1]
                top += 1
        return out[:top].decode("ascii")
    finally:
        free(out)


def alpha_word(str s):
    return _collapse(s, True)


def beta_word(str s):
    return _collapse(s, False)


def eta0_exhaustive_defect(int maxlen):
    """Max |eta0(g)+eta0(h)-eta0(gh)| over all reduced words of length
    at most maxlen, computed fully in C."""
    cdef Py_ssize_t count = 1
    cdef Py_ssize_t level = 1
    cdef int L
    for L in range(maxlen):
        level *= 3
        if L == 0:
            level = 4
        count += level
    # Enumerate words into a flat buffer.
    cdef char* buf = <char*> malloc(count * maxlen if count * maxlen else 1)
    cdef Py_ssize_t* lens = <Py_ssize_t*> malloc(count * sizeof(Py_ssize_t))
    cdef int* totals = <int*> malloc(count * sizeof(int))
    # Prefix/suffix eta0 tables, (maxlen+1) slots per word.
    cdef Py_ssize_t stride = maxlen + 1
    cdef int* pre = <int*> malloc(count * stride * sizeof(int))
    cdef int* suf = <int*> malloc(count * stride * sizeof(int))
    cdef Py_ssize_t filled = 0
    cdef Py_ssize_t start = 0
    cdef Py_ssize_t stop
    cdef Py_ssize_t w, i, k, m, left
    cdef char letters[4]
    letters[0] = b'a'
    letters[1] = b'A'
    letters[2] = b'b'
    letters[3] = b'B'
    cdef char last, ch
    cdef int best = 0, d, val, eg
    cdef char* gw
    cdef char* hw
    cdef Py_ssize_t lg, lh, gi, hi
    try:
        lens[0] = 0
        filled = 1
        for L in range(maxlen):
            stop = filled
            for w in range(start, stop):
                lg = lens[w]
                last = buf[w * maxlen + lg - 1] if lg else 0
                for i in range(4):
                    ch = letters[i]
                    if lg and inv_char(last) == ch:
                        continue
                    memcpy(buf + filled * maxlen, buf + w * maxlen, lg)
                    buf[filled * maxlen + lg] = ch
                    lens[filled] = lg + 1
                    filled += 1
            start = stop
        for w in range(filled):
            lg = lens[w]
            gw = buf + w * maxlen
            pre[w * stride] = 0
            if lg:
                pre[w * stride + 1] = 0
            for i in range(2, lg + 1):
                pre[w * stride + i] = pre[w * stride + i - 1] + pair_score(gw[i - 2], gw[i - 1])
            suf[w * stride + lg] = 0
            if lg:
                suf[w * stride + lg - 1] = 0
            for i in range(lg - 2, -1, -1):
                suf[w * stride + i] = suf[w * stride + i + 1] + pair_score(gw[i], gw[i + 1])
            totals[w] = pre[w * stride + lg]
        with nogil:
            for gi in range(filled):
                lg = lens[gi]
                gw = buf + gi * maxlen
                eg = totals[gi]
                for hi in range(filled):
                    lh = lens[hi]
                    hw = buf + hi * maxlen
                    m = lg if lg < lh else lh
                    k = 0
                    while k < m and gw[lg - 1 - k] == inv_char(hw[k]):
                        k += 1
                    left = lg - k
                    if left and lh - k:
                        val = pre[gi * stride + left] + pair_score(gw[left - 1], hw[k]) + suf[hi * stride + k]
                    elif left:
                        val = pre[gi * stride + left]
                    else:
                        val = suf[hi * stride + k]
                    d = eg + totals[hi] - val
                    if d < 0:
                        d = -d
                    if d > best:
                        best = d
        return best
    finally:
        free(buf)
        free(lens)
        free(totals)
        free(pre)
        free(suf)

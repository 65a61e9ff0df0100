# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the integer root-isolation kernels (mirrors _kernels_py)."""


cpdef int sign_variations(list coeffs):
    cdef int last = 0, count = 0, s
    for c in coeffs:
        if c:
            s = 1 if c > 0 else -1
            if last != 0 and s != last:
                count += 1
            last = s
    return count


cpdef list taylor_shift1(p):
    cdef list a = list(p)
    cdef Py_ssize_t n = len(a), i, j
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] = a[j] + a[j + 1]
    return a


cpdef int descartes_01(list p):
    return sign_variations(taylor_shift1(p[::-1]))


ONE = 1  # Python int, so shifts never overflow


cpdef int sign_at_dyadic(list p, c, int k):
    cdef Py_ssize_t n = len(p) - 1, i
    acc = 0
    for i in range(n, -1, -1):
        acc = acc * c + p[i] * (ONE << (k * (n - i)))
    return (acc > 0) - (acc < 0)


cdef list _halve(list p):
    cdef Py_ssize_t n = len(p) - 1, i
    return [p[i] << (n - i) for i in range(n + 1)]


cdef list _drop_root_at_one(list p):
    cdef Py_ssize_t n = len(p) - 1, i
    cdef list out = [0] * n
    carry = 0
    for i in range(n, 0, -1):
        carry = p[i] + carry
        out[i - 1] = carry
    return out


cpdef list vca_isolate(p):
    cdef list out = [], stack = [(list(p), 0, 0)], q, left, right
    cdef int v, k, depth
    cdef list keyed
    while stack:
        q, c, k = stack.pop()
        if len(q) <= 1:
            continue
        v = descartes_01(q)
        if v == 0:
            continue
        if v == 1:
            out.append((0, c, k))
            continue
        left = _halve(q)
        right = taylor_shift1(left)
        if sum(left) == 0:
            out.append((1, 2 * c + 1, k + 1))
            left = _drop_root_at_one(left)
            right = right[1:]
        stack.append((right, 2 * c + 1, k + 1))
        stack.append((left, 2 * c, k + 1))
    depth = max([t[2] for t in out]) if out else 0
    keyed = [(t[1] << (depth - t[2]), -t[0], t) for t in out]
    keyed.sort()
    return [kt[2] for kt in keyed]

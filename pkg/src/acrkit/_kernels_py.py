"""Pure-Python versions of the integer root-isolation kernels.

All polynomials are lists of Python ints indexed by degree.
"""

from __future__ import annotations


def sign_variations(coeffs) -> int:
    last = 0
    count = 0
    for c in coeffs:
        if c:
            s = 1 if c > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


def taylor_shift1(p) -> list:
    """Coefficients of p(x + 1)."""
    a = list(p)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += a[j + 1]
    return a


def descartes_01(p) -> int:
    """Descartes bound on the number of roots of p in (0, 1)."""
    return sign_variations(taylor_shift1(p[::-1]))


def sign_at_dyadic(p, c, k) -> int:
    """Sign of p(c / 2**k) using integer arithmetic only."""
    n = len(p) - 1
    acc = 0
    for i in range(n, -1, -1):
        acc = acc * c + p[i] * (1 << (k * (n - i)))
    return (acc > 0) - (acc < 0)


def _halve(p) -> list:
    n = len(p) - 1
    return [a << (n - i) for i, a in enumerate(p)]


def _drop_root_at_one(p) -> list:
    # synthetic division by (t - 1)
    n = len(p) - 1
    out = [0] * n
    carry = 0
    for i in range(n, 0, -1):
        carry = p[i] + carry
        out[i - 1] = carry
    return out


def vca_isolate(p) -> list:
    """Isolate the roots in (0, 1) of a squarefree integer polynomial.

    Requires p(0) != 0 and p(1) != 0. Returns ``(exact, c, k)`` triples: an
    exact root at c/2**k when ``exact`` is 1, otherwise a single root in the
    open interval (c/2**k, (c+1)/2**k).
    """
    out = []
    stack = [(list(p), 0, 0)]
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
    depth = max((t[2] for t in out), default=0)
    out.sort(key=lambda t: (t[1] << (depth - t[2]), -t[0]))
    return out

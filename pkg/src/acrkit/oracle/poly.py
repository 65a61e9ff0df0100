"""Dense univariate polynomials over the rationals.

A polynomial is a list of coefficients indexed by degree, trimmed so the last
entry is nonzero; the zero polynomial is the empty list.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Poly = list


def trim(p: Sequence) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def scale(p: Poly, c) -> Poly:
    return trim([c * a for a in p])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p)
    out = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        shift = len(r) - len(q)
        out[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = trim(r)
    return trim(out), r


def derivative(p: Poly) -> Poly:
    return trim([i * p[i] for i in range(1, len(p))])


def monic(p: Poly) -> Poly:
    return [c / p[-1] for c in p] if p else []


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def evaluate(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign(v) -> int:
    return (v > 0) - (v < 0)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: returns [(f_m, m)] with p = lc * prod f_m^m, each f_m squarefree and monic."""
    p = trim(p)
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = poly_gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    m = 1
    while len(b) > 1:
        a = poly_gcd(b, d)
        if len(a) > 1:
            out.append((monic(a), m))
        b = divmod_poly(b, a)[0]
        c = divmod_poly(d, a)[0]
        d = sub(c, derivative(b))
        m += 1
    return out


def to_integer_coeffs(p: Poly) -> list[int]:
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def sign_variations(coeffs: Sequence) -> int:
    last, count = 0, 0
    for c in coeffs:
        s = sign(c)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [trim(p), derivative(trim(p))]
    while seq[-1]:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(scale(r, -1))
    return [q for q in seq if q]


def _variations_at(seq: list[Poly], x) -> int:
    return sign_variations([evaluate(q, x) for q in seq])


def sturm_count(p: Poly, a, b) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (a, b]."""
    p = trim(p)
    if not p:
        raise ValueError("zero polynomial")
    try:
        seq = sturm_sequence(p)
    except ZeroDivisionError:
        return 0
    return _variations_at(seq, Fraction(a)) - _variations_at(seq, Fraction(b))


def cauchy_bound(p: Poly) -> Fraction:
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))


def from_terms(terms: dict, q: int | None = None) -> tuple[Poly, int]:
    """Integer-exponent polynomial from ``{exponent: coeff}`` with rational exponents.

    Returns ``(poly, q)`` where ``poly`` is in the variable ``u`` with
    ``x = u**q`` and the lowest power of ``u`` has been divided out. A
    caller-supplied ``q`` must be a multiple of every exponent denominator.
    """
    if not terms:
        return [], q or 1
    if q is None:
        q = exponent_lcm(terms)
    ints = {int(Fraction(e) * q): Fraction(c) for e, c in terms.items() if c != 0}
    if not ints:
        return [], q
    low = min(ints)
    deg = max(ints) - low
    out = [Fraction(0)] * (deg + 1)
    for e, c in ints.items():
        out[e - low] += c
    return trim(out), q


def exponent_lcm(*term_maps) -> int:
    q = 1
    for terms in term_maps:
        for e in terms:
            q = lcm(q, Fraction(e).denominator)
    return q

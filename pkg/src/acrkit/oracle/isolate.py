"""Exact isolation of the positive roots of a sum of rational-exponent monomials."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .. import kernels
from ..errors import ZeroPolynomialError
from .poly import (
    cauchy_bound,
    derivative,
    divmod_poly,
    evaluate,
    exponent_lcm,
    from_terms,
    poly_gcd,
    sign,
    squarefree_decomposition,
    to_integer_coeffs,
)


@dataclass(frozen=True)
class Root:
    """One distinct positive root.

    ``lo < hi`` bound the root strictly unless ``exact`` is set, in which case
    ``lo == hi == exact``.
    """

    lo: Fraction
    hi: Fraction
    exact: Fraction | None
    multiplicity: int
    derivative_sign: int
    _g: tuple = field(default=(), repr=False, compare=False)
    _ck: tuple = field(default=(0, 0), repr=False, compare=False)
    _scale: tuple = field(default=(1, 1), repr=False, compare=False)  # (B, q)
    _ratio: bool = field(default=False, repr=False, compare=False)  # _ck holds (num, den) of t

    def t_value(self) -> Fraction:
        c, k = self._ck
        return Fraction(c, k) if self._ratio else Fraction(c, 1 << k)

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi)

    def approx(self) -> float:
        return float(self.exact) if self.exact is not None else float((self.lo + self.hi) / 2)

    def contains(self, x) -> bool:
        x = Fraction(x)
        if self.exact is not None:
            return x == self.exact
        return self.lo < x < self.hi

    def refine(self, width) -> "Root":
        """Bisect until ``hi - lo <= width`` (exact roots are returned unchanged)."""
        r = self
        while r.exact is None and r.hi - r.lo > Fraction(width):
            r = _bisect(r)
        return r


@dataclass(frozen=True)
class RootReport:
    roots: tuple[Root, ...]

    @property
    def positive_root_count(self) -> int:
        return len(self.roots)

    @property
    def isolating_intervals(self) -> list[tuple[Fraction, Fraction]]:
        return [r.interval for r in self.roots]

    @property
    def multiplicities(self) -> list[int]:
        return [r.multiplicity for r in self.roots]

    @property
    def derivative_signs(self) -> list[int]:
        return [r.derivative_sign for r in self.roots]

    def to_json(self) -> list[dict]:
        return [
            {
                "interval": [str(r.lo), str(r.hi)],
                "exact": None if r.exact is None else str(r.exact),
                "approx": round(r.approx(), 12),
                "multiplicity": r.multiplicity,
                "derivative_sign": r.derivative_sign,
            }
            for r in self.roots
        ]


def _to_x(t: Fraction, scale) -> Fraction:
    b, q = scale
    return (b * t) ** q


def _make(g, c, k, exact, mult, dsign, scale) -> Root:
    if exact:
        t = Fraction(c, 1 << k)
        x = _to_x(t, scale)
        return Root(x, x, x, mult, dsign, tuple(g), (c, k), scale)
    lo = _to_x(Fraction(c, 1 << k), scale)
    hi = _to_x(Fraction(c + 1, 1 << k), scale)
    return Root(lo, hi, None, mult, dsign, tuple(g), (c, k), scale)


def _bisect(r: Root) -> Root:
    g = list(r._g)
    c, k = r._ck
    mid = kernels.sign_at_dyadic(g, 2 * c + 1, k + 1)
    if mid == 0:
        return _make(g, 2 * c + 1, k + 1, True, r.multiplicity, r.derivative_sign, r._scale)
    left = kernels.sign_at_dyadic(g, c, k)
    nc = 2 * c if left != mid else 2 * c + 1
    return _make(g, nc, k + 1, False, r.multiplicity, r.derivative_sign, r._scale)


def _divisors(n: int, limit: int = 10**12) -> list[int] | None:
    n = abs(n)
    if n > limit:
        return None
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _snap_rational(r: Root) -> Root:
    """Replace an isolating interval by the exact root when the root is rational."""
    g = list(r._g)
    dens = _divisors(g[-1])
    if dens is None:
        return r
    c, k = r._ck
    lead = abs(g[-1])
    while Fraction(1, 1 << k) * lead >= 1:
        r = _bisect(r)
        if r.exact is not None:
            return r
        c, k = r._ck
    lo, hi = Fraction(c, 1 << k), Fraction(c + 1, 1 << k)
    for den in dens:
        num = -(-lo.numerator * den // lo.denominator)  # ceil(lo * den)
        t = Fraction(num, den)
        if lo < t < hi and evaluate(g, t) == 0:
            scale = r._scale
            return _make_exact_t(g, t, r.multiplicity, r.derivative_sign, scale)
    return r


def _make_exact_t(g, t: Fraction, mult, dsign, scale) -> Root:
    x = _to_x(t, scale)
    return Root(x, x, x, mult, dsign, tuple(g), (t.numerator, t.denominator), scale, True)


def _as_terms(p) -> dict:
    if hasattr(p, "terms"):
        return dict(p.terms)
    if isinstance(p, dict):
        return dict(p)
    return {i: c for i, c in enumerate(p) if c != 0}


def positive_roots(p) -> RootReport:
    """Isolate every distinct positive root of ``p`` exactly.

    ``p`` may be a steady-state polynomial, a mapping from (rational,
    nonnegative) exponents to coefficients, or a coefficient list indexed by
    degree. Raises ``ZeroPolynomialError`` when ``p`` vanishes identically.
    """
    upoly, q = from_terms(_as_terms(p))
    if not upoly:
        raise ZeroPolynomialError("the polynomial is identically zero")
    if len(upoly) == 1:
        return RootReport(())
    bound = cauchy_bound(upoly)
    b = 1
    while b <= bound:
        b *= 2
    scale = (b, q)
    du = derivative(upoly)
    found = []
    for factor, mult in squarefree_decomposition(upoly):
        ft = to_integer_coeffs([c * b ** i for i, c in enumerate(factor)])
        if ft[0] == 0:
            ft = ft[1:]
        if len(ft) <= 1:
            continue
        hits = kernels.vca_isolate(ft)
        exact_ts = [Fraction(c, 1 << k) for ex, c, k in hits if ex]
        g = [Fraction(v) for v in ft]
        for t in exact_ts:
            g = divmod_poly(g, [-t, Fraction(1)])[0]
        gi = to_integer_coeffs(g)
        for ex, c, k in hits:
            if ex:
                ds = 0 if mult > 1 else sign(evaluate(du, b * Fraction(c, 1 << k)))
                found.append(_make(gi, c, k, True, mult, ds, scale))
            else:
                found.append(_make(gi, c, k, False, mult, None, scale))
    found = _separate(found)
    out = []
    for r in found:
        if r.derivative_sign is None:
            c, k = r._ck
            if r.multiplicity > 1:
                ds = 0
            elif r.exact is not None:
                ds = sign(evaluate(du, b * r.t_value()))
            else:
                ds = sign(evaluate(upoly, b * Fraction(c + 1, 1 << k)))
            r = replace(r, derivative_sign=ds)
        if r.exact is None:
            r = _snap_rational(r)
        out.append(r)
    return RootReport(tuple(out))


def _separate(roots: list[Root]) -> list[Root]:
    """Refine until the closed isolating intervals are pairwise disjoint."""
    roots = sorted(roots, key=lambda r: (r.lo, r.hi))
    while True:
        clash = None
        for i in range(len(roots) - 1):
            a, z = roots[i], roots[i + 1]
            if a.hi >= z.lo:
                clash = i
                break
        if clash is None:
            return roots
        a, z = roots[clash], roots[clash + 1]
        if a.exact is None and (z.exact is not None or a.hi - a.lo >= z.hi - z.lo):
            roots[clash] = _bisect(a)
        else:
            roots[clash + 1] = _bisect(z)
        roots.sort(key=lambda r: (r.lo, r.hi))


def same_positive_roots(p, q) -> bool:
    """Exact test that ``p`` and ``q`` have the same positive roots with the same multiplicities."""
    ta, tb = _as_terms(p), _as_terms(q)
    e = exponent_lcm(ta, tb)
    pa, _ = from_terms(ta, e)
    pb, _ = from_terms(tb, e)
    ra, rb = positive_roots(ta), positive_roots(tb)
    if ra.multiplicities != rb.multiplicities:
        return False
    common = poly_gcd(pa, pb)
    shared = positive_roots(common).positive_root_count if len(common) > 1 else 0
    return shared == ra.positive_root_count == rb.positive_root_count


def sign_at(p, x) -> int:
    """Sign of ``p`` at a positive rational ``x`` (rational exponents must give a rational power)."""
    total = Fraction(0)
    for e, c in _as_terms(p).items():
        e = Fraction(e)
        if e.denominator == 1:
            total += Fraction(c) * Fraction(x) ** e.numerator
        else:
            raise ValueError("non-integer exponent needs an interval evaluation")
    return sign(total)


__all__ = ["Root", "RootReport", "positive_roots", "same_positive_roots", "sign_at"]

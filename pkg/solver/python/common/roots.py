"""
Exact real-root isolation for rational polynomials.

Multiplicities come from sympy's square-free decomposition. Every square-free factor is isolated with
its Sturm sequence on dyadic cells and then refined by sign bisection. Refinement stops at a dyadic level
fixed by the octave of the root, so the representative of an irrational root does not depend on which
polynomial it was extracted from: two polynomials sharing a root yield the identical rational.
Rational roots with small denominators are recovered exactly by best-rational snapping.
"""

import logging
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from sympy import Poly

from .. import config
from .poly import integer_coefficients


logger = logging.getLogger(__name__)


class RealRoot(NamedTuple):
    value: Fraction
    multiplicity: int
    exact: bool
    lo: Fraction
    hi: Fraction


def _sign_at(coeffs: list[int], x: Fraction) -> int:
    """
    Sign of the polynomial with ascending integer coefficients at x, in integer arithmetic.
    """
    if not coeffs:
        return 0
    a, b = x.numerator, x.denominator
    acc = coeffs[-1]
    b_pow = 1
    for c in reversed(coeffs[:-1]):
        b_pow *= b
        acc = acc * a + c * b_pow
    return (acc > 0) - (acc < 0)


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _floor_log2(x: Fraction) -> int:
    a, b = x.numerator, x.denominator
    k = a.bit_length() - b.bit_length()
    # 2^k <= a/b < 2^(k+1) after the correction below
    if (a << max(-k, 0)) < (b << max(k, 0)):
        k -= 1
    return k


def bits_for(rel_tol: Fraction) -> int:
    bits = 0
    while Fraction(1, 1 << bits) > rel_tol:
        bits += 1
    return bits


def _root_bound(coeffs: list[int]) -> Fraction:
    """
    Power of two strictly above the Cauchy bound.
    """
    lead = abs(coeffs[-1])
    bound = 1 + max((Fraction(abs(c), lead) for c in coeffs[:-1]), default=Fraction(0))
    power = Fraction(1)
    while power <= bound:
        power *= 2
    return power


def _isolate(chain: list[list[int]], lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """
    Dyadic cells (lo, hi] each holding exactly one root, in increasing order.
    """
    cells = []
    stack = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            cells.append((a, b))
            continue
        mid = (a + b) / 2
        vm = _variations(chain, mid)
        # right half first so that the left half is popped first
        stack.append((mid, b, vm, vb))
        stack.append((a, mid, va, vm))
    return cells


def _refine(coeffs: list[int], lo: Fraction, hi: Fraction, bits: int) -> tuple[Fraction, bool, Fraction, Fraction]:
    """
    Bisects the cell (lo, hi] with a single simple root down to the canonical dyadic level.
    Returns (representative, exact, lo, hi).
    """
    s_hi = _sign_at(coeffs, hi)
    if s_hi == 0:
        return hi, True, hi, hi

    def done(a: Fraction, b: Fraction) -> bool:
        if a > 0:
            return b - a <= Fraction(2) ** (_floor_log2(a) - bits)
        if b < 0:
            return b - a <= Fraction(2) ** (_floor_log2(-b) - bits)
        return False

    while not done(lo, hi):
        mid = (lo + hi) / 2
        s_mid = _sign_at(coeffs, mid)
        if s_mid == 0:
            return mid, True, mid, mid
        # points right of the root carry the sign of f(hi)
        if s_mid == s_hi:
            hi = mid
        else:
            lo = mid

    value = (lo + hi) / 2
    width = hi - lo
    max_denominator = max(1, isqrt(int(1 / (2 * width))))
    snapped = value.limit_denominator(max_denominator)
    if lo < snapped < hi and _sign_at(coeffs, snapped) == 0:
        return snapped, True, lo, hi
    return value, False, lo, hi


def _square_free_roots(factor: Poly, multiplicity: int, bits: int) -> list[RealRoot]:
    coeffs = integer_coefficients(factor)
    if len(coeffs) < 2:
        return []
    chain = [integer_coefficients(q) for q in factor.sturm()]
    bound = _root_bound(coeffs)
    roots = []
    for lo, hi in _isolate(chain, -bound, bound):
        value, exact, a, b = _refine(coeffs, lo, hi, bits)
        roots.append(RealRoot(value, multiplicity, exact, a, b))
    return roots


def refinement_tol(degree: int) -> Fraction:
    """
    Relative root width for spectra that feed a reconstruction of the given total degree.

    The Stieltjes continued fraction loses digits with every mass, so the width shrinks by
    root_rel_tol_per_degree for each degree of the characteristic polynomial.
    """
    return config.root_rel_tol * config.root_rel_tol_per_degree ** max(degree, 0)


def real_roots(p: Poly, rel_tol: Fraction | None = None) -> list[RealRoot]:
    """
    All real roots of a nonzero polynomial with their multiplicities, in increasing order.
    Irrational roots are returned as the midpoint of a dyadic cell of relative width at most rel_tol.
    """
    if p.is_zero:
        raise ValueError("real_roots of the zero polynomial")
    bits = bits_for(config.root_rel_tol if rel_tol is None else rel_tol)
    _, factors = p.sqf_list()
    roots = []
    for factor, multiplicity in factors:
        roots.extend(_square_free_roots(factor, multiplicity, bits))
    roots.sort(key=lambda r: r.value)
    logger.debug("Isolated %d real roots of a degree %s polynomial", len(roots), p.degree())
    return roots


def count_real_roots(p: Poly) -> int:
    """
    Number of real roots counted with multiplicity.
    """
    _, factors = p.sqf_list()
    return sum(multiplicity * factor.count_roots() for factor, multiplicity in factors if factor.degree() > 0)


def is_root_within(p: Poly, x: Fraction, rel_tol: Fraction | None = None) -> bool:
    """
    True when p vanishes at x or changes sign within the relative neighbourhood of x.
    """
    coeffs = integer_coefficients(p)
    if _sign_at(coeffs, x) == 0:
        return True
    tol = config.root_rel_tol if rel_tol is None else rel_tol
    delta = abs(x) * tol * 2 if x != 0 else tol
    return _sign_at(coeffs, x - delta) * _sign_at(coeffs, x + delta) <= 0

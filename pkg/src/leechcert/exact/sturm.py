"""Exact sign analysis of rational polynomials via Sturm sequences."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .polynomial import RationalPolynomial

Interval = Tuple[Fraction, Fraction]


def sturm_sequence(p: RationalPolynomial) -> List[RationalPolynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        # positive rescaling keeps signs and tames coefficient growth
        seq.append(-(r / abs(r.lead)))
    return [q for q in seq if not q.is_zero()]


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def sign_changes(seq: List[RationalPolynomial], x: Fraction) -> int:
    signs = [s for s in (_sign(q(x)) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: List[RationalPolynomial], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return sign_changes(seq, lo) - sign_changes(seq, hi)


def isolate_roots(p: RationalPolynomial, lo, hi) -> List[Interval]:
    """Disjoint intervals each holding exactly one distinct root of ``p`` in [lo, hi].

    A degenerate interval ``(r, r)`` is an exact rational root. Any other
    interval ``(a, b)`` has non-root endpoints and one root strictly inside.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if p.degree < 1:
        return []
    sf = p.squarefree()
    seq = sturm_sequence(sf)
    out: List[Interval] = []
    if sf(lo) == 0:
        out.append((lo, lo))
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if n > 1:
            mid = (a + b) / 2
            stack.append((a, mid))
            stack.append((mid, b))
            continue
        if sf(b) == 0:
            out.append((b, b))
            continue
        while sf(a) == 0:
            m = (a + b) / 2
            if sf(m) == 0:
                a = b = m
                break
            if count_roots(seq, m, b) == 1:
                a = m
            else:
                b = m
        out.append((a, b))
    return sorted(out)


def refine(p: RationalPolynomial, iv: Interval, width) -> Interval:
    """Bisect an isolating interval of a squarefree ``p`` until narrower than ``width``."""
    a, b = iv
    if a == b:
        return iv
    sa = _sign(p(a))
    while b - a >= width:
        m = (a + b) / 2
        sm = _sign(p(m))
        if sm == 0:
            return (m, m)
        if sm == sa:
            a = m
        else:
            b = m
    return (a, b)


def nonpositive_on_interval(p: RationalPolynomial, lo, hi) -> bool:
    """True iff ``p(s) <= 0`` for every real ``s`` in ``[lo, hi]``, decided exactly."""
    return positivity_witness(p, lo, hi) is None


def positivity_witness(p: RationalPolynomial, lo, hi) -> Optional[Fraction]:
    """A rational point of ``[lo, hi]`` where ``p`` is positive, or None if there is none."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if p.is_zero():
        return None
    samples = {lo, hi}
    for a, b in isolate_roots(p, lo, hi):
        if a != b:
            samples.add(a)
            samples.add(b)
        else:
            samples.add(a)
    # every open gap between consecutive distinct roots contains a sample point
    pts = sorted(samples)
    for s in pts:
        if p(s) > 0:
            return s
    for s, t in zip(pts, pts[1:]):
        m = (s + t) / 2
        if p(m) > 0:
            return m
    return None


def rational_roots(p: RationalPolynomial, lo=None, hi=None) -> List[Fraction]:
    """All rational roots of ``p`` (optionally restricted to [lo, hi]), exact.

    Roots are isolated first; a rational root ``u/v`` in lowest terms has
    ``v`` dividing the leading coefficient of the primitive integer form,
    so each isolating interval is refined below ``1/lead`` and then holds
    at most one candidate numerator per admissible denominator.
    """
    if p.degree < 1:
        return []
    ints = p.squarefree().primitive_integer()
    lead = abs(ints[-1])
    bound = 1 + max(Fraction(abs(c), lead) for c in ints[:-1])
    a0 = Fraction(lo) if lo is not None else -bound
    b0 = Fraction(hi) if hi is not None else bound
    if a0 > b0:
        return []
    sf = RationalPolynomial(ints)
    dens = _divisors(lead)
    roots = []
    for iv in isolate_roots(sf, a0, b0):
        a, b = refine(sf, iv, Fraction(1, 2 * lead))
        if a == b:
            roots.append(a)
            continue
        for v in dens:
            u = -((-a.numerator * v) // a.denominator)  # ceil(a*v)
            while Fraction(u, v) <= b:
                if sf(Fraction(u, v)) == 0:
                    roots.append(Fraction(u, v))
                u += 1
    return sorted(set(roots))


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]

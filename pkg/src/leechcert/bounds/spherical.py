"""Delsarte linear programming certificates for spherical codes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from ..exact.orthopoly import gegenbauer, gegenbauer_combination, gegenbauer_expand
from ..exact.polynomial import RationalPolynomial
from ..exact.sturm import isolate_roots, positivity_witness, rational_roots
from .simplex import OPTIMAL, LinearProgram, simplex_solve


class InvalidCertificate(ValueError):
    def __init__(self, msg, certificate=None):
        super().__init__(msg)
        self.certificate = certificate


class NoCertificateFound(RuntimeError):
    pass


@dataclass
class SphericalCertificate:
    polynomial: RationalPolynomial
    n: int
    t: Fraction
    expansion: List[Fraction]
    bound: Optional[Fraction]
    equality_inner_products: List[Fraction]
    irrational_roots: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def equality_conditions(self) -> str:
        ips = ", ".join(str(r) for r in self.equality_inner_products)
        return (f"a code of size {self.bound} has all distinct inner products in {{{ips}}} "
                f"and is a spherical {self.polynomial.degree}-design")


def check_spherical_certificate(p: RationalPolynomial, n: int, t, strict: bool = True) -> SphericalCertificate:
    """Verify ``p`` as an LP certificate for codes in dimension ``n`` with max inner product ``t``.

    Conditions: Gegenbauer coefficient ``f_0 > 0``, ``f_k >= 0`` for ``k >= 1``,
    and ``p <= 0`` on ``[-1, t]`` (decided with Sturm sequences). The bound is
    ``p(1) / f_0``. With ``strict`` an invalid certificate raises.
    """
    t = Fraction(t)
    if p.degree < 1:
        raise ValueError("certificate polynomial must have degree >= 1")
    f = gegenbauer_expand(p, n)
    failures = []
    if f[0] <= 0:
        failures.append(f"f_0 = {f[0]} is not positive")
    for k, c in enumerate(f[1:], start=1):
        if c < 0:
            failures.append(f"f_{k} = {c} is negative")
    witness = positivity_witness(p, -1, t)
    if witness is not None:
        failures.append(f"p({witness}) = {p(witness)} > 0 inside [-1, {t}]")
    bound = p(1) / f[0] if f[0] > 0 else None
    roots = rational_roots(p, -1, t)
    n_all = len(isolate_roots(p, -1, t))
    cert = SphericalCertificate(p, n, t, f, bound, roots, n_all - len(roots), failures)
    if strict and failures:
        raise InvalidCertificate("; ".join(failures), cert)
    return cert


def _interior(s: Fraction, t: Fraction) -> bool:
    return -1 < s < t


def find_spherical_certificate(n: int, t, degree: int, node_set: Sequence, max_rounds: int = 40) -> SphericalCertificate:
    """Search for a certificate of degree <= ``degree`` minimizing ``p(1)/f_0``.

    Unknowns are the Gegenbauer coefficients ``f_1..f_d`` with ``f_0 = 1``.
    The LP requires ``p <= 0`` at every node, ``p = p' = 0`` at nodes inside
    ``(-1, t)``, and ``p <= 0`` at each cutting point added when the full
    interval check finds a positive value. Only a fully verified certificate
    is returned.
    """
    t = Fraction(t)
    if degree < 1 or degree > 10:
        raise ValueError("degree must be in 1..10")
    nodes = sorted({Fraction(s) for s in node_set})
    if any(s < -1 or s > t for s in nodes):
        raise ValueError("nodes must lie in [-1, t]")
    G = [gegenbauer(n, k) for k in range(degree + 1)]
    dG = [g.derivative() for g in G]
    cuts: List[Fraction] = []
    for _ in range(max_rounds):
        A_ub, b_ub, A_eq, b_eq = [], [], [], []
        for s in nodes + cuts:
            if _interior(s, t) and s in nodes:
                A_eq.append([G[k](s) for k in range(1, degree + 1)])
                b_eq.append(-G[0](s))
                A_eq.append([dG[k](s) for k in range(1, degree + 1)])
                b_eq.append(Fraction(0))
            else:
                A_ub.append([G[k](s) for k in range(1, degree + 1)])
                b_ub.append(-G[0](s))
        lp = LinearProgram([-1] * degree, A_ub, b_ub, A_eq, b_eq)
        res = simplex_solve(lp)
        if res.status != OPTIMAL:
            raise NoCertificateFound(f"LP is {res.status}")
        coeffs = [Fraction(1)] + res.x
        p = gegenbauer_combination(coeffs, n)
        if p.degree < 1:
            raise NoCertificateFound("LP optimum is a constant polynomial")
        cert = check_spherical_certificate(p, n, t, strict=False)
        if cert.valid:
            return cert
        w = positivity_witness(p, -1, t)
        if w is None or w in cuts:
            raise NoCertificateFound("; ".join(cert.failures))
        cuts.append(w)
    raise NoCertificateFound(f"no verified certificate after {max_rounds} rounds")


def is_proportional(p: RationalPolynomial, q: RationalPolynomial) -> bool:
    return not p.is_zero() and not q.is_zero() and p.monic() == q.monic()

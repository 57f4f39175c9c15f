"""Cyclotomic polynomials and detection of cyclotomic products."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import NotCyclotomicError, ZeroPolynomialError
from .laurent import ONE, LaurentPoly, format_poly

_totients = [0, 1]


def totient(m):
    """Euler's phi, from a lazily extended sieve."""
    if m < 1:
        raise ValueError("totient needs m >= 1")
    if m >= len(_totients):
        size = max(m + 1, 2 * len(_totients))
        phi = list(range(size))
        for p in range(2, size):
            if phi[p] == p:
                for q in range(p, size, p):
                    phi[q] -= phi[q] // p
        _totients[:] = phi
    return _totients[m]


def divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _cyclotomic_ints(m):
    # t^m - 1 divided by every Phi_k, k | m, k < m
    num = [-1] + [0] * (m - 1) + [1]
    for k in divisors(m)[:-1]:
        num = _int_exact_div(num, _cyclotomic_ints(k))
    return tuple(num)


def _int_exact_div(a, b):
    """Quotient (low-to-high coefficient lists) by a monic integer divisor; None if inexact."""
    q, r = _int_divmod(a, b)
    if any(r):
        return None
    return q


def _int_divmod(a, b):
    n = len(b)
    if len(a) < n:
        return [], list(a)
    r = list(a)
    q = [0] * (len(a) - n + 1)
    for i in range(len(a) - n, -1, -1):
        c = r[i + n - 1]
        if c:
            q[i] = c
            for j in range(n):
                r[i + j] -= c * b[j]
    return q, r[: n - 1]


def cyclotomic(m):
    """Phi_m as a LaurentPoly: monic, degree totient(m)."""
    if m < 1:
        raise ValueError("cyclotomic(m) needs m >= 1")
    return LaurentPoly(_cyclotomic_ints(m))


@dataclass(frozen=True)
class CyclotomicFactorization:
    """``unit * prod(Phi_m ** mult)`` with unit = (c, k) meaning c*t^k."""

    factors: dict = field(default_factory=dict)
    unit: tuple = (Fraction(1), 0)

    def expand(self):
        out = LaurentPoly.monomial(self.unit[0], self.unit[1])
        for m, e in sorted(self.factors.items()):
            out = out * cyclotomic(m) ** e
        return out

    def orders(self):
        return sorted(self.factors)

    def multiplicity(self, m):
        return self.factors.get(m, 0)

    def degree(self):
        return sum(totient(m) * e for m, e in self.factors.items())

    def format(self):
        """E.g. ``Phi12 * Phi6`` (largest order first); ``1`` for an empty product."""
        parts = []
        c, k = self.unit
        if c != 1 or k:
            parts.append(format_poly(LaurentPoly.monomial(c, k)))
        for m in sorted(self.factors, reverse=True):
            e = self.factors[m]
            parts.append(f"Φ{m}" if e == 1 else f"Φ{m}^{e}")
        return " * ".join(parts) if parts else "1"

    def __str__(self):
        return self.format()


def factor_cyclotomic(p):
    """Factor ``p`` as a unit times cyclotomic polynomials.

    Raises NotCyclotomicError carrying the residual factor and the partial
    factorization when some factor is not cyclotomic.
    """
    if p.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    unit, q = p.unit_normalize()
    # Phi_m is monic, so trial division stays exact over Q
    rem = list(q.coeffs)
    factors = {}
    m = 1
    while len(rem) > 1:
        deg = len(rem) - 1
        # totient(m) >= sqrt(m) for m > 6, so no candidate beyond max(6, deg^2)
        if m > max(6, deg * deg):
            break
        if totient(m) <= deg:
            phi = _cyclotomic_ints(m)
            while len(rem) - 1 >= len(phi) - 1:
                q_div = _int_exact_div(rem, phi)
                if q_div is None:
                    break
                rem = q_div
                factors[m] = factors.get(m, 0) + 1
        m += 1
    residual = LaurentPoly(rem)
    if not residual.is_one():
        raise NotCyclotomicError(
            f"residual factor {format_poly(residual)} is not cyclotomic",
            residual=residual,
            partial=CyclotomicFactorization(factors, unit),
        )
    return CyclotomicFactorization(factors, unit)


def is_cyclotomic_product(p):
    try:
        factor_cyclotomic(p)
    except NotCyclotomicError:
        return False
    return True


def from_orders(factors):
    """Product of Phi_m ** e for a mapping m -> e."""
    out = ONE
    for m, e in sorted(factors.items()):
        out = out * cyclotomic(m) ** e
    return out

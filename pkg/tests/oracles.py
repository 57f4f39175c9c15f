"""Independent reference computations used to check the library.

Each oracle avoids the algorithm it checks: cofactor expansion instead of
Bareiss, minor enumeration instead of Smith reduction, schoolbook long
division on plain coefficient lists, and numerical roots of unity instead
of exact cyclotomic bookkeeping.
"""

import cmath
import math
from fractions import Fraction
from functools import reduce
from itertools import combinations, product

from gamma_torsion.laurent import ONE, ZERO, LaurentPoly, gcd


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def minor_gcd(rows, k):
    """gcd of all k x k minors (0 if all vanish)."""
    m, n = len(rows), len(rows[0]) if rows else 0
    out = ZERO
    for ri in combinations(range(m), k):
        for ci in combinations(range(n), k):
            det = cofactor_det([[rows[i][j] for j in ci] for i in ri])
            if det:
                out = det if out.is_zero() else gcd(out, det)
    return out


def long_division(a, b):
    """Schoolbook division on ascending Fraction lists; returns (q, r)."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and b[-1] == 0:
        b.pop()
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = a[:]
    for shift in range(len(a) - len(b), -1, -1):
        c = r[shift + len(b) - 1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
    while r and r[-1] == 0:
        r.pop()
    return q, r


def poly_from_roots(roots):
    """prod (t - z) with complex roots, coefficients rounded to integers."""
    coeffs = [complex(1)]
    for z in roots:
        nxt = [complex(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= z * c
        coeffs = nxt
    ints = []
    for c in coeffs:
        assert abs(c.imag) < 1e-6 and abs(c.real - round(c.real)) < 1e-6, c
        ints.append(round(c.real))
    return LaurentPoly(ints)


def brieskorn_roots(exponents):
    """All monodromy eigenvalues prod zeta_{a_i}^{j_i}, 1 <= j_i < a_i."""
    out = []
    for js in product(*(range(1, a) for a in exponents)):
        out.append(reduce(lambda x, y: x * y, (cmath.exp(2j * math.pi * j / a) for j, a in zip(js, exponents)), 1))
    return out


def brute_charpoly(exponents):
    return poly_from_roots(brieskorn_roots(exponents))

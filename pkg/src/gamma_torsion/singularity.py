"""Closed-form invariants of Brieskorn germs and of degree-d hypersurfaces.

Eigenvalues of the Brieskorn monodromy are tracked as exponents s of
zeta_N^s with N = lcm of the exponents; no complex numbers are involved.
"""

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .cyclotomic import cyclotomic, totient
from .errors import NegativeMuError, NonIntegerError
from .laurent import ONE, T, RationalFn


@dataclass(frozen=True)
class BrieskornExponents:
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if not exps or any(a < 2 for a in exps):
            raise ValueError(f"Brieskorn exponents must be a nonempty list of integers >= 2, got {exps}")
        object.__setattr__(self, "exponents", exps)


@dataclass(frozen=True)
class GlobalParams:
    """A degree d polynomial on C^(n+1)."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError(f"need n >= 1 and d >= 1, got n={self.n}, d={self.d}")


def _exponents(e):
    return e.exponents if isinstance(e, BrieskornExponents) else BrieskornExponents(tuple(e)).exponents


def brieskorn_milnor_number(e):
    return math.prod(a - 1 for a in _exponents(e))


def brieskorn_eigenvalues(e):
    """Monodromy eigenvalues as a Counter of (s, N), meaning exp(2 pi i s / N)."""
    exps = _exponents(e)
    N = math.lcm(*exps)
    counts = Counter()
    for js in product(*(range(1, a) for a in exps)):
        counts[sum(j * (N // a) for j, a in zip(js, exps)) % N] += 1
    return counts, N


def brieskorn_orders(e):
    """Mapping m -> multiplicity of Phi_m in the characteristic polynomial."""
    counts, N = brieskorn_eigenvalues(e)
    by_order = Counter()
    for s, k in counts.items():
        by_order[N // math.gcd(s, N)] += k
    out = {}
    for m, k in sorted(by_order.items()):
        # Galois symmetry: every primitive m-th root appears equally often
        if k % totient(m):
            raise ArithmeticError(f"eigenvalues of order {m} are not Galois-stable")
        out[m] = k // totient(m)
    return out


def brieskorn_charpoly(e):
    """Characteristic polynomial of the monodromy of sum x_i^a_i, over Q."""
    out = ONE
    for m, k in brieskorn_orders(e).items():
        out = out * cyclotomic(m) ** k
    return out


def xi(g):
    """((d-1)^(n+1) + (-1)^n) / d."""
    num = (g.d - 1) ** (g.n + 1) + (-1) ** g.n
    if num % g.d:
        raise NonIntegerError(f"d={g.d} does not divide {num}")
    return num // g.d


def top_h_polynomial(g):
    """(t-1)^((-1)^(n+1)) * (t^d - 1)^xi as an exact rational function."""
    t_minus_1 = RationalFn(T - 1)
    td = RationalFn(T ** g.d - 1)
    return t_minus_1 ** ((-1) ** (g.n + 1)) * td ** xi(g)


def global_mu(g, mu_list=()):
    """(d-1)^(n+1) minus the local Milnor numbers."""
    mu = (g.d - 1) ** (g.n + 1) - sum(mu_list)
    if mu < 0:
        raise NegativeMuError(
            f"local Milnor numbers sum to {sum(mu_list)}, exceeding (d-1)^(n+1) = {(g.d - 1) ** (g.n + 1)}"
        )
    return mu


def chi_milnor_fiber(g):
    """Euler characteristic 1 + (-1)^n (d-1)^(n+1) of the smooth homogeneous Milnor fiber."""
    return 1 + (-1) ** g.n * (g.d - 1) ** (g.n + 1)


def alternating_h_product(g):
    """(t^d - 1)^(-chi/d), the alternating product of the Milnor fiber Alexander polynomials."""
    chi = chi_milnor_fiber(g)
    if chi % g.d:
        raise NonIntegerError(f"d={g.d} does not divide chi={chi}")
    return RationalFn(T ** g.d - 1) ** (-chi // g.d)


def homogeneous_h_list(g):
    """h_0, ..., h_n of the Milnor fiber of a homogeneous polynomial with isolated singularity.

    h_0 = t - 1, h_i = 1 for 0 < i < n, h_n from the closed form.
    """
    return [RationalFn(T - 1)] + [RationalFn(ONE)] * (g.n - 1) + [top_h_polynomial(g)]

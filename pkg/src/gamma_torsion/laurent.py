"""Exact arithmetic in Q[t, t^-1] and its fraction field Q(t).

Polynomials are stored densely: a lowest exponent plus a tuple of
:class:`fractions.Fraction` coefficients, trimmed so that both end
coefficients are nonzero.  The zero polynomial is the empty tuple.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import (
    BothZeroError,
    DivisionByZeroError,
    InexactDivisionError,
    ZeroPolynomialError,
)

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class LaurentPoly:
    """An element of Q[t, t^-1].  Immutable and hashable."""

    __slots__ = ("_low", "_coeffs", "_hash")

    def __init__(self, coeffs=(), low=0):
        cs = [_as_fraction(c) for c in coeffs]
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        end = len(cs)
        while end > start and not cs[end - 1]:
            end -= 1
        self._coeffs = tuple(cs[start:end])
        self._low = low + start if self._coeffs else 0
        self._hash = None

    @classmethod
    def _raw(cls, coeffs, low):
        # coeffs already Fractions and trimmed
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        obj._low = low if coeffs else 0
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms):
        """Build from a mapping ``exponent -> coefficient``."""
        terms = {int(k): _as_fraction(v) for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, _ZERO) for k in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, coeff=1, exp=0):
        return cls([coeff], exp)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        return cls([x])

    # -- accessors ------------------------------------------------------
    @property
    def low(self):
        return self._low

    @property
    def high(self):
        return self._low + len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def terms(self):
        return {self._low + i: c for i, c in enumerate(self._coeffs) if c}

    @property
    def lead(self):
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, k):
        i = k - self._low
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return _ZERO

    def is_zero(self):
        return not self._coeffs

    def is_unit(self):
        """True for c*t^k with c != 0."""
        return len(self._coeffs) == 1

    def is_one(self):
        return self._low == 0 and self._coeffs == (_ONE,)

    def __bool__(self):
        return bool(self._coeffs)

    def total_degree(self):
        """Highest minus lowest exponent; c*t^k has total degree 0."""
        if not self._coeffs:
            raise ZeroPolynomialError("total degree of the zero polynomial")
        return len(self._coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._low == other._low and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly([other])
        if isinstance(other, RationalFn):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._low, self._coeffs))
        return self._hash

    # -- ring operations -----------------------------------------------
    def __neg__(self):
        return LaurentPoly._raw(tuple(-c for c in self._coeffs), self._low)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly([other])
            else:
                return NotImplemented
        if not self._coeffs:
            return other
        if not other._coeffs:
            return self
        lo = min(self._low, other._low)
        hi = max(self.high, other.high)
        out = [_ZERO] * (hi - lo + 1)
        off = self._low - lo
        for i, c in enumerate(self._coeffs):
            out[off + i] = c
        off = other._low - lo
        for i, c in enumerate(other._coeffs):
            out[off + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly([other])
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                c = _as_fraction(other)
                if not c:
                    return LaurentPoly()
                return LaurentPoly._raw(tuple(x * c for x in self._coeffs), self._low)
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return LaurentPoly()
        if len(a) == 1:
            c = a[0]
            return LaurentPoly._raw(tuple(c * x for x in b), self._low + other._low)
        if len(b) == 1:
            c = b[0]
            return LaurentPoly._raw(tuple(x * c for x in a), self._low + other._low)
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # product of nonzero polynomials has nonzero end coefficients
        return LaurentPoly._raw(tuple(out), self._low + other._low)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_unit():
                raise InexactDivisionError(f"negative power of non-unit {self}")
            c = self._coeffs[0]
            return LaurentPoly._raw((c ** n,), self._low * n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly._raw(self._coeffs, self._low + k)

    def scale(self, c):
        return self * _as_fraction(c)

    def __call__(self, x):
        """Evaluate at ``x`` (Horner); ``x`` must be invertible when low < 0."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        if self._low:
            acc = acc * (x ** self._low) if self._low > 0 else acc / (x ** -self._low)
        return acc

    def involution(self):
        """The ring automorphism t -> t^-1."""
        return LaurentPoly._raw(tuple(reversed(self._coeffs)), -self.high)

    # -- division ------------------------------------------------------
    def divmod_qt(self, other):
        """Euclidean division in Q[t]; both operands need nonnegative exponents."""
        if not other._coeffs:
            raise DivisionByZeroError("division by the zero polynomial")
        if self._low < 0 or other._low < 0:
            raise ValueError("divmod_qt needs polynomials in Q[t]")
        if not self._coeffs:
            return LaurentPoly(), LaurentPoly()
        a = [_ZERO] * self._low + list(self._coeffs)
        b = [_ZERO] * other._low + list(other._coeffs)
        q, r = _dense_divmod(a, b)
        return LaurentPoly(q), LaurentPoly(r)

    def divmod_gamma(self, other):
        """Euclidean division in Q[t, t^-1] with total degree as the norm.

        Returns ``(q, r)`` with ``self == q*other + r`` and either ``r == 0``
        or ``r.total_degree() < other.total_degree()``.
        """
        if not other._coeffs:
            raise DivisionByZeroError("division by the zero polynomial")
        if not self._coeffs:
            return LaurentPoly(), LaurentPoly()
        q, r = _dense_divmod(list(self._coeffs), list(other._coeffs))
        return LaurentPoly(q, self._low - other._low), LaurentPoly(r, self._low)

    def exact_div(self, other):
        """Exact quotient in Q[t, t^-1]; raises unless ``other`` divides ``self``."""
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.coerce(other)
        if not other._coeffs:
            raise DivisionByZeroError("division by the zero polynomial")
        if not self._coeffs:
            return LaurentPoly()
        q, r = _dense_divmod(list(self._coeffs), list(other._coeffs))
        if any(r):
            raise InexactDivisionError(f"{other} does not divide {self}")
        return LaurentPoly(q, self._low - other._low)

    def divides(self, other):
        if not self._coeffs:
            return not other._coeffs
        if not other._coeffs:
            return True
        _, r = _dense_divmod(list(other._coeffs), list(self._coeffs))
        return not any(r)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise DivisionByZeroError("division by zero")
            return self * (1 / c)
        if isinstance(other, LaurentPoly):
            return RationalFn(self, other)
        if isinstance(other, RationalFn):
            return RationalFn(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFn(LaurentPoly([other]), self)
        return NotImplemented

    # -- normal forms --------------------------------------------------
    def unit_normalize(self):
        """Return ``((c, k), q)`` with ``self == c*t^k*q``, q monic with lowest exponent 0."""
        if not self._coeffs:
            raise ZeroPolynomialError("cannot unit-normalize the zero polynomial")
        c = self._coeffs[-1]
        if c == 1:
            normed = LaurentPoly._raw(self._coeffs, 0)
        else:
            inv = 1 / c
            normed = LaurentPoly._raw(tuple(x * inv for x in self._coeffs), 0)
        return (c, self._low), normed

    def normalized(self):
        return self.unit_normalize()[1]

    def content_free(self):
        """Strip the power of t; result has nonzero constant term."""
        return LaurentPoly._raw(self._coeffs, 0)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _dense_divmod(a, b):
    """Polynomial long division on low-to-high coefficient lists."""
    b_len = len(b)
    if len(a) < b_len:
        return [], a
    lead_inv = 1 / b[-1]
    r = list(a)
    q = [_ZERO] * (len(a) - b_len + 1)
    for i in range(len(a) - b_len, -1, -1):
        c = r[i + b_len - 1]
        if c:
            c = c * lead_inv
            q[i] = c
            for j in range(b_len):
                r[i + j] -= c * b[j]
    return q, r[: b_len - 1]


ZERO = LaurentPoly()
ONE = LaurentPoly([1])
T = LaurentPoly([1], 1)


def poly(x):
    """Coerce ints, Fractions, strings and polynomials to LaurentPoly."""
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, str):
        from .parser import parse_poly

        return parse_poly(x)
    return LaurentPoly([x])


def involution(p):
    return p.involution()


def total_degree(p):
    return p.total_degree()


def unit_normalize(p):
    return p.unit_normalize()


def gcd(a, b):
    """Unit-normalized gcd in Q[t, t^-1]."""
    if a.is_zero() and b.is_zero():
        raise BothZeroError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    x, y = list(a.coeffs), list(b.coeffs)
    if len(x) < len(y):
        x, y = y, x
    while y:
        _, r = _dense_divmod(x, y)
        while r and not r[-1]:
            r.pop()
        # strip powers of t: they are units
        k = 0
        while k < len(r) and not r[k]:
            k += 1
        x, y = y, r[k:]
    return LaurentPoly(x).normalized()


def lcm(a, b):
    if a.is_zero() or b.is_zero():
        return ZERO
    return (a * b).exact_div(gcd(a, b)).normalized()


class RationalFn:
    """An element of Q(t) kept in lowest terms with a normalized denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = LaurentPoly.coerce(num)
        den = ONE if den is None else LaurentPoly.coerce(den)
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
        else:
            if not den.is_unit():
                g = gcd(num, den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            (c, k), den = den.unit_normalize()
            if c != 1:
                num = num * (1 / c)
            if k:
                num = num.shift(-k)
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFn):
            return x
        return cls(x)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def to_poly(self):
        if not self.den.is_one():
            raise InexactDivisionError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_unit(self):
        return self.num.is_unit() and self.den.is_one()

    def degree(self):
        """total_degree(num) - total_degree(den)."""
        if self.num.is_zero():
            raise ZeroPolynomialError("degree of zero rational function")
        return self.num.total_degree() - self.den.total_degree()

    def involution(self):
        return RationalFn(self.num.involution(), self.den.involution())

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        out = RationalFn.__new__(RationalFn)
        out.num, out.den, out._hash = -self.num, self.den, None
        return out

    def __add__(self, other):
        if not isinstance(other, RationalFn):
            if isinstance(other, (LaurentPoly, int, Fraction)):
                other = RationalFn(other)
            else:
                return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RationalFn):
            if isinstance(other, (LaurentPoly, int, Fraction)):
                other = RationalFn(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalFn):
            if isinstance(other, (LaurentPoly, int, Fraction)):
                other = RationalFn(other)
            else:
                return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZeroError("inverse of zero")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFn):
            if isinstance(other, (LaurentPoly, int, Fraction)):
                other = RationalFn(other)
            else:
                return NotImplemented
        if other.num.is_zero():
            raise DivisionByZeroError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFn(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFn.__new__(RationalFn)
        out.num, out.den, out._hash = self.num ** n, self.den ** n, None
        return out

    def __repr__(self):
        return f"RationalFn({format_ratfn(self)!r})"

    def __str__(self):
        return format_ratfn(self)


def ratfn(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, str):
        from .parser import parse_ratfn

        return parse_ratfn(x)
    return RationalFn(x)


def degree_ratfn(r):
    return r.degree()


class Ambiguity(enum.Enum):
    """Which units a comparison ignores."""

    PM_TK = "pm"  # +-t^k
    C_TK = "c"  # c*t^k, c in Q*

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        return {"pm": cls.PM_TK, "pm_tk": cls.PM_TK, "c": cls.C_TK, "c_tk": cls.C_TK}[s.lower()]


def unit_quotient(a, b):
    """Return (c, k) if a/b == c*t^k, else None."""
    a, b = RationalFn.coerce(a), RationalFn.coerce(b)
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomialError("unit comparison with zero")
    q = a / b
    if not q.is_unit():
        return None
    return q.num.coeffs[0], q.num.low


def unit_equal(a, b, mode=Ambiguity.PM_TK):
    """a/b == +-t^k (PM_TK) or a/b == c*t^k (C_TK)."""
    mode = Ambiguity.parse(mode)
    u = unit_quotient(a, b)
    if u is None:
        return False
    if mode is Ambiguity.C_TK:
        return True
    return abs(u[0]) == 1


def canonical_representative(r, mode=Ambiguity.PM_TK):
    """Deterministic representative of the unit class of ``r``.

    Numerator and denominator get lowest exponent 0; in C_TK mode the
    numerator is also made monic, in PM_TK mode only its sign is fixed.
    """
    mode = Ambiguity.parse(mode)
    r = RationalFn.coerce(r)
    if r.is_zero():
        raise ZeroPolynomialError("zero has no unit class")
    (c, _), num = r.num.unit_normalize()
    if mode is Ambiguity.PM_TK:
        num = num * abs(c)
    return RationalFn(num, r.den)


@dataclass(frozen=True, eq=False)
class UnitClass:
    """A nonzero element of Q(t) modulo +-t^k or c*t^k."""

    value: RationalFn
    ambiguity: Ambiguity = Ambiguity.PM_TK

    def __post_init__(self):
        v = RationalFn.coerce(self.value)
        if v.is_zero():
            raise ZeroPolynomialError("unit class of zero")
        object.__setattr__(self, "value", canonical_representative(v, self.ambiguity))

    def __eq__(self, other):
        if isinstance(other, UnitClass):
            mode = self.ambiguity if self.ambiguity == other.ambiguity else Ambiguity.C_TK
            return unit_equal(self.value, other.value, mode)
        if isinstance(other, (RationalFn, LaurentPoly, int, Fraction)):
            return unit_equal(self.value, other, self.ambiguity)
        return NotImplemented

    def __hash__(self):
        return hash(canonical_representative(self.value, Ambiguity.C_TK))

    def __str__(self):
        return format_ratfn(self.value)


# -- formatting ---------------------------------------------------------
def _format_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(c, k):
    """Format |c|*t^k with c > 0."""
    if k == 0:
        return _format_coeff(c)
    power = "t" if k == 1 else f"t^{k}"
    if c == 1:
        return power
    return f"{_format_coeff(c)}*{power}"


def format_poly(p):
    """Highest exponent first, explicit signs: ``t^6 - t^5 + t^3 - t + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.high, p.low - 1, -1):
        c = p.coeff(k)
        if not c:
            continue
        mono = _format_monomial(abs(c), k)
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
    return " ".join(parts)


def format_ratfn(r):
    if r.den.is_one():
        return format_poly(r.num)
    num = format_poly(r.num)
    if len(r.num.coeffs) > 1:
        num = f"({num})"
    return f"{num}/({format_poly(r.den)})"

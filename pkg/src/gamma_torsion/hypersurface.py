"""Alexander polynomial identities for hypersurfaces transversal at infinity.

The engine takes (n, d), the isolated singular points (local Alexander
polynomial and Milnor number) and optionally the global Alexander
polynomial delta_n and/or the intersection-form determinant, then
assembles h_n, psi_n, r_n, the error terms and det(phi), and reports every
identity, divisibility and degree check as a named diagnostic.
"""

from collections import Counter
from dataclasses import dataclass, field

from .cyclotomic import CyclotomicFactorization, cyclotomic, factor_cyclotomic
from .errors import (
    BoundViolationError,
    DivisibilityViolationError,
    IdentityViolationError,
    InputError,
    NegativeMuError,
    NotCyclotomicError,
)
from .laurent import (
    ONE,
    T,
    Ambiguity,
    LaurentPoly,
    RationalFn,
    canonical_representative,
    format_poly,
    format_ratfn,
    unit_equal,
    unit_quotient,
)
from .singularity import (
    BrieskornExponents,
    GlobalParams,
    brieskorn_charpoly,
    brieskorn_milnor_number,
    global_mu,
    homogeneous_h_list,
    top_h_polynomial,
    xi,
)
from .torsion import solve_det_phi

DATASET_VERSION = 1


@dataclass(frozen=True)
class SingularPointData:
    delta_p: LaurentPoly
    mu_p: int
    brieskorn: tuple = None

    def __post_init__(self):
        if self.mu_p < 1:
            raise InputError(f"Milnor number must be positive, got {self.mu_p}")
        if self.brieskorn is not None:
            exps = BrieskornExponents(tuple(self.brieskorn)).exponents
            object.__setattr__(self, "brieskorn", exps)
            if self.delta_p != brieskorn_charpoly(exps) or self.mu_p != brieskorn_milnor_number(exps):
                raise InputError(f"delta_p / mu_p inconsistent with Brieskorn exponents {exps}")

    @classmethod
    def from_brieskorn(cls, exponents):
        exps = BrieskornExponents(tuple(exponents)).exponents
        return cls(brieskorn_charpoly(exps), brieskorn_milnor_number(exps), exps)

    def to_dict(self):
        if self.brieskorn is not None:
            return {"brieskorn": list(self.brieskorn)}
        return {"delta_p": format_poly(self.delta_p), "mu_p": self.mu_p}


@dataclass(frozen=True)
class HypersurfaceData:
    params: GlobalParams
    singularities: tuple = ()
    delta_n: LaurentPoly = None
    claimed_det_phi: RationalFn = None
    name: str = ""

    @property
    def n(self):
        return self.params.n

    @property
    def d(self):
        return self.params.d

    @property
    def mu(self):
        return global_mu(self.params, [s.mu_p for s in self.singularities])

    def with_delta(self, delta_n):
        return HypersurfaceData(self.params, self.singularities, delta_n, self.claimed_det_phi, self.name)

    def with_det_phi(self, det_phi):
        return HypersurfaceData(self.params, self.singularities, self.delta_n, det_phi, self.name)

    @classmethod
    def from_dict(cls, obj):
        from .parser import parse_poly, parse_ratfn

        try:
            params = GlobalParams(int(obj["n"]), int(obj["d"]))
        except KeyError as exc:
            raise InputError(f"dataset is missing field {exc}") from exc
        except (TypeError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        sings = []
        for rec in obj.get("singularities", []):
            if "brieskorn" in rec:
                try:
                    sp = SingularPointData.from_brieskorn(rec["brieskorn"])
                except ValueError as exc:
                    raise InputError(str(exc)) from exc
                if "delta_p" in rec or "mu_p" in rec:
                    SingularPointData(
                        parse_poly(rec.get("delta_p", format_poly(sp.delta_p))),
                        int(rec.get("mu_p", sp.mu_p)),
                        sp.brieskorn,
                    )
                sings.append(sp)
            elif "delta_p" in rec and "mu_p" in rec:
                sings.append(SingularPointData(parse_poly(rec["delta_p"]), int(rec["mu_p"])))
            else:
                raise InputError(f"singularity record needs 'brieskorn' or 'delta_p' and 'mu_p': {rec}")
        delta = obj.get("delta_n")
        det = obj.get("det_phi")
        return cls(
            params,
            tuple(sings),
            parse_poly(delta) if delta is not None else None,
            parse_ratfn(det) if det is not None else None,
            obj.get("name", ""),
        )

    def to_dict(self):
        out = {
            "version": DATASET_VERSION,
            "n": self.n,
            "d": self.d,
            "singularities": [s.to_dict() for s in self.singularities],
        }
        if self.name:
            out["name"] = self.name
        if self.delta_n is not None:
            out["delta_n"] = format_poly(self.delta_n)
        if self.claimed_det_phi is not None:
            out["det_phi"] = format_ratfn(self.claimed_det_phi)
        return out


# -- dataset generators -----------------------------------------------
def smooth_dataset(n, d):
    """F_0 smooth: no singular points and delta_n = 1."""
    return HypersurfaceData(GlobalParams(n, d), (), ONE, None, f"smooth n={n} d={d}")


def homogeneous_dataset(n, d):
    """f = sum x_i^d: one Brieskorn point absorbing the whole Milnor budget, delta_n = h_n."""
    g = GlobalParams(n, d)
    point = SingularPointData.from_brieskorn((d,) * (n + 1))
    return HypersurfaceData(g, (point,), top_h_polynomial(g).to_poly(), None, f"homogeneous n={n} d={d}")


def homogeneous_delta_list(n, d):
    return [h.to_poly() for h in homogeneous_h_list(GlobalParams(n, d))]


# -- building blocks ----------------------------------------------------
def h_top(data):
    return top_h_polynomial(data.params)


def psi_top(data):
    """(t-1)^mu times the product of the local Alexander polynomials."""
    out = (T - 1) ** data.mu
    for s in data.singularities:
        out = out * s.delta_p
    return out


def corollary_lhs(data):
    """(t-1)^(mu + (-1)^(n+1)) (t^d - 1)^xi prod Delta_p, as a rational function."""
    out = RationalFn(T - 1) ** (data.mu + (-1) ** (data.n + 1)) * RationalFn(T ** data.d - 1) ** xi(data.params)
    for s in data.singularities:
        out = out * s.delta_p
    return out


def check_root_orders(delta, d):
    """Every root of delta is a d-th root of unity; returns the factorization."""
    try:
        fac = factor_cyclotomic(delta)
    except NotCyclotomicError as exc:
        raise DivisibilityViolationError(
            f"delta_n has a non-cyclotomic factor {format_poly(exc.residual)}", residual=exc.residual
        ) from exc
    bad = [m for m in fac.factors if d % m]
    if bad:
        raise DivisibilityViolationError(
            f"delta_n has roots of order {bad} not dividing d={d}", orders=bad
        )
    return fac


def _require_delta(data):
    if data.delta_n is None:
        raise InputError("dataset has no delta_n")
    if data.delta_n.is_zero():
        raise InputError("delta_n must be nonzero")
    return data.delta_n


def _poly_quotient(num, den, what):
    q = RationalFn.coerce(num) / RationalFn.coerce(den)
    if not q.is_polynomial():
        raise DivisibilityViolationError(f"{what}: {format_ratfn(q)} is not a Laurent polynomial")
    return q.num


def error_terms(data):
    """(phi_1, phi_2) = (h_n / delta_n, psi_n / delta_n)."""
    delta = _require_delta(data)
    check_root_orders(delta, data.d)
    phi1 = _poly_quotient(h_top(data), delta, "delta_n does not divide h_n")
    phi2 = _poly_quotient(psi_top(data), delta, "delta_n does not divide psi_n")
    return RationalFn(phi1.normalized()), RationalFn(phi2.normalized())


def r_top(data):
    """r_n = conj(h_n) psi_n = h_n conj(psi_n), compared modulo c t^k."""
    h = h_top(data)
    psi = RationalFn(psi_top(data))
    a = h.involution() * psi
    b = h * psi.involution()
    if not unit_equal(a, b, Ambiguity.C_TK):
        raise IdentityViolationError(f"conj(h) psi = {a} and h conj(psi) = {b} differ by a non-unit")
    return canonical_representative(a, Ambiguity.C_TK)


def det_phi(data):
    """h_n psi_n / delta_n^2, unit-normalized; cross-checked against r_n / (delta_n conj(delta_n))."""
    delta = _require_delta(data)
    value = _poly_quotient(h_top(data) * psi_top(data), delta * delta, "delta_n^2 does not divide h_n psi_n")
    via_r = RationalFn.coerce(r_top(data)) / (delta * delta.involution())
    if not unit_equal(value, via_r, Ambiguity.PM_TK):
        raise IdentityViolationError(f"h psi / delta^2 = {value} but r_n / (delta conj(delta)) = {via_r}")
    return RationalFn(value.normalized())


def _sqrt_cyclotomic(p):
    fac = factor_cyclotomic(p)
    if any(e % 2 for e in fac.factors.values()):
        return None
    c, k = fac.unit
    if c < 0 or k % 2:
        return None
    root = ONE
    for m, e in fac.factors.items():
        root = root * cyclotomic(m) ** (e // 2)
    return root


def solve_delta(data):
    """delta_n from the claimed determinant: the square root of lhs / det(phi)."""
    if data.claimed_det_phi is None:
        raise InputError("dataset has no det_phi to solve from")
    sq = corollary_lhs(data) / data.claimed_det_phi
    if not sq.is_polynomial():
        raise DivisibilityViolationError(f"lhs / det_phi = {sq} is not a polynomial")
    try:
        root = _sqrt_cyclotomic(sq.num)
    except NotCyclotomicError as exc:
        raise DivisibilityViolationError(f"lhs / det_phi has non-cyclotomic factor {exc.residual}") from exc
    if root is None:
        raise DivisibilityViolationError(f"lhs / det_phi = {sq} is not a square")
    return root


def delta_lower_bound(data):
    """deg delta_n >= (d-1)^(n+1) - d mu."""
    return (data.d - 1) ** (data.n + 1) - data.d * data.mu


def dimension_bookkeeping(data, deg_phi1, deg_phi2):
    """(dim H_{n+1} of the homogenized Milnor fiber, dim gap) from the error-term degrees."""
    dmu = data.d * data.mu
    if deg_phi1 > dmu:
        raise BoundViolationError(f"deg phi_1 = {deg_phi1} exceeds d*mu = {dmu}")
    if deg_phi2 > deg_phi1:
        raise BoundViolationError(f"deg phi_2 = {deg_phi2} exceeds deg phi_1 = {deg_phi1}")
    return dmu - deg_phi1, deg_phi1 - deg_phi2


# -- boundary manifold --------------------------------------------------
@dataclass(frozen=True)
class BoundaryProfile:
    r: tuple
    tau_boundary: RationalFn
    tau_X: RationalFn
    det_phi: RationalFn
    det_phi_from_torsion: object

    @property
    def consistent(self):
        return self.det_phi_from_torsion == self.det_phi


def boundary_profile(data, delta_list):
    """r_0..r_2n from delta_0..delta_n and det(phi), plus the boundary torsion."""
    n = data.n
    deltas = [LaurentPoly.coerce(x) if not isinstance(x, str) else _parse_poly(x) for x in delta_list]
    if len(deltas) != n + 1:
        raise InputError(f"need delta_0..delta_{n}, got {len(deltas)} polynomials")
    if any(x.is_zero() for x in deltas):
        raise InputError("Alexander polynomials must be nonzero")
    dphi = det_phi(data.with_delta(deltas[n]) if data.delta_n is None else data)
    r = []
    for i in range(2 * n + 1):
        if i < n:
            r.append(RationalFn(deltas[i]))
        elif i > n:
            r.append(RationalFn(deltas[2 * n - i].involution()))
        else:
            r.append(RationalFn(deltas[n] * deltas[n].involution()) * dphi)
    tau_b = RationalFn(ONE)
    for i, ri in enumerate(r):
        tau_b = tau_b * ri if i % 2 else tau_b / ri
    tau_x = RationalFn(ONE)
    for i, di in enumerate(deltas):
        tau_x = tau_x * di if i % 2 else tau_x / di
    recovered = solve_det_phi(tau_x, tau_b, n + 1)
    return BoundaryProfile(tuple(r), tau_b, tau_x, dphi, recovered)


def _parse_poly(s):
    from .parser import parse_poly

    return parse_poly(s)


# -- the report ---------------------------------------------------------
PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class IdentityReport:
    name: str = ""
    values: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        status = SKIP if ok is None else (PASS if ok else FAIL)
        self.checks.append(Check(name, status, detail))
        return ok

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def ok(self):
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "values": dict(sorted(self.values.items())),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_text(self, color=False):
        lines = [f"hypersurface report: {self.name}" if self.name else "hypersurface report"]
        width = max((len(k) for k in self.values), default=0)
        for k in sorted(self.values):
            lines.append(f"  {k:<{width}} = {self.values[k]}")
        lines.append("checks:")
        for c in self.checks:
            tag = c.status.upper()
            if color:
                code = {"PASS": "32", "FAIL": "31", "SKIP": "33"}[tag]
                tag = f"\x1b[{code}m{tag}\x1b[0m"
            line = f"  [{tag}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        lines.append("result: " + ("all checks pass" if self.ok else f"{len(self.failures)} check(s) failed"))
        return "\n".join(lines)


def format_residual(q):
    """Signed cyclotomic exponents of a rational function, e.g. ``Φ3^-1``."""
    q = RationalFn.coerce(q)
    counts = Counter()
    parts = []
    for poly, sign in ((q.num, 1), (q.den, -1)):
        try:
            fac = factor_cyclotomic(poly)
        except NotCyclotomicError as exc:
            parts.append(f"({format_poly(exc.residual)})^{sign}")
            fac = exc.partial or CyclotomicFactorization()
        for m, e in fac.factors.items():
            counts[m] += sign * e
    u = unit_quotient(q, canonical_representative(q, Ambiguity.C_TK))
    out = []
    if u is not None and (u[0] != 1):
        out.append(str(u[0]))
    for m in sorted(counts, reverse=True):
        e = counts[m]
        if e:
            out.append(f"Φ{m}" if e == 1 else f"Φ{m}^{e}")
    return " * ".join(out + parts) or "1"


def _deg(x):
    return RationalFn.coerce(x).degree()


def verify_corollary(data, mode=Ambiguity.PM_TK):
    """Run every identity and estimate for an isolated-singularity dataset."""
    mode = Ambiguity.parse(mode)
    g = data.params
    rep = IdentityReport(name=data.name)
    v = rep.values
    v["n"], v["d"] = g.n, g.d
    v["sum_mu_p"] = sum(s.mu_p for s in data.singularities)
    try:
        mu = data.mu
    except NegativeMuError as exc:
        rep.add("global_mu_nonnegative", False, str(exc))
        return rep
    rep.add("global_mu_nonnegative", True, f"mu = {mu}")
    v["mu"] = mu
    v["xi"] = xi(g)
    h = h_top(data)
    psi = psi_top(data)
    v["h_n"] = format_ratfn(h)
    v["psi_n"] = format_poly(psi)
    for k, s in enumerate(data.singularities):
        try:
            v[f"delta_p[{k}]"] = f"{factor_cyclotomic(s.delta_p)} = {format_poly(s.delta_p)}"
        except NotCyclotomicError:
            v[f"delta_p[{k}]"] = format_poly(s.delta_p)
    lhs = corollary_lhs(data)
    rep.add("lhs_equals_h_psi", lhs == h * psi, "(t-1)^(mu+(-1)^(n+1)) (t^d-1)^xi prod Delta_p vs h_n psi_n")

    try:
        r_n = r_top(data)
        v["r_n"] = format_ratfn(r_n)
        rep.add("r_n_symmetry", True, "conj(h_n) psi_n = h_n conj(psi_n) up to c t^k")
    except IdentityViolationError as exc:
        r_n = None
        rep.add("r_n_symmetry", False, str(exc))

    bound = delta_lower_bound(data)
    v["delta_n_lower_bound"] = bound

    delta = data.delta_n
    claimed = data.claimed_det_phi
    v["delta_n_source"] = "input" if delta is not None else ("solved" if claimed is not None else "unknown")
    v["det_phi_source"] = "input" if claimed is not None else ("solved" if delta is not None else "unknown")
    if delta is None and claimed is not None:
        try:
            delta = solve_delta(data)
            rep.add("delta_n_solvable", True, "lhs / det_phi is a square of a cyclotomic product")
        except DivisibilityViolationError as exc:
            rep.add("delta_n_solvable", False, str(exc))
    if delta is None:
        for name in ("identity", "root_orders", "degree_bounds", "parity", "delta_n_bound"):
            rep.add(name, None, "needs delta_n or det_phi")
        return rep
    v["delta_n"] = format_poly(delta)

    try:
        check_root_orders(delta, g.d)
        rep.add("root_orders", True, f"roots of delta_n have order dividing d={g.d}")
    except DivisibilityViolationError as exc:
        rep.add("root_orders", False, str(exc))

    rep.add("delta_n_bound", delta.total_degree() >= bound, f"deg delta_n = {delta.total_degree()} >= {bound}")

    data_d = data.with_delta(delta)
    phi1 = phi2 = None
    try:
        phi1 = _poly_quotient(h, delta, "delta_n does not divide h_n").normalized()
        phi2 = _poly_quotient(psi, delta, "delta_n does not divide psi_n").normalized()
        rep.add("delta_n_divides", True, "delta_n | h_n and delta_n | psi_n")
        v["phi_1"] = format_poly(phi1)
        v["phi_2"] = format_poly(phi2)
    except DivisibilityViolationError as exc:
        rep.add("delta_n_divides", False, str(exc))

    computed = None
    try:
        computed = det_phi(data_d)
        rep.add("det_phi_routes_agree", True, "h psi / delta^2 = r_n / (delta conj(delta)) up to +-t^k")
    except (DivisibilityViolationError, IdentityViolationError) as exc:
        rep.add("det_phi_routes_agree", False, str(exc))
    if r_n is not None:
        phi = RationalFn.coerce(r_n) / (delta * delta.involution())
        v["phi"] = format_ratfn(canonical_representative(phi, Ambiguity.C_TK))

    target = claimed if claimed is not None else computed
    if claimed is not None:
        residual = lhs / (RationalFn(delta * delta) * claimed)
        same = unit_equal(residual, ONE, mode)
        detail = f"residual {format_residual(residual)}"
        rep.add("identity", same, detail)
        rep.add("identity_c_tk", unit_equal(residual, ONE, Ambiguity.C_TK), detail)
        v["det_phi_claimed"] = format_ratfn(claimed)
    elif computed is not None:
        rep.add("identity", True, "det_phi solved from the identity")
    else:
        rep.add("identity", False, "identity has no polynomial solution for det_phi")

    if computed is not None:
        v["det_phi"] = format_ratfn(computed)
        try:
            v["det_phi_factored"] = str(factor_cyclotomic(computed.num))
        except NotCyclotomicError:
            pass
    if target is None:
        return rep

    deg_det = _deg(target)
    v["deg_det_phi"] = deg_det
    rep.add("parity", deg_det % 2 == 0, f"deg det_phi = {deg_det} (isolated singularities only)")
    dmu = g.d * mu
    rep.add("det_phi_bound", deg_det <= 2 * dmu, f"deg det_phi = {deg_det} <= 2 d mu = {2 * dmu}")
    if phi1 is not None:
        d1, d2 = phi1.total_degree(), phi2.total_degree()
        v["deg_phi_1"], v["deg_phi_2"] = d1, d2
        rep.add("degree_bounds", d2 <= d1 <= dmu, f"deg phi_2 = {d2} <= deg phi_1 = {d1} <= d mu = {dmu}")
        rep.add("degree_sum", deg_det == d1 + d2, f"deg det_phi = {deg_det} vs deg phi_1 + deg phi_2 = {d1 + d2}")
        try:
            dim_h, gap = dimension_bookkeeping(data_d, d1, d2)
            v["dim_H_n+1"], v["dim_gap"] = dim_h, gap
            rep.add("dimension_gap_zero", gap == 0, f"deg phi_1 - deg phi_2 = {gap}")
        except BoundViolationError as exc:
            rep.add("dimension_gap_zero", False, str(exc))
    return rep


def solve(data):
    """Fill in whichever of delta_n / det_phi is missing."""
    if data.delta_n is not None:
        return data.with_det_phi(det_phi(data))
    if data.claimed_det_phi is not None:
        return data.with_delta(solve_delta(data))
    raise InputError("solve needs delta_n or det_phi")

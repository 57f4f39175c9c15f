"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines, or execute this
file directly for a compact summary.  All comparisons are exact.
"""

import json
import os
import random
import sys
import tempfile
import time
from io import StringIO

import pytest
from oracles import minor_gcd
from strategies import random_matrix, random_torsion_complex

from gamma_torsion.chain import BasedChainComplex, HomologyProfile, covering_dim, homology, local_system_dim
from gamma_torsion.cli import run
from gamma_torsion.cyclotomic import cyclotomic
from gamma_torsion.errors import NonIntegerError
from gamma_torsion.hypersurface import (
    HypersurfaceData,
    SingularPointData,
    boundary_profile,
    det_phi,
    homogeneous_dataset,
    homogeneous_delta_list,
    smooth_dataset,
    verify_corollary,
)
from gamma_torsion.io import bundled_dataset
from gamma_torsion.laurent import ONE, T, Ambiguity, RationalFn, unit_equal
from gamma_torsion.linalg import determinant, smith_normal_form
from gamma_torsion.singularity import (
    GlobalParams,
    brieskorn_charpoly,
    chi_milnor_fiber,
    global_mu,
    xi,
)
from gamma_torsion.torsion import reidemeister_torsion, solve_det_phi, torsion_from_orders

SEED = 20240607
QUARTIC_DET = (T - 1) ** 4 * (T**4 - 1) ** 2 * (T**4 - T**2 + 1) * (T**2 - T + 1)


def quartic():
    return HypersurfaceData(GlobalParams(1, 4), (SingularPointData.from_brieskorn((3, 4)),), ONE)


def c01_quartic_det_phi():
    got = det_phi(quartic())
    return unit_equal(got, QUARTIC_DET, Ambiguity.PM_TK), f"det phi = {got}"


def c02_brieskorn_34():
    p = brieskorn_charpoly((3, 4))
    mu = global_mu(GlobalParams(1, 4), [6])
    ok = p == cyclotomic(12) * cyclotomic(6) and p.total_degree() == 6 and mu == 3
    return ok, f"charpoly = {p}, mu = {mu}"


def c03_smooth_family():
    bad = []
    for n in range(1, 4):
        for d in range(2, 6):
            want = RationalFn(T - 1) ** ((d - 1) ** (n + 1) + (-1) ** (n + 1)) * RationalFn(T**d - 1) ** xi(
                GlobalParams(n, d)
            )
            if not unit_equal(det_phi(smooth_dataset(n, d)), want, Ambiguity.PM_TK):
                bad.append((n, d))
    return not bad, f"12 (n, d) pairs, mismatches {bad}"


def c04_torsion_equals_order_product():
    rng = random.Random(SEED)
    count, bad = 0, 0
    while count < 200:
        C, _ = random_torsion_complex(rng)
        if len(C.lengths) > 5 or max(C.lengths) > 5:
            continue
        tau = reidemeister_torsion(C)
        if not unit_equal(tau.exact, torsion_from_orders(homology(C)), Ambiguity.PM_TK):
            bad += 1
        count += 1
    return bad == 0, f"{count} random complexes, {bad} mismatches"


def c05_circle():
    C = BasedChainComplex.from_boundaries([[[T - 1]]])
    delta0 = homology(C).delta(0)
    tau = reidemeister_torsion(C)
    ok = delta0 == T - 1 and tau == RationalFn(ONE, T - 1)
    return ok, f"delta_0 = {delta0}, tau = {tau}"


def c06_snf_certificates():
    rng = random.Random(SEED)
    bad = 0
    for _ in range(200):
        A = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        S = smith_normal_form(A)
        ok = S.U @ A @ S.V == S.D
        ok &= unit_equal(RationalFn.coerce(determinant(S.U)), ONE, Ambiguity.C_TK)
        ok &= unit_equal(RationalFn.coerce(determinant(S.V)), ONE, Ambiguity.C_TK)
        facs = S.invariant_factors
        ok &= all(b.is_zero() or a.divides(b) for a, b in zip(facs, facs[1:]))
        prod = ONE
        for k, f in enumerate(facs, start=1):
            prod = prod * f
            g = minor_gcd(A.to_rows(), k)
            ok &= (g.is_zero() and prod.is_zero()) or (not g.is_zero() and unit_equal(prod, g, Ambiguity.C_TK))
        bad += not ok
    return bad == 0, f"200 random matrices, {bad} failures"


def c07_integrality_grid():
    errors = 0
    for n in range(1, 7):
        for d in range(2, 10):
            g = GlobalParams(n, d)
            try:
                xi(g)
            except NonIntegerError:
                errors += 1
            if chi_milnor_fiber(g) % d:
                errors += 1
    return errors == 0, f"48 (n, d) pairs, {errors} NON_INTEGER"


def c08_boundary_torsion():
    notes = []
    ok = True
    for n, d in [(1, 3), (2, 2), (2, 3)]:
        g = GlobalParams(n, d)
        bp = boundary_profile(homogeneous_dataset(n, d), homogeneous_delta_list(n, d))
        want = RationalFn(T**d - 1) ** (-2 * chi_milnor_fiber(g) // d)
        this = unit_equal(bp.tau_boundary, want, Ambiguity.PM_TK)
        this &= solve_det_phi(bp.tau_X, bp.tau_boundary, n + 1) == ONE
        ok &= this
        notes.append(f"({n},{d}) tau = {bp.tau_boundary}")
    return ok, "; ".join(notes)


def c09_degree_bounds_and_parity():
    rep = verify_corollary(quartic())
    v = rep.values
    ok = v["deg_det_phi"] % 2 == 0
    ok &= v["deg_det_phi"] <= 2 * 4 * v["mu"] == 24
    ok &= v["deg_det_phi"] == v["deg_phi_1"] + v["deg_phi_2"]
    ok &= v["deg_phi_2"] <= v["deg_phi_1"] <= 12
    ok &= all(rep.check(n).status == "pass" for n in ("parity", "det_phi_bound", "degree_bounds", "degree_sum"))
    return ok, f"deg det phi = {v['deg_det_phi']}, deg phi_1 = {v['deg_phi_1']}, deg phi_2 = {v['deg_phi_2']}"


def c10_cubic_surface_bound():
    rep = verify_corollary(bundled_dataset("cubic_surface_3A2"))
    bound = rep.values["delta_n_lower_bound"]
    return bound == 2 and rep.values["mu"] == 2, f"deg delta_2 >= {bound}"


def c11_wang_covering():
    a = local_system_dim(HomologyProfile.from_factors([[], ["(t - 1)^2*(t^2 + 1)"]]), 4, 1)
    b = covering_dim(HomologyProfile.from_factors([[], ["t^5 - 1"]]), 5, 1)
    return a == 1 and b == 5, f"local_system_dim = {a}, covering_dim = {b}"


def c12_fault_injection():
    tampered = quartic().with_det_phi(RationalFn(QUARTIC_DET * cyclotomic(3)))
    rep = verify_corollary(tampered)
    ident = rep.check("identity")
    ok = not rep.ok and ident.status == "fail" and "Φ3" in ident.detail
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(tampered.to_dict(), fh)
    try:
        code = run(["hypersurface", "verify", fh.name], stdout=StringIO(), stderr=StringIO())
    finally:
        os.unlink(fh.name)
    return ok and code == 1, f"{ident.detail}; exit code {code}"


CRITERIA = [
    (1, "quartic det phi", c01_quartic_det_phi),
    (2, "Brieskorn (3,4) charpoly and mu", c02_brieskorn_34),
    (3, "smooth family det phi", c03_smooth_family),
    (4, "torsion equals order product", c04_torsion_equals_order_product),
    (5, "circle calibration", c05_circle),
    (6, "SNF certificates", c06_snf_certificates),
    (7, "integrality grid", c07_integrality_grid),
    (8, "homogeneous boundary torsion", c08_boundary_torsion),
    (9, "quartic degree bounds and parity", c09_degree_bounds_and_parity),
    (10, "cubic surface delta bound", c10_cubic_surface_bound),
    (11, "Wang and covering dimensions", c11_wang_covering),
    (12, "fault injection", c12_fault_injection),
]


def _line(num, name, ok, detail, seconds):
    return f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {name} ({seconds:.2f}s): {detail}"


_timings = {}
# collected by the terminal-summary hook in conftest.py
REPORT_LINES = []


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, name, fn):
    start = time.perf_counter()
    ok, detail = fn()
    _timings[num] = time.perf_counter() - start
    line = _line(num, name, ok, detail, _timings[num])
    REPORT_LINES.append(line)
    print("\n" + line)
    assert ok, detail


def test_total_runtime_under_ten_seconds():
    if len(_timings) < len(CRITERIA):
        pytest.skip("needs the full acceptance run")
    total = sum(_timings.values())
    REPORT_LINES.append(f"acceptance total {total:.2f}s")
    assert total < 10


def main():
    failures = 0
    total = 0.0
    for num, name, fn in CRITERIA:
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # report, keep going
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        took = time.perf_counter() - start
        total += took
        failures += not ok
        print(_line(num, name, ok, detail, took))
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria pass in {total:.2f}s")
    return 1 if failures or total >= 10 else 0


if __name__ == "__main__":
    sys.exit(main())

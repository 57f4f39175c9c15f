import pytest
from strategies import random_matrix

from gamma_torsion.chain import (
    BasedChainComplex,
    HomologyProfile,
    ModuleDecomposition,
    covering_dim,
    direct_sum,
    elementary,
    homology,
    is_rationally_acyclic,
    jordan_count,
    local_system_dim,
    validate,
)
from gamma_torsion.cyclotomic import cyclotomic
from gamma_torsion.errors import NotAComplexError, NotCyclotomicError, NotTorsionError, ShapeMismatchError
from gamma_torsion.laurent import ONE, T
from gamma_torsion.linalg import Matrix, rank

CIRCLE = BasedChainComplex.from_boundaries([[[T - 1]]])


def test_validate():
    assert validate(CIRCLE)
    with pytest.raises(NotAComplexError) as info:
        validate(BasedChainComplex.from_boundaries([[[1]], [[1]]]))
    assert info.value.details["degree"] == 2
    assert validate(BasedChainComplex([], []))
    with pytest.raises(ShapeMismatchError):
        validate(BasedChainComplex([1, 2], [Matrix.zeros(1, 1)]))


def test_circle_homology():
    prof = homology(CIRCLE)
    assert prof.module(0) == ModuleDecomposition(0, (T - 1,))
    assert prof.module(1).is_zero()
    assert prof.alexander == (T - 1, ONE)


def test_zero_map_gives_free_modules():
    C = BasedChainComplex.from_boundaries([[[0]]])
    prof = homology(C)
    assert [m.free_rank for m in prof.modules] == [1, 1]
    assert prof.alexander == (ONE, ONE)
    assert not is_rationally_acyclic(C)


def test_diagonal_complex():
    C = BasedChainComplex.from_boundaries([Matrix.diagonal([T - 1, T - 2])])
    prof = homology(C)
    assert prof.delta(0) == (T - 1) * (T - 2)
    assert prof.module(1).is_zero()
    assert is_rationally_acyclic(C) and is_rationally_acyclic(CIRCLE)


def test_module_decomposition_rejects_bad_factors():
    with pytest.raises(ValueError):
        ModuleDecomposition(0, (ONE,))
    with pytest.raises(ValueError):
        ModuleDecomposition(0, (T + 1, T - 1))


def test_jordan_count():
    assert jordan_count(ModuleDecomposition(0, (T - 1, (T - 1) ** 2)), 1) == 2
    assert jordan_count(ModuleDecomposition(0, (cyclotomic(12) * cyclotomic(6),)), 12) == 1
    assert jordan_count(ModuleDecomposition(0, (T**4 - 1,)), 3) == 0
    with pytest.raises(NotCyclotomicError):
        jordan_count(ModuleDecomposition(0, (T - 2,)), 1)


def test_local_system_dim():
    prof = HomologyProfile.from_factors([["t^2 - 1"], ["t - 1", "(t - 1)*(t + 1)"]])
    assert local_system_dim(prof, 1, 1) == 3
    assert local_system_dim(HomologyProfile(), 3, 2) == 0
    prof = HomologyProfile.from_factors([[], ["(t - 1)^2*(t^2 + 1)"]])
    assert local_system_dim(prof, 4, 1) == 1
    with pytest.raises(NotTorsionError):
        local_system_dim(HomologyProfile.from_factors([[], []], [1, 0]), 1, 1)


def test_covering_dim():
    assert covering_dim(HomologyProfile(), 5, 1) == 0
    assert covering_dim(HomologyProfile.from_factors([[], ["t - 1"]]), 5, 1) == 1
    assert covering_dim(HomologyProfile.from_factors([[], ["t^5 - 1"]]), 5, 1) == 5


def test_elementary_and_direct_sum():
    E = elementary(2, T + 1)
    assert E.lengths == (0, 1, 1)
    S = direct_sum(CIRCLE, E)
    assert S.lengths == (1, 2, 1)
    validate(S)
    assert homology(S).alexander == (T - 1, T + 1, ONE)


def _random_complex(rng):
    """d_2 = X Y with d_1 = Z chosen so that d_1 X = 0."""
    # kernel-friendly construction: d_1 = [a, b], d_2 columns multiples of (b, -a)
    a, b = random_matrix(rng, 1, 2).to_rows()[0]
    cols = rng.randint(1, 3)
    coeffs = random_matrix(rng, 1, cols).to_rows()[0]
    d1 = Matrix.from_rows([[a, b]])
    d2 = Matrix.from_rows([[b * c for c in coeffs], [-a * c for c in coeffs]], cols)
    return BasedChainComplex([1, 2, cols], [d1, d2])


def test_euler_characteristic_and_rank_nullity(rng):
    for _ in range(30):
        C = _random_complex(rng)
        validate(C)
        prof = homology(C)
        assert C.euler_characteristic() == sum((-1) ** i * m.free_rank for i, m in enumerate(prof.modules))
        for i, n in enumerate(C.lengths):
            expected = n - rank(C.boundary(i)) - rank(C.boundary(i + 1))
            assert prof.module(i).free_rank == expected


def test_alexander_invariant_under_unit_basis_change(rng):
    d1 = Matrix.from_rows([[T - 1, (T - 1) * (T + 1)]])
    base = homology(BasedChainComplex([1, 2], [d1])).alexander
    for _ in range(10):
        c = random_matrix(rng, 1, 1).to_rows()[0][0]
        P = Matrix.from_rows([[1, c], [0, -(T ** rng.randint(-2, 2))]])
        assert homology(BasedChainComplex([1, 2], [d1 @ P])).alexander == base


def test_torsion_degree_accounting():
    M = ModuleDecomposition(0, ((T - 1), (T - 1) ** 2 * cyclotomic(4)))
    counted = sum(cyclotomic(m).total_degree() * jordan_count(M, m) for m in (1, 4))
    assert counted <= M.order().total_degree() == 5

"""Reidemeister torsion of based chain complexes over Q(t).

Orientation convention: for bases a, b of the same space, ``[a|b]`` is the
determinant of the matrix expressing the vectors of b in the basis a.  With
this reading the circle complex d_1 = (t - 1) has torsion 1/(t - 1), which
agrees with the alternating product of Alexander polynomials.  Concretely

    tau = prod_i det(M_i) ** (-1) ** (i + 1)

where the columns of M_i are b_i, h_i and the lifts of b_{i-1}, written in
the coordinates of c_i.
"""

from dataclasses import dataclass

from .chain import direct_sum, elementary, validate
from .errors import (
    DegenerateBasisError,
    MissingHomologyBasisError,
    NotTorsionError,
    ZeroInputError,
)
from .laurent import ONE, ZERO, Ambiguity, RationalFn, UnitClass, unit_equal
from .linalg import Matrix, column_space_basis, determinant, solve


@dataclass(frozen=True)
class TorsionValue:
    """Torsion as a unit class (+-t^k), keeping the exact representative computed."""

    value: UnitClass
    exact: RationalFn

    def __eq__(self, other):
        if isinstance(other, TorsionValue):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)


def _vectors(spec, degree):
    if not spec:
        return []
    vecs = spec.get(degree, spec.get(str(degree), []))
    return [list(v) for v in vecs]


def _boundary_bases(C, orders=None):
    """column_space_basis of each d_{i+1}, as images in C_i."""
    bases = []
    for i in range(len(C.lengths)):
        order = None if orders is None else orders.get(i + 1)
        bases.append(column_space_basis(C.boundary(i + 1), order))
    return bases


def _homology_dims(C, bases):
    return [n - len(bases[i]) - (len(bases[i - 1]) if i else 0) for i, n in enumerate(C.lengths)]


def _check_h(C, h, dims):
    for i, k in enumerate(dims):
        got = len(_vectors(h, i))
        if got < k:
            raise MissingHomologyBasisError(
                f"H_{i} tensor Q(t) has dimension {k}; {got} homology lift(s) supplied", degree=i
            )
        if got > k:
            raise DegenerateBasisError(
                f"H_{i} tensor Q(t) has dimension {k}; {got} homology lift(s) supplied", degree=i
            )
        for v in _vectors(h, i):
            if len(v) != C.lengths[i]:
                raise DegenerateBasisError(f"homology lift in degree {i} has wrong length", degree=i)


def _unit_vector(n, j):
    return [ONE if k == j else ZERO for k in range(n)]


def _transition(C, bases, h, i):
    """Columns b_i, h_i, lift(b_{i-1}) as an n x n matrix in standard coordinates."""
    n = C.lengths[i]
    cols = [list(v) for v in bases[i].columns]
    cols += _vectors(h, i)
    if i:
        cols += [_unit_vector(n, j) for j in bases[i - 1].indices]
    return Matrix.from_columns(cols, n) if cols else Matrix(n, 0, [])


def _as_matrix(x, n):
    if x is None:
        return None
    if isinstance(x, Matrix):
        return x
    # list of basis vectors (columns)
    return Matrix.from_columns(x, n)


def torsion_exact(C, h=None, c=None, orders=None):
    """The exact value of prod [b_i h_i b^_{i-1} | c_i]^((-1)^i) in Q(t).

    ``h`` maps degree -> list of homology lift vectors; ``c`` maps degree ->
    basis of C_i (Matrix with basis vectors as columns, or a list of
    vectors); ``orders`` maps boundary degree -> column scan order used to
    pick b_i.
    """
    validate(C)
    bases = _boundary_bases(C, orders)
    dims = _homology_dims(C, bases)
    _check_h(C, h, dims)
    tau = RationalFn(ONE)
    for i, n in enumerate(C.lengths):
        M = _transition(C, bases, h, i)
        if M.cols != n:
            raise DegenerateBasisError(f"degree {i}: {M.cols} vectors for a rank {n} module", degree=i)
        det = RationalFn.coerce(determinant(M))
        if not det:
            raise DegenerateBasisError(f"b, h, b^ do not form a basis of C_{i}", degree=i)
        basis_i = _as_matrix((c or {}).get(i, (c or {}).get(str(i))), n)
        if basis_i is not None:
            cdet = RationalFn.coerce(determinant(basis_i))
            if not cdet:
                raise DegenerateBasisError(f"supplied basis of C_{i} is singular", degree=i)
            det = det / cdet
        tau = tau * det if i % 2 else tau / det
    return tau


def reidemeister_torsion(C, h=None, c=None, orders=None):
    """Torsion of the based complex, as a class modulo +-t^k."""
    exact = torsion_exact(C, h, c, orders)
    return TorsionValue(UnitClass(exact, Ambiguity.PM_TK), exact)


def torsion_from_orders(profile):
    """prod_i delta_{2i+1} / delta_{2i} for a profile with torsion homology."""
    for i, mod in enumerate(profile.modules):
        if not mod.is_torsion():
            raise NotTorsionError(f"H_{i} has free rank {mod.free_rank}; the order formula needs torsion modules")
    tau = RationalFn(ONE)
    for i, delta in enumerate(profile.alexander):
        tau = tau * delta if i % 2 else tau / delta
    return tau


def basis_change_factor(C, old_h=None, new_h=None, old_c=None, new_c=None):
    """Exact ratio tau(new) / tau(old) from the transition determinants.

    Equals prod_i ([h'_i|h_i] / [c'_i|c_i]) ** (-1)**i with the bracket
    convention of this module.
    """
    validate(C)
    bases = _boundary_bases(C)
    dims = _homology_dims(C, bases)
    _check_h(C, old_h, dims)
    _check_h(C, new_h, dims)
    factor = RationalFn(ONE)
    for i, n in enumerate(C.lengths):
        ratio = RationalFn(ONE)
        k = dims[i]
        if k:
            b = [list(v) for v in bases[i].columns]
            old = _vectors(old_h, i)
            new = _vectors(new_h, i)
            A = Matrix.from_columns(b + old, n)
            try:
                X = solve(A, Matrix.from_columns(new, n))
            except ValueError as exc:
                raise DegenerateBasisError(f"homology lifts in degree {i} are not cycles spanning H_{i}", degree=i) from exc
            # coordinates of the new classes in the old homology basis
            T = X.submatrix(range(len(b), len(b) + k), range(k))
            det_t = RationalFn.coerce(determinant(T))
            if not det_t:
                raise DegenerateBasisError(f"new homology lifts in degree {i} are dependent", degree=i)
            ratio = ratio / det_t
        oc = _as_matrix((old_c or {}).get(i, (old_c or {}).get(str(i))), n) or Matrix.identity(n)
        nc = _as_matrix((new_c or {}).get(i, (new_c or {}).get(str(i))), n) or Matrix.identity(n)
        if n:
            try:
                S = solve(oc, nc)
            except ValueError as exc:
                raise DegenerateBasisError(f"chain basis of C_{i} is singular", degree=i) from exc
            det_s = RationalFn.coerce(determinant(S))
            if not det_s:
                raise DegenerateBasisError(f"new chain basis of C_{i} is singular", degree=i)
            ratio = ratio * det_s
        factor = factor * ratio if i % 2 == 0 else factor / ratio
    return factor


def solve_det_phi(tau_X, tau_boundary, m):
    """det of the intersection form from tau(dX) = tau(X) * conj(tau(X)) * det ** (-1)**m."""
    tau_X = RationalFn.coerce(tau_X)
    tau_boundary = RationalFn.coerce(tau_boundary)
    if not tau_X or not tau_boundary:
        raise ZeroInputError("torsion values must be nonzero")
    q = tau_boundary / (tau_X * tau_X.involution())
    return UnitClass(q if m % 2 == 0 else q.inverse(), Ambiguity.PM_TK)


def _pad_h(h, C, E):
    if not h:
        return h
    out = {}
    for key, vecs in h.items():
        i = int(key)
        extra = E.dim(i)
        out[i] = [list(v) + [ZERO] * extra for v in vecs]
    return out


def stabilization_check(C, h=None, degree=None):
    """tau(C + elementary) == tau(C) modulo +-t^k."""
    validate(C)
    degree = degree if degree is not None else max(C.top + 1, 1)
    E = elementary(degree)
    S = direct_sum(C, E)
    return unit_equal(torsion_exact(S, _pad_h(h, C, E)), torsion_exact(C, h), Ambiguity.PM_TK)

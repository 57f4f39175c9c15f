"""Based chain complexes of free Q[t, t^-1]-modules and their homology."""

from dataclasses import dataclass, field
from functools import cached_property

from .cyclotomic import divisors, factor_cyclotomic, totient
from .errors import NotAComplexError, NotTorsionError, ShapeMismatchError
from .laurent import ONE, LaurentPoly
from .linalg import Matrix, smith_normal_form


class BasedChainComplex:
    """C_top -> ... -> C_1 -> C_0 with the standard bases.

    ``boundaries[k]`` is the matrix of d_{k+1}: C_{k+1} -> C_k, of shape
    ``lengths[k] x lengths[k+1]``.
    """

    def __init__(self, lengths, boundaries):
        self.lengths = tuple(int(n) for n in lengths)
        self.boundaries = tuple(
            b if isinstance(b, Matrix) else Matrix.from_rows(b, self.lengths[k + 1])
            for k, b in enumerate(boundaries)
        )

    @classmethod
    def from_boundaries(cls, boundaries, lengths=None):
        """Build from boundary matrices d_1, d_2, ...; lengths inferred when omitted."""
        mats = [b if isinstance(b, Matrix) else Matrix.from_rows(b) for b in boundaries]
        if lengths is None:
            if not mats:
                lengths = []
            else:
                lengths = [mats[0].rows] + [m.cols for m in mats]
        return cls(lengths, mats)

    @property
    def top(self):
        return len(self.lengths) - 1

    def dim(self, i):
        return self.lengths[i] if 0 <= i < len(self.lengths) else 0

    def boundary(self, i):
        """d_i: C_i -> C_{i-1}; zero matrices outside the stored range."""
        if 1 <= i <= self.top:
            return self.boundaries[i - 1]
        return Matrix.zeros(self.dim(i - 1), self.dim(i))

    def euler_characteristic(self):
        return sum((-1) ** i * n for i, n in enumerate(self.lengths))

    def __repr__(self):
        return f"BasedChainComplex(lengths={list(self.lengths)})"


def validate(C):
    """Check shapes and d o d = 0; return True or raise."""
    if len(C.boundaries) != max(len(C.lengths) - 1, 0):
        raise ShapeMismatchError(
            f"{len(C.lengths)} chain groups need {max(len(C.lengths) - 1, 0)} boundary matrices, "
            f"got {len(C.boundaries)}"
        )
    for i in range(1, C.top + 1):
        b = C.boundaries[i - 1]
        want = (C.lengths[i - 1], C.lengths[i])
        if b.shape != want:
            raise ShapeMismatchError(f"d_{i} has shape {b.shape}, expected {want}")
    for i in range(2, C.top + 1):
        comp = C.boundaries[i - 2] @ C.boundaries[i - 1]
        if not comp.is_zero():
            raise NotAComplexError(f"d_{i - 1} o d_{i} is not zero", degree=i)
    return True


@dataclass(frozen=True)
class ModuleDecomposition:
    """Gamma^free_rank plus the cyclic modules Gamma/(f) for f in torsion_factors."""

    free_rank: int = 0
    torsion_factors: tuple = ()

    def __post_init__(self):
        facs = tuple(self.torsion_factors)
        object.__setattr__(self, "torsion_factors", facs)
        for f in facs:
            if f.is_zero() or f.is_unit():
                raise ValueError(f"torsion factor {f} must be a nonzero non-unit")
        for a, b in zip(facs, facs[1:]):
            if not a.divides(b):
                raise ValueError(f"invariant factors out of divisibility order: {a} does not divide {b}")

    def order(self):
        out = ONE
        for f in self.torsion_factors:
            out = out * f
        return out

    def is_torsion(self):
        return self.free_rank == 0

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion_factors


@dataclass(frozen=True)
class HomologyProfile:
    """Per-degree module decompositions and Alexander polynomials."""

    modules: tuple = field(default_factory=tuple)

    @cached_property
    def alexander(self):
        return tuple(m.order() for m in self.modules)

    def module(self, i):
        if 0 <= i < len(self.modules):
            return self.modules[i]
        return ModuleDecomposition()

    def delta(self, i):
        return self.module(i).order()

    def is_torsion(self):
        return all(m.is_torsion() for m in self.modules)

    @classmethod
    def from_factors(cls, per_degree, free_ranks=None):
        """Profile from lists of invariant factors (unit-normalized, in order)."""
        free_ranks = free_ranks or [0] * len(per_degree)
        mods = []
        for fr, facs in zip(free_ranks, per_degree):
            facs = [LaurentPoly.coerce(f) if not isinstance(f, str) else _parse(f) for f in facs]
            mods.append(ModuleDecomposition(fr, tuple(f.normalized() for f in facs)))
        return cls(tuple(mods))


def _parse(s):
    from .parser import parse_poly

    return parse_poly(s)


def homology(C):
    """H_i(C) as Gamma-modules, read off the Smith forms of the boundaries."""
    validate(C)
    snfs = [smith_normal_form(b) for b in C.boundaries]
    ranks = [s.rank for s in snfs]
    mods = []
    for i, n in enumerate(C.lengths):
        rank_out = ranks[i - 1] if i >= 1 else 0  # rank of d_i
        torsion = ()
        rank_in = 0
        if i < len(snfs):  # d_{i+1}
            rank_in = ranks[i]
            torsion = tuple(snfs[i].nonunit_factors())
        mods.append(ModuleDecomposition(n - rank_out - rank_in, torsion))
    return HomologyProfile(tuple(mods))


def is_rationally_acyclic(C):
    """True iff every H_i is a torsion module (so C tensor Q(t) is exact)."""
    return homology(C).is_torsion()


def jordan_count(M, m):
    """Number of invariant factors divisible by Phi_m.

    This is the number of Jordan blocks of t with eigenvalue lambda for any
    primitive m-th root of unity lambda.
    """
    count = 0
    for f in M.torsion_factors:
        if factor_cyclotomic(f).multiplicity(m):
            count += 1
    return count


def _torsion_module(profile, i):
    mod = profile.module(i)
    if not mod.is_torsion():
        raise NotTorsionError(f"H_{i} has free rank {mod.free_rank}")
    return mod


def local_system_dim(profile, m, i):
    """dim H_i with coefficients in the rank-one local system of a primitive m-th root."""
    return jordan_count(_torsion_module(profile, i), m) + jordan_count(_torsion_module(profile, i - 1), m)


def covering_dim(profile, dplus1, i):
    """dim H_i of the (d+1)-fold cover: sum over m | d+1 of phi(m) * local_system_dim(m, i)."""
    return sum(totient(m) * local_system_dim(profile, m, i) for m in divisors(dplus1))


# -- constructions -----------------------------------------------------
def _block_diag(a, b):
    rows = []
    for r in a.to_rows():
        rows.append(r + [LaurentPoly()] * b.cols)
    for r in b.to_rows():
        rows.append([LaurentPoly()] * a.cols + r)
    return Matrix.from_rows(rows, a.cols + b.cols) if rows else Matrix(0, a.cols + b.cols, [])


def direct_sum(C, E):
    """Degreewise direct sum; C's generators come first in each degree."""
    top = max(C.top, E.top)
    lengths = [
        (C.lengths[i] if i <= C.top else 0) + (E.lengths[i] if i <= E.top else 0) for i in range(top + 1)
    ]
    return BasedChainComplex(lengths, [_block_diag(C.boundary(i), E.boundary(i)) for i in range(1, top + 1)])


def elementary(degree, coefficient=ONE):
    """Gamma -> Gamma in degrees ``degree`` -> ``degree - 1``, all other groups zero."""
    if degree < 1:
        raise ValueError("elementary complex needs degree >= 1")
    lengths = [0] * (degree - 1) + [1, 1]
    bds = [Matrix.zeros(lengths[i - 1], lengths[i]) for i in range(1, degree)]
    bds.append(Matrix.from_rows([[coefficient]]))
    return BasedChainComplex(lengths, bds)

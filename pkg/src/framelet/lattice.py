"""Dilation-matrix validation and coset representatives for Z^d/[M Z^d] and [M^{-T}Z^d]/Z^d."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

EIG_TOL = 1e-9


class LatticeError(ValueError):
    pass


def mat_transpose(m):
    return tuple(zip(*m))


def mat_vec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def mat_mul(a, b):
    bt = mat_transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def int_det(m) -> int:
    """Exact determinant of an integer matrix (fraction-free Gaussian elimination)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            if f:
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
    assert det.denominator == 1
    return int(det)


def mat_inverse_fractions(m):
    """Exact inverse of an integer (or Fraction) matrix as Fractions."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == r)) for i in range(n)]
         for r, row in enumerate(m)]
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            raise LatticeError("singular matrix")
        a[i], a[piv] = a[piv], a[i]
        d = a[i][i]
        a[i] = [x / d for x in a[i]]
        for r in range(n):
            if r != i and a[r][i]:
                f = a[r][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return tuple(tuple(row[n:]) for row in a)


class DilationMatrix:
    """A d x d integer matrix, |det| >= 2, all eigenvalues > 1 in modulus."""

    __slots__ = ("entries", "dim", "det", "abs_det", "inv", "inv_transpose")

    def __init__(self, entries):
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)
        self.dim = len(self.entries)
        self.det = int_det(self.entries)
        self.abs_det = abs(self.det)
        self.inv = mat_inverse_fractions(self.entries)
        self.inv_transpose = mat_transpose(self.inv)

    @property
    def transpose_entries(self):
        return mat_transpose(self.entries)

    def apply(self, k):
        return mat_vec(self.entries, k)

    def apply_transpose(self, k):
        return mat_vec(self.transpose_entries, k)

    def solve_int(self, k):
        """n with M n = k, or None when k is not in M Z^d."""
        x = mat_vec(self.inv, k)
        if all(f.denominator == 1 for f in x):
            return tuple(int(f) for f in x)
        return None

    def __eq__(self, other):
        return isinstance(other, DilationMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"DilationMatrix({list(map(list, self.entries))})"


def validate_dilation(entries) -> DilationMatrix:
    rows = list(entries)
    d = len(rows)
    if d == 0 or any(len(row) != d for row in rows):
        raise LatticeError("dilation matrix must be square")
    m = DilationMatrix(rows)
    if m.abs_det < 2:
        raise LatticeError(f"|det M| = {m.abs_det} < 2")
    eigs = np.linalg.eigvals(np.array(m.entries, dtype=float))
    if np.min(np.abs(eigs)) <= 1.0 + EIG_TOL:
        raise LatticeError("dilation matrix has an eigenvalue of modulus <= 1")
    return m


def _unit_box_reps(m: DilationMatrix):
    """Integer points k with M^{-1} k in [0,1)^d, exactly; 0 first, rest lexicographic."""
    d = m.dim
    corners = [mat_vec(m.entries, corner) for corner in product((0, 1), repeat=d)]
    lo = [min(c[i] for c in corners) for i in range(d)]
    hi = [max(c[i] for c in corners) for i in range(d)]
    reps = []
    for k in product(*(range(lo[i], hi[i] + 1) for i in range(d))):
        x = mat_vec(m.inv, k)
        if all(Fraction(0) <= xi < Fraction(1) for xi in x):
            reps.append(tuple(k))
    if len(reps) != m.abs_det:
        raise LatticeError("coset enumeration does not match |det M|")
    zero = (0,) * d
    reps.remove(zero)
    reps.sort()
    return [zero] + reps


def gamma_cosets(m: DilationMatrix) -> list[tuple[int, ...]]:
    """Representatives of Z^d/[M Z^d]: (M [0,1)^d) intersect Z^d, 0 first."""
    return _unit_box_reps(m)


def omega_cosets(m: DilationMatrix) -> list[tuple[Fraction, ...]]:
    """Representatives of [M^{-T} Z^d]/Z^d inside [0,1)^d, omega_1 = 0."""
    mt = DilationMatrix(m.transpose_entries)
    out = []
    for g in _unit_box_reps(mt):
        w = mat_vec(mt.inv, g)  # M^{-T} g
        out.append(tuple(f - f.__floor__() for f in w))
    assert out[0] == (Fraction(0),) * m.dim
    return out


def coset_index(reps, v, m: DilationMatrix):
    """Index of the representative congruent to v modulo M Z^d."""
    for i, g in enumerate(reps):
        if m.solve_int(tuple(a - b for a, b in zip(v, g))) is not None:
            return i
    raise LatticeError(f"{v} not covered by coset representatives")


def omega_index(omegas, w):
    """Index j with w - omega_j in Z^d (w a tuple of Fractions)."""
    for j, om in enumerate(omegas):
        if all((a - b).denominator == 1 for a, b in zip(w, om)):
            return j
    raise LatticeError(f"{w} is not congruent to any omega representative")


def lattice_json(m: DilationMatrix) -> dict:
    return {
        "dilation": [list(r) for r in m.entries],
        "gamma": [list(g) for g in gamma_cosets(m)],
        "omega": [[f"{w.numerator}/{w.denominator}" for w in om] for om in omega_cosets(m)],
    }

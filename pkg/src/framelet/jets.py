"""Truncated derivative tables at xi = 0 and their calculus.

A Jet of order n stores every partial derivative d^mu f(0) with |mu| < n,
exactly in Q(zeta_L).  Jets realize every condition of the form
f(xi) = g(xi) + O(||xi||^n).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .field import CycField, CycNum


@lru_cache(maxsize=None)
def multi_indices(dim: int, total: int) -> tuple[tuple[int, ...], ...]:
    """All mu in N_0^dim with |mu| = total, lexicographic."""
    if dim == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in multi_indices(dim - 1, total - first):
            out.append((first,) + rest)
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def indices_below(dim: int, order: int) -> tuple[tuple[int, ...], ...]:
    """All mu with |mu| < order, by increasing degree then lexicographic."""
    out = []
    for t in range(order):
        out.extend(multi_indices(dim, t))
    return tuple(out)


def mi_factorial(mu) -> int:
    out = 1
    for m in mu:
        out *= factorial(m)
    return out


def mi_binom(mu, nu) -> int:
    out = 1
    for m, n in zip(mu, nu):
        out *= comb(m, n)
    return out


def sub_indices(mu):
    """All nu with 0 <= nu <= mu componentwise."""
    return product(*(range(m + 1) for m in mu))


class Jet:
    """Scalar jet: complete table mu -> d^mu f(0) for |mu| < order."""

    __slots__ = ("field", "dim", "order", "table")

    def __init__(self, field: CycField, dim: int, order: int, table: dict):
        self.field = field
        self.dim = dim
        self.order = order
        self.table = table

    @classmethod
    def constant(cls, field, dim, order, value) -> "Jet":
        if not isinstance(value, CycNum):
            value = field.from_rational(value)
        zero = field.zero
        tb = {mu: zero for mu in indices_below(dim, order)}
        tb[(0,) * dim] = value
        return cls(field, dim, order, tb)

    @classmethod
    def from_taylor(cls, field, dim, order, taylor: dict) -> "Jet":
        tb = {}
        zero = field.zero
        for mu in indices_below(dim, order):
            c = taylor.get(mu)
            tb[mu] = c * mi_factorial(mu) if c is not None else zero
        return cls(field, dim, order, tb)

    def taylor(self) -> dict:
        return {mu: v / mi_factorial(mu) for mu, v in self.table.items()}

    def value(self) -> CycNum:
        return self.table[(0,) * self.dim]

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise ValueError("cannot extend a jet")
        return Jet(self.field, self.dim, order,
                   {mu: self.table[mu] for mu in indices_below(self.dim, order)})

    def __add__(self, other):
        order = min(self.order, other.order)
        return Jet(self.field, self.dim, order,
                   {mu: self.table[mu] + other.table[mu]
                    for mu in indices_below(self.dim, order)})

    def __sub__(self, other):
        order = min(self.order, other.order)
        return Jet(self.field, self.dim, order,
                   {mu: self.table[mu] - other.table[mu]
                    for mu in indices_below(self.dim, order)})

    def __neg__(self):
        return Jet(self.field, self.dim, self.order,
                   {mu: -v for mu, v in self.table.items()})

    def scale(self, c) -> "Jet":
        if not isinstance(c, CycNum):
            c = self.field.from_rational(c)
        return Jet(self.field, self.dim, self.order,
                   {mu: v * c for mu, v in self.table.items()})

    def __mul__(self, other):
        """Leibniz product of jets."""
        order = min(self.order, other.order)
        tb = {}
        for mu in indices_below(self.dim, order):
            acc = self.field.zero
            for nu in sub_indices(mu):
                a = self.table[nu]
                if a.is_zero:
                    continue
                b = other.table[tuple(m - n for m, n in zip(mu, nu))]
                if b.is_zero:
                    continue
                acc = acc + a * b * mi_binom(mu, nu)
            tb[mu] = acc
        return Jet(self.field, self.dim, order, tb)

    def conj(self) -> "Jet":
        """Jet of xi -> conj(f(xi)) (xi real)."""
        return Jet(self.field, self.dim, self.order,
                   {mu: v.conj() for mu, v in self.table.items()})

    def inverse(self) -> "Jet":
        """Jet of 1/f; requires f(0) != 0."""
        f0 = self.value()
        if f0.is_zero:
            raise ZeroDivisionError("jet has zero value at the origin")
        t = self.taylor()
        inv0 = f0.inverse()
        out = {(0,) * self.dim: inv0}
        for deg in range(1, self.order):
            for mu in multi_indices(self.dim, deg):
                acc = self.field.zero
                for nu in sub_indices(mu):
                    if nu == (0,) * self.dim:
                        continue
                    a = t.get(nu)
                    if a is None or a.is_zero:
                        continue
                    b = out[tuple(m - n for m, n in zip(mu, nu))]
                    if not b.is_zero:
                        acc = acc + a * b
                out[mu] = -acc * inv0
        return Jet.from_taylor(self.field, self.dim, self.order, out)

    def compose_linear(self, rows) -> "Jet":
        """Jet of xi -> f(A xi) for a rational matrix A (sequence of row tuples)."""
        d = self.dim
        t = self.taylor()
        lin = []
        for i in range(d):
            form = {}
            for j in range(d):
                q = Fraction(rows[i][j])
                if q:
                    key = tuple(1 if jj == j else 0 for jj in range(d))
                    form[key] = self.field.from_rational(q)
            lin.append(form)
        out: dict = {}
        for mu, c in t.items():
            if c.is_zero:
                continue
            term = {(0,) * d: self.field.one}
            for i in range(d):
                for _ in range(mu[i]):
                    term = _poly_mul_trunc(self.field, term, lin[i], self.order)
            for key, v in term.items():
                prev = out.get(key)
                out[key] = v * c if prev is None else prev + v * c
        return Jet.from_taylor(self.field, d, self.order, out)

    def vanish_order(self, cap: int | None = None) -> int:
        """Largest m <= cap (default: jet order) with all entries |mu| < m zero."""
        cap = self.order if cap is None else min(cap, self.order)
        for deg in range(cap):
            for mu in multi_indices(self.dim, deg):
                if not self.table[mu].is_zero:
                    return deg
        return cap

    def agrees(self, other: "Jet", order: int) -> bool:
        return (self - other).vanish_order(order) >= order

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (self.order == other.order and self.dim == other.dim
                and all(self.table[mu] == other.table[mu]
                        for mu in indices_below(self.dim, self.order)))

    def __repr__(self):
        return f"Jet(order={self.order}, f(0)={self.value()!r})"


def _poly_mul_trunc(field, a: dict, b: dict, order: int) -> dict:
    out: dict = {}
    for ka, va in a.items():
        if va.is_zero:
            continue
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            if sum(key) >= order:
                continue
            v = va * vb
            prev = out.get(key)
            out[key] = v if prev is None else prev + v
    return out


class JetMatrix:
    """Grid of jets of one shared order."""

    __slots__ = ("field", "dim", "rows", "cols", "order", "data")

    def __init__(self, data):
        data = tuple(tuple(row) for row in data)
        j0 = data[0][0]
        self.field, self.dim, self.order = j0.field, j0.dim, j0.order
        self.rows, self.cols = len(data), len(data[0])
        self.data = data

    @classmethod
    def identity(cls, field, dim, order, n) -> "JetMatrix":
        one = Jet.constant(field, dim, order, field.one)
        zero = Jet.constant(field, dim, order, field.zero)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, dim, order, rows, cols) -> "JetMatrix":
        zero = Jet.constant(field, dim, order, field.zero)
        return cls([[zero for _ in range(cols)] for _ in range(rows)])

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __add__(self, other):
        return JetMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        return JetMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return JetMatrix([[-a for a in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, (CycNum, int, Fraction)):
            return JetMatrix([[a.scale(other) for a in row] for row in self.data])
        return NotImplemented

    def __matmul__(self, other: "JetMatrix") -> "JetMatrix":
        assert self.cols == other.rows
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = None
                for k in range(self.cols):
                    term = self.data[i][k] * other.data[k][j]
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(row)
        return JetMatrix(out)

    def conj_transpose(self) -> "JetMatrix":
        return JetMatrix([[self.data[j][i].conj() for j in range(self.rows)]
                          for i in range(self.cols)])

    def transpose(self) -> "JetMatrix":
        return JetMatrix([[self.data[j][i] for j in range(self.rows)]
                          for i in range(self.cols)])

    def compose_linear(self, rows) -> "JetMatrix":
        return JetMatrix([[a.compose_linear(rows) for a in row] for row in self.data])

    def conj(self) -> "JetMatrix":
        return JetMatrix([[a.conj() for a in row] for row in self.data])

    def truncate(self, order: int) -> "JetMatrix":
        return JetMatrix([[a.truncate(order) for a in row] for row in self.data])

    def scale(self, c) -> "JetMatrix":
        return JetMatrix([[a.scale(c) for a in row] for row in self.data])

    def vanish_order(self, cap: int | None = None) -> int:
        return min(a.vanish_order(cap) for row in self.data for a in row)

    def agrees(self, other: "JetMatrix", order: int) -> bool:
        return all(a.agrees(b, order)
                   for r1, r2 in zip(self.data, other.data) for a, b in zip(r1, r2))

    def value(self):
        """Matrix of values at 0 as a list of lists of CycNum."""
        return [[a.value() for a in row] for row in self.data]

    def row(self, i) -> "JetMatrix":
        return JetMatrix([self.data[i]])

    def col(self, j) -> "JetMatrix":
        return JetMatrix([[row[j]] for row in self.data])

    def __repr__(self):
        return f"JetMatrix({self.rows}x{self.cols}, order={self.order})"

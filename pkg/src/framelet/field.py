"""Exact arithmetic in Q and in the cyclotomic fields Q(zeta_L).

zeta_L denotes e^{-2*pi*i/L}; elements are stored in the power basis
1, zeta, ..., zeta^{phi(L)-1} reduced modulo the L-th cyclotomic polynomial.
Every coefficient is an integer over one positive denominator, kept in
canonical form (content gcd 1), so all arithmetic is integer arithmetic.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction


class FieldError(ValueError):
    pass


def euler_phi(n: int) -> int:
    if n <= 0:
        raise ValueError("euler_phi expects n > 0")
    result = n
    x = n
    p = 2
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (ascending coefficients, den monic-ish)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact integer polynomial division")
        q = c // lead
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return out, num


def cyclotomic_poly(L: int) -> list[int]:
    """Coefficients (ascending) of the L-th cyclotomic polynomial, by recursive
    exact division of x^L - 1 by the lower-order cyclotomic polynomials."""
    if L == 1:
        return [-1, 1]
    poly = [0] * (L + 1)
    poly[0] = -1
    poly[L] = 1
    for d in range(1, L):
        if L % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_poly(d))
            if any(rem):
                raise ArithmeticError("cyclotomic division left a remainder")
    return poly


_FIELDS: dict[int, "CycField"] = {}


def cyc_field(L: int) -> "CycField":
    if L not in _FIELDS:
        _FIELDS[L] = CycField(L)
    return _FIELDS[L]


class CycField:
    """The field Q(zeta_L) with zeta_L = e^{-2*pi*i/L}.  L must be a multiple of 4
    so that the imaginary unit lies in the field."""

    def __init__(self, L: int):
        if L <= 0 or L % 4 != 0:
            raise FieldError(f"field order must be a positive multiple of 4, got {L}")
        self.order = L
        self.degree = euler_phi(L)
        self.phi_poly = cyclotomic_poly(L)
        D = self.degree
        # reduction rows: zeta^t as an integer vector in the power basis, t < 2D-1
        rows = []
        for t in range(2 * D - 1):
            vec = [0] * max(t + 1, D)
            vec[t] = 1
            if t >= D:
                vec, _ = _reduce_mod(vec, self.phi_poly, D)
            rows.append(tuple(vec[:D]))
        self._pow_rows = rows
        # conjugation rows: conj(zeta^j) = zeta^{L-j} reduced
        conj_rows = []
        for j in range(D):
            t = (L - j) % L
            conj_rows.append(self._power_vec(t))
        self._conj_rows = conj_rows
        self.zero = CycNum(self, 1, (0,) * D)
        self.one = CycNum(self, 1, (1,) + (0,) * (D - 1))

    def _power_vec(self, t: int) -> tuple[int, ...]:
        """zeta^t (t >= 0) as a reduced integer vector."""
        t %= self.order
        D = self.degree
        if t < 2 * D - 1:
            return self._pow_rows[t]
        vec = [0] * (t + 1)
        vec[t] = 1
        vec, _ = _reduce_mod(vec, self.phi_poly, D)
        return tuple(vec[:D])

    def from_rational(self, q) -> "CycNum":
        q = Fraction(q)
        D = self.degree
        return CycNum(self, q.denominator, (q.numerator,) + (0,) * (D - 1))

    def element(self, coeffs) -> "CycNum":
        """Element from a sequence of phi(L) rationals in the power basis."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != self.degree:
            raise FieldError("coefficient vector has wrong length")
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycNum(self, den, tuple(c.numerator * (den // c.denominator) for c in coeffs))

    def root_of_unity(self, num: int, den: int) -> "CycNum":
        """e^{-2*pi*i*num/den} as zeta_L^{(L/den)*num mod L}; den must divide L."""
        if den <= 0 or self.order % den != 0:
            raise FieldError(f"denominator {den} does not divide field order {self.order}")
        t = (self.order // den) * num % self.order
        return CycNum(self, 1, self._power_vec(t))

    @property
    def i(self) -> "CycNum":
        """The imaginary unit e^{-2*pi*i*(-1/4)}."""
        return self.root_of_unity(-1, 4)

    def zeta(self, t: int = 1) -> "CycNum":
        return CycNum(self, 1, self._power_vec(t))

    def __repr__(self):
        return f"CycField({self.order})"


def _reduce_mod(vec: list[int], phi_poly: list[int], D: int) -> tuple[list[int], None]:
    """Reduce an integer coefficient vector modulo the (monic, integer) cyclotomic polynomial."""
    vec = list(vec)
    for t in range(len(vec) - 1, D - 1, -1):
        c = vec[t]
        if c:
            vec[t] = 0
            # x^t = x^{t-D} * x^D; x^D = -(phi[0..D-1])
            for j in range(D):
                pj = phi_poly[j]
                if pj:
                    vec[t - D + j] -= c * pj
    if len(vec) < D:
        vec += [0] * (D - len(vec))
    return vec[: max(D, len(vec))], None


def _content(den: int, co) -> int:
    g = den
    for c in co:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


class CycNum:
    """Immutable element of Q(zeta_L): integer vector `co` over denominator `den`."""

    __slots__ = ("field", "den", "co")

    def __init__(self, field: CycField, den: int, co: tuple[int, ...]):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, co = -den, tuple(-c for c in co)
        g = _content(den, co)
        if g > 1:
            den //= g
            co = tuple(c // g for c in co)
        self.field = field
        self.den = den
        self.co = tuple(co)

    # -- helpers -------------------------------------------------------
    def _check(self, other: "CycNum"):
        if self.field.order != other.field.order:
            raise FieldError(
                f"mismatched field orders {self.field.order} and {other.field.order}")

    @property
    def is_zero(self) -> bool:
        return not any(self.co)

    @property
    def is_rational(self) -> bool:
        return not any(self.co[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise FieldError("value is not rational")
        return Fraction(self.co[0], self.den)

    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.co)

    def to_complex(self) -> complex:
        z = cmath.exp(-2j * cmath.pi / self.field.order)
        acc = 0j
        p = 1 + 0j
        for c in self.co:
            acc += c * p
            p *= z
        return acc / self.den

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = _coerce(self.field, other)
        self._check(other)
        d1, d2 = self.den, other.den
        g = gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        return CycNum(self.field, d1 * m1,
                      tuple(a * m1 + b * m2 for a, b in zip(self.co, other.co)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(self.field, other) - self

    def __neg__(self):
        return CycNum(self.field, self.den, tuple(-c for c in self.co))

    def __mul__(self, other):
        other = _coerce(self.field, other)
        self._check(other)
        co = _mul_vec(self.field, self.co, other.co)
        return CycNum(self.field, self.den * other.den, co)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero:
            raise ZeroDivisionError("division by zero in Q(zeta_L)")
        if self.is_rational:
            return self.field.from_rational(1 / self.to_fraction())
        D = self.field.degree
        u = [Fraction(c, self.den) for c in self.co]
        s = _ext_inverse(u, [Fraction(c) for c in self.field.phi_poly])
        s += [Fraction(0)] * (D - len(s))
        return self.field.element(s[:D])

    def __truediv__(self, other):
        other = _coerce(self.field, other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(self.field, other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "CycNum":
        """Galois conjugation zeta -> zeta^{-1} (= complex conjugation)."""
        D = self.field.degree
        out = [0] * D
        for j, c in enumerate(self.co):
            if c:
                row = self.field._conj_rows[j]
                for t in range(D):
                    if row[t]:
                        out[t] += c * row[t]
        return CycNum(self.field, self.den, tuple(out))

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (self.field.order == other.field.order
                and self.den == other.den and self.co == other.co)

    def __hash__(self):
        return hash((self.field.order, self.den, self.co))

    def __repr__(self):
        return f"CycNum(L={self.field.order}, {self.serialize()})"

    def serialize(self) -> list[str]:
        return [_rat_str(Fraction(c, self.den)) for c in self.co]


def _rat_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def cycnum_from_strings(field: CycField, parts) -> CycNum:
    return field.element([Fraction(p) for p in parts])


def _coerce(field: CycField, x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return field.from_rational(x)
    raise TypeError(f"cannot coerce {type(x)} into Q(zeta_L)")


def _mul_vec(field: CycField, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Product of two reduced integer vectors, folded modulo Phi_L."""
    D = field.degree
    if D == 2:
        # the dominant case (L = 4): zeta^2 folds through the precomputed row
        a0, a1 = a
        b0, b1 = b
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a1 * b1
        if c2:
            r = field._pow_rows[2]
            c0 += c2 * r[0]
            c1 += c2 * r[1]
        return (c0, c1)
    conv = [0] * (2 * D - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
    out = conv[:D]
    rows = field._pow_rows
    for t in range(D, 2 * D - 1):
        c = conv[t]
        if c:
            row = rows[t]
            for j in range(D):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def field_arith(x: CycNum, y: CycNum, op: str) -> CycNum:
    """Spec-level entry point for +, -, *, / in Q(zeta_L)."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown field operation {op!r}")


def root_of_unity(num: int, den: int, L: int) -> CycNum:
    return cyc_field(L).root_of_unity(num, den)


def galois_conj(x: CycNum) -> CycNum:
    return x.conj()


def _ext_inverse(u: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """Inverse of u modulo m over Q[x] via the extended Euclidean algorithm."""

    def deg(p):
        d = len(p) - 1
        while d > 0 and p[d] == 0:
            d -= 1
        return d if any(p) else -1

    def trim(p):
        p = list(p)
        while len(p) > 1 and p[-1] == 0:
            p.pop()
        return p

    def poly_divmod(a, b):
        a = list(a)
        db, lb = deg(b), b[deg(b)]
        q = [Fraction(0)] * max(1, len(a) - db)
        while deg(a) >= db and any(a):
            k = deg(a) - db
            c = a[deg(a)] / lb
            q[k] += c
            for j in range(db + 1):
                a[k + j] -= c * b[j]
        return trim(q), trim(a)

    def poly_mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return trim(out)

    def poly_sub(a, b):
        n = max(len(a), len(b))
        return trim([(a[i] if i < len(a) else Fraction(0)) -
                     (b[i] if i < len(b) else Fraction(0)) for i in range(n)])

    r0, r1 = trim(m), trim(u)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while deg(r1) > 0:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        if not any(r1):
            raise ZeroDivisionError("element is a zero divisor (not coprime to Phi_L)")
    c = r1[0]
    return [x / c for x in s1]


@dataclass(frozen=True)
class ScaleTag:
    """A global multiplicative factor d_M^{e/2} tracked outside the field."""

    half_exponent: int = 0

    def bump(self, k: int = 1) -> "ScaleTag":
        return ScaleTag(self.half_exponent + k)

    def combine(self, other: "ScaleTag") -> "ScaleTag":
        return ScaleTag(self.half_exponent + other.half_exponent)

    def integer_power(self, base: int) -> int:
        """The exact integer base^{e/2}; e must be even and nonnegative."""
        if self.half_exponent % 2 != 0 or self.half_exponent < 0:
            raise FieldError(f"scale d_M^{self.half_exponent}/2 is not an integer power")
        return base ** (self.half_exponent // 2)

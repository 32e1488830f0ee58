"""Exact arithmetic in the cyclotomic field Q(w), w a primitive N-th root of unity.

Scalars are stored in the power basis {1, w, ..., w^(deg Phi_N - 1)} with
arbitrary-precision rational coefficients, reduced modulo the N-th cyclotomic
polynomial Phi_N.  The representation is canonical: two scalars are equal iff
their coefficient vectors are equal.
"""

from __future__ import annotations

import functools
from fractions import Fraction

import mpmath


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _int_poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic with integer coefficients, so the quotient stays integral
    num = list(num)
    deg_d = len(den) - 1
    quot = [0] * max(len(num) - deg_d, 0)
    for k in range(len(num) - deg_d - 1, -1, -1):
        c = num[k + deg_d]
        quot[k] = c
        if c:
            for m, dm in enumerate(den):
                num[k + m] -= c * dm
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@functools.cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first.

    Computed by exact division of x^n - 1 by the product of Phi_d over the
    proper divisors d of n.
    """
    if n < 1:
        raise ValueError("order must be a positive integer")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in _divisors(n)[:-1]:
        num, rem = _int_poly_divmod(num, list(cyclotomic_polynomial(d)))
        assert not rem
    return tuple(num)


@functools.cache
def field_degree(n: int) -> int:
    """deg Phi_n, i.e. Euler's totient of n."""
    return len(cyclotomic_polynomial(n)) - 1


@functools.cache
def power_reduction(n: int, m: int) -> tuple[int, ...]:
    """w^m reduced mod Phi_n, as an integer vector of length deg Phi_n."""
    phi = field_degree(n)
    m %= n
    if m < phi:
        vec = [0] * phi
        vec[m] = 1
        return tuple(vec)
    raw = [0] * (m + 1)
    raw[m] = 1
    _, rem = _int_poly_divmod(raw, list(cyclotomic_polynomial(n)))
    rem += [0] * (phi - len(rem))
    return tuple(rem)


def _reduce(order: int, raw: list[Fraction]) -> tuple[Fraction, ...]:
    phi = field_degree(order)
    out = [Fraction(0)] * phi
    for m, c in enumerate(raw):
        if c:
            for f, r in enumerate(power_reduction(order, m % order)):
                if r:
                    out[f] += c * r
    return tuple(out)


class CycScalar:
    """An element of Q(w_N) in canonical form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, raw) -> None:
        if order < 1:
            raise ValueError("order must be a positive integer")
        self.order = order
        self.coeffs = _reduce(order, [Fraction(c) for c in raw])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "CycScalar":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CycScalar":
        return cls(order, [1])

    @classmethod
    def from_rational(cls, order: int, value) -> "CycScalar":
        return cls(order, [Fraction(value)])

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "CycScalar":
        """w^power as an exact scalar."""
        raw = [0] * (power % order + 1)
        raw[power % order] = 1
        return cls(order, raw)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "CycScalar") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return self._raw(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return self._raw(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return self._raw(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        n = self.order
        phi = field_degree(n)
        out = [Fraction(0)] * phi
        for d, a in enumerate(self.coeffs):
            if not a:
                continue
            for e, b in enumerate(other.coeffs):
                if not b:
                    continue
                p = a * b
                if d + e < phi:
                    out[d + e] += p
                else:
                    for f, r in enumerate(power_reduction(n, d + e)):
                        if r:
                            out[f] += p * r
        return self._raw(tuple(out))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_rational(self.order, other)
        return NotImplemented

    def _raw(self, coeffs: tuple[Fraction, ...]) -> "CycScalar":
        s = CycScalar.__new__(CycScalar)
        s.order = self.order
        s.coeffs = coeffs
        return s

    def conjugate(self) -> "CycScalar":
        """Complex conjugation, w -> w^(N-1)."""
        n = self.order
        raw = [Fraction(0)] * n
        for d, c in enumerate(self.coeffs):
            raw[(n - d) % n] += c
        return CycScalar(n, raw)

    def inverse(self) -> "CycScalar":
        """Field inverse via the extended Euclidean algorithm on Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        phi_n = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        while a and not a[-1]:
            a.pop()
        # invariants: s*self + t*Phi_N = r  (t never needed)
        r0, s0 = phi_n, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]
        while any(r1):
            q, rem = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        # r0 is the gcd, a nonzero constant since Phi_N is irreducible
        const = r0[0]
        return CycScalar(self.order, [c / const for c in s0])

    # -- predicates / conversions ------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(self.order, other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycScalar(N={self.order}, {list(self.coeffs)})"

    def to_complex(self, precision: int = 15):
        """Evaluate at w = exp(2*pi*i/N) to the requested decimal precision.

        Returns an mpmath complex number; each of the real and imaginary
        parts is accurate to better than 10^-precision.
        """
        if precision < 1:
            raise ValueError("precision must be >= 1")
        with mpmath.workdps(precision + 10):
            w = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            for d in range(len(self.coeffs) - 1, -1, -1):
                c = self.coeffs[d]
                acc = acc * w + mpmath.mpf(c.numerator) / c.denominator
            return acc

    def approx(self) -> complex:
        """Fast double-precision value, for norm reporting only."""
        w = _unit_roots(self.order)
        return sum(float(c) * w[d] for d, c in enumerate(self.coeffs) if c)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "N": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CycScalar":
        coeffs = [Fraction(s) for s in obj["coeffs"]]
        if len(coeffs) != field_degree(obj["N"]):
            raise ValueError("coefficient vector has the wrong length")
        return cls(obj["N"], coeffs)


@functools.cache
def _unit_roots(n: int) -> tuple[complex, ...]:
    import cmath

    return tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(n))


def _frac_poly_divmod(num, den):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    deg_d = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - deg_d, 0)
    for k in range(len(num) - deg_d - 1, -1, -1):
        c = num[k + deg_d] / lead
        quot[k] = c
        if c:
            for m, dm in enumerate(den):
                num[k + m] -= c * dm
    return quot, num[:deg_d]


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]

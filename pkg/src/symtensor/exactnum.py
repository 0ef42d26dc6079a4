"""Exact scalars: arbitrary-precision rationals and cyclotomic field elements.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator).
A :class:`CyclotomicNumber` of order m is a residue modulo the m-th cyclotomic
polynomial, stored as Fraction coefficients on the power basis
1, z, ..., z**(phi(m)-1) where z is a primitive m-th root of unity.  All
arithmetic is exact; there are no floating-point code paths.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import univar

Rational = Fraction


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    """Euler totient by trial-division factorization (small m only)."""
    if m < 1:
        raise ValueError("order must be positive")
    result, rest, p = m, m, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, little-endian.

    Computed as (x**m - 1) divided by the product of all lower-order
    cyclotomic polynomials at divisors of m; monic of degree phi(m).
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = univar.mul(den, list(cyclotomic_polynomial(d)))
    q, r = univar.divmod_exact(num, den)
    if r:
        raise AssertionError(f"cyclotomic division left a remainder for m={m}")
    return tuple(q)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Rows giving x**k mod Phi_m for k = phi(m) .. 2*phi(m)-2."""
    phi_coeffs = cyclotomic_polynomial(m)
    k = len(phi_coeffs) - 1
    rows = []
    cur = [-c for c in phi_coeffs[:k]]
    rows.append(tuple(cur))
    for _ in range(max(0, k - 2)):
        top = cur[k - 1]
        nxt = [0] + cur[: k - 1]
        if top:
            for i, rc in enumerate(rows[0]):
                nxt[i] += top * rc
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


class CyclotomicNumber:
    """Immutable element of the m-th cyclotomic field.

    Two values compare equal iff they share the order and the reduced
    coefficient vectors agree; cross-order comparison requires an explicit
    :meth:`embed` by the caller.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != phi:
            raise ValueError(f"need {phi} coefficients for order {order}, got {len(cs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicNumber":
        phi = euler_phi(order)
        return cls(order, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 1)

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_rational(self):
        """The Fraction value when the element is rational, else None."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch ({self.order} vs {other.order}); embed into a "
                    "common order first")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        phi = len(a)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        if phi == 1:
            return CyclotomicNumber(self.order, conv[:1])
        rows = _reduction_rows(self.order)
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for idx, rc in enumerate(rows[k - phi]):
                    if rc:
                        out[idx] += c * rc
        return CyclotomicNumber(self.order, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicNumber.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via extended gcd with Phi_m."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi_m = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        g, u, _ = univar.xgcd(list(self.coeffs), phi_m)
        if univar.degree(g) != 0:
            raise AssertionError("cyclotomic polynomial must be irreducible over Q")
        phi = euler_phi(self.order)
        inv = [Fraction(0)] * phi
        for i, c in enumerate(u):
            inv[i] = c
        result = CyclotomicNumber(self.order, inv)
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def embed(self, target_order: int) -> "CyclotomicNumber":
        """Image under z_m -> z_{m'}**(m'/m); requires m | m'."""
        if target_order % self.order != 0:
            raise ValueError(
                f"cannot embed order {self.order} into non-multiple order {target_order}")
        if target_order == self.order:
            return self
        ratio = target_order // self.order
        step = zeta(target_order, ratio)
        acc = CyclotomicNumber.zero(target_order)
        power = CyclotomicNumber.one(target_order)
        for c in self.coeffs:
            if c:
                acc = acc + power * c
            power = power * step
        return acc

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        var = f"z{self.order}"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*{var}" if c != 1 else var)
            else:
                parts.append(f"{c}*{var}^{e}" if c != 1 else f"{var}^{e}")
        return " + ".join(parts) if parts else "0"


def zeta(m: int, k: int = 1) -> CyclotomicNumber:
    """The k-th power of a fixed primitive m-th root of unity."""
    k %= m
    phi = euler_phi(m)
    if phi == 1:
        # Q(zeta_1) = Q(zeta_2) = Q: the root itself is 1 or -1.
        root = Fraction(1) if m == 1 else Fraction(-1)
        return CyclotomicNumber(m, (root ** k,))
    base = CyclotomicNumber(m, (0, 1) + (0,) * (phi - 2))
    return base ** k

"""Exact arithmetic in finite fields GF(p^k).

Elements are polynomials over GF(p) reduced modulo a fixed monic
irreducible polynomial of degree k, stored as coefficient tuples in
low-degree-first order.  Fields and elements are immutable, so they can
be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

MAX_ORDER = 2**20


class NotAPrimePower(ValueError):
    """Raised when a field order has two distinct prime factors."""


class FieldMismatch(ValueError):
    """Raised when combining elements of different fields."""


class DivisionByZero(ZeroDivisionError):
    """Raised on division or inversion of the zero element."""


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    m, p = q, None
    d = 2
    while d * d <= m:
        if m % d == 0:
            p = d
            while m % d == 0:
                m //= d
            break
        d += 1
    if p is None:
        return q, 1  # q itself is prime
    if m != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    k = 0
    m = q
    while m > 1:
        m //= p
        k += 1
    return p, k


def _poly_trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int):
    """Divide a by b over GF(p); b need not be monic."""
    a = list(a)
    b = _poly_trim(b)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - db, 1)
    while len(_poly_trim(a)) - 1 >= db and any(a):
        a = list(_poly_trim(a))
        da = len(a) - 1
        if da < db:
            break
        coef = (a[-1] * inv_lead) % p
        quot[da - db] = coef
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
    return _poly_trim(quot), _poly_trim(a)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree 1..k//2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = low + (1,)
            _, rem = _poly_divmod(poly, divisor, p)
            if rem == (0,):
                return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p).

    Coefficient tuples are compared low-degree first, so the constant
    term is the most significant position.
    """
    if k == 1:
        return (0, 1)  # the polynomial x; GF(p)[x]/(x) = GF(p)
    for low in product(range(p), repeat=k):
        if low[0] == 0:
            continue  # zero constant term: divisible by x
        poly = low + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class Field:
    """The finite field GF(p^k) with a fixed modulus polynomial."""

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]  # length k+1, monic, low-degree first

    def element(self, coeffs: Sequence[int] | int) -> "FieldElement":
        """Build an element from an integer (k=1 shortcut) or coefficient list."""
        if isinstance(coeffs, int):
            coeffs = self._int_digits(coeffs)
        c = [x % self.p for x in coeffs]
        if len(c) > self.k:
            raise ValueError(f"coefficient vector longer than degree {self.k}")
        c += [0] * (self.k - len(c))
        return FieldElement(self, tuple(c))

    def _int_digits(self, value: int) -> list[int]:
        value %= self.q
        digits = []
        for _ in range(self.k):
            value, r = divmod(value, self.p)
            digits.append(r)
        return digits

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements, in lexicographic coefficient order."""
        for coeffs in product(range(self.p), repeat=self.k):
            yield FieldElement(self, coeffs)

    def __repr__(self) -> str:
        return f"GF({self.q})"


def make_field(q: int, max_order: int = MAX_ORDER) -> Field:
    """Construct GF(q) for a prime power q.

    The modulus is the lexicographically smallest monic irreducible
    polynomial of degree k over GF(p) (coefficients compared low-degree
    first), which makes element and point orderings reproducible.
    """
    if q > max_order:
        raise ValueError(f"field order {q} exceeds configured maximum {max_order}")
    p, k = _factor_prime_power(q)
    return Field(p=p, k=k, q=q, modulus=_smallest_irreducible(p, k))


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^k) in canonical reduced form."""

    field: Field
    coeffs: tuple[int, ...]  # length k, entries in [0, p)

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        prod_ = _poly_mul(self.coeffs, other.coeffs, p)
        _, rem = _poly_divmod(prod_, self.field.modulus, p)
        c = list(rem) + [0] * (self.field.k - len(rem))
        return FieldElement(self.field, tuple(c))

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        p = self.field.p
        # Invariant: r_i = s_i*modulus + t_i*self, with s_i never needed.
        r0, r1 = self.field.modulus, _poly_trim(self.coeffs)
        t0, t1 = (0,), (1,)
        while r1 != (0,):
            quo, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            t0, t1 = t1, _poly_sub(t0, _poly_mul(quo, t1, p), p)
        # r0 is now the gcd, a nonzero constant; scale t0 by its inverse.
        scale = pow(r0[0], p - 2, p)
        inv = tuple((c * scale) % p for c in t0)
        c = list(inv) + [0] * (self.field.k - len(inv))
        return FieldElement(self.field, tuple(c[: self.field.k]))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def __pow__(self, exp: int) -> "FieldElement":
        if exp < 0:
            return self.inverse() ** (-exp)
        result = self.field.one
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __repr__(self) -> str:
        return f"FieldElement({self.field!r}, {self.coeffs})"


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch a named field operation; b is ignored for inv/neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b is None or b.is_zero:
            raise DivisionByZero("division by zero")
        return a / b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown field operation {op!r}")

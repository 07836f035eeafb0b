"""
Exact arithmetic in F_{p^m}.

Elements are plain ints in galois' integer encoding: the polynomial
c_0 + c_1 t + ... + c_{m-1} t^{m-1} is stored as c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
Constants of the prime field are therefore their own residues, and the
prime-field embedding of an integer n is simply n % p.

galois does the number theory (irreducibility, primitive element, discrete
exponent table); the hot-path operations below run on ints and lookup tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import galois
import numpy as np

from hopfext.core.errors import FieldError

# Largest field for which a full addition table is precomputed.
ADD_TABLE_LIMIT = 729
MAX_EXTENSION_DEGREE = 8
DEFAULT_SEARCH_DEGREE = 4


@dataclass(frozen=True)
class FieldSpec:
    """A finite field F_{p^m}; ``modulus`` lists coefficients from t^m down to t^0."""
    p: int
    m: int
    modulus: tuple[int, ...]

    # ── Structure ──

    @property
    def order(self) -> int:
        return self.p ** self.m

    @property
    def group_order(self) -> int:
        """Order of the multiplicative group."""
        return self.order - 1

    @cached_property
    def galois(self):
        """The galois FieldArray class for this field."""
        if self.m == 1:
            return galois.GF(self.p)
        base = galois.GF(self.p)
        return galois.GF(self.order, irreducible_poly=galois.Poly(list(self.modulus), field=base))

    @cached_property
    def _exp(self) -> list[int]:
        gf = self.galois
        powers = gf.primitive_element ** np.arange(self.group_order)
        return [int(v) for v in powers]

    @cached_property
    def _log(self) -> list[int]:
        table = [-1] * self.order
        for k, v in enumerate(self._exp):
            table[v] = k
        return table

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.m == 1 or self.order > ADD_TABLE_LIMIT:
            return None
        q = self.order
        return [[self._add_digits(a, b) for b in range(q)] for a in range(q)]

    @cached_property
    def _neg_table(self) -> list[int]:
        return [self._neg_digits(a) for a in range(self.order)]

    @property
    def primitive_element(self) -> int:
        return self._exp[1] if self.group_order > 1 else 1

    @property
    def half(self) -> int:
        return self.inv(2 % self.p)

    # ── Arithmetic ──

    def scalar(self, n: int) -> int:
        """Image of an integer in the prime field."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        table = self._add_table
        if table is not None:
            return table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        k = self._log[a] + self._log[b]
        n = self.group_order
        return self._exp[k - n if k >= n else k]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % self.group_order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e % (self.p - 1), self.p)
        return self._exp[(self._log[a] * e) % self.group_order]

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        n = self.group_order
        return n // gcd(self._log[a], n) if self._log[a] else 1

    def elements(self) -> range:
        return range(self.order)

    # ── Digits (extension fields) ──

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _neg_digits(self, a: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a:
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def coefficients(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{m-1}) of an element."""
        digits = []
        for _ in range(self.m):
            digits.append(a % self.p)
            a //= self.p
        return tuple(digits)

    def from_coefficients(self, coeffs) -> int:
        out = 0
        for c in reversed(list(coeffs)):
            out = out * self.p + (c % self.p)
        return out

    def format(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        terms = []
        for k, c in reversed(list(enumerate(self.coefficients(a)))):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            coef = str(c) if (c != 1 or k == 0) else ""
            terms.append(f"{coef}{mono}")
        return "+".join(terms) or "0"

    def __str__(self) -> str:
        return f"F_{self.p}" if self.m == 1 else f"F_{self.p}^{self.m}"


def field_make(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Build F_{p^m}, searching for a default modulus when none is given."""
    if p == 2:
        raise FieldError("p must be odd")
    if p < 2 or not galois.is_prime(p):
        raise FieldError(f"p={p} is not a prime")
    if m < 1 or m > MAX_EXTENSION_DEGREE:
        raise FieldError(f"extension degree m={m} outside 1..{MAX_EXTENSION_DEGREE}")

    base = galois.GF(p)
    if m == 1:
        return FieldSpec(p=p, m=1, modulus=(1, 0))

    if modulus is None:
        if m > DEFAULT_SEARCH_DEGREE:
            raise FieldError(f"m={m} requires an explicit modulus")
        poly = galois.irreducible_poly(p, m, method="min")
    else:
        coeffs = [int(c) % p for c in modulus]
        poly = galois.Poly(coeffs, field=base)
        if poly.degree != m:
            raise FieldError(f"modulus has degree {poly.degree}, expected {m}")
        if int(poly.coeffs[0]) != 1:
            raise FieldError("modulus must be monic")
        if not poly.is_irreducible():
            raise FieldError(f"modulus {poly} is reducible over F_{p}")

    return FieldSpec(p=p, m=m, modulus=tuple(int(c) for c in poly.coeffs))


def root_of_unity(field: FieldSpec, d: int) -> int:
    """An element of multiplicative order exactly d."""
    if d < 1 or field.group_order % d:
        raise FieldError(f"{field} has no primitive {d}-th root of unity (field too small)")
    return field.pow(field.primitive_element, field.group_order // d)

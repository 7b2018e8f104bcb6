"""Exact elements of cyclotomic fields.

A value is stored as its residue modulo the conductor's cyclotomic
polynomial, in the power basis 1, z, ..., z^(phi(N)-1) with z = exp(2 pi i/N).
The conductor is always the smallest one whose field contains the value,
so equal values have equal representations.
"""
from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache

from sympy import divisors, totient

from .errors import ParseError


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact division"
    return out


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row m holds z^m reduced mod Phi_n, for 0 <= m < n."""
    f = cyclotomic_poly(n)
    d = len(f) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(d):
                cur[j] -= top * f[j]
    return tuple(rows)


def reduce_exponents(terms: dict[int, object], n: int) -> list:
    """Reduce a sum of c * z_n^m (m taken mod n) to power-basis coefficients."""
    table = _power_table(n)
    out = [0] * phi(n)
    for m, c in terms.items():
        if c:
            row = table[m % n]
            for j, r in enumerate(row):
                if r:
                    out[j] += c * r
    return out


@lru_cache(maxsize=None)
def _subfield_solver(n: int, d: int):
    """Pivot rows and inverse matrix for writing elements of Q(z_d) inside Q(z_n)."""
    table = _power_table(n)
    step = n // d
    cols = [table[(j * step) % n] for j in range(phi(d))]
    rows = len(cols[0])
    ncol = len(cols)
    mat = [[Fraction(cols[c][r]) for c in range(ncol)] for r in range(rows)]
    pivots = []
    work = [row[:] for row in mat]
    used = set()
    for c in range(ncol):
        for r in range(rows):
            if r not in used and work[r][c] != 0:
                used.add(r)
                pivots.append(r)
                pr = work[r]
                for r2 in range(rows):
                    if r2 != r and work[r2][c] != 0:
                        f = work[r2][c] / pr[c]
                        work[r2] = [a - f * b for a, b in zip(work[r2], pr)]
                break
        else:
            raise ArithmeticError("subfield basis is singular")
    square = [mat[r] for r in pivots]
    inv = _invert(square)
    return tuple(pivots), inv, cols


def _invert(m):
    n = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [a / pv for a in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _halve(terms: dict, n: int) -> dict:
    # n = 2m with m odd: z_n^j = (-1)^j z_m^(j(m+1)/2)
    m = n // 2
    out: dict = {}
    for j, c in terms.items():
        e = (j * ((m + 1) // 2)) % m
        out[e] = out.get(e, 0) + (-c if j % 2 else c)
    return out


def _minimize(coeffs: list, n: int) -> tuple[int, tuple]:
    if not any(coeffs[1:]):
        return 1, (_norm(coeffs[0]),)
    for d in divisors(n):
        if d == 1 or d % 4 == 2:
            continue
        if d == n:
            break
        pivots, inv, cols = _subfield_solver(n, d)
        rhs = [coeffs[r] for r in pivots]
        sol = [sum(row[j] * rhs[j] for j in range(len(rhs))) for row in inv]
        if all(sum(sol[c] * cols[c][r] for c in range(len(sol)) if cols[c][r]) == coeffs[r]
               for r in range(len(coeffs))):
            return d, tuple(_norm(s) for s in sol)
    return n, tuple(_norm(c) for c in coeffs)


class Cyclotomic:
    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int = 1, coeffs=(0,), _canonical: bool = False):
        if _canonical:
            self.conductor = conductor
            self.coeffs = tuple(coeffs)
        else:
            if conductor % 4 == 2:
                terms = _halve({j: c for j, c in enumerate(coeffs) if c}, conductor)
                conductor //= 2
                coeffs = reduce_exponents(terms, conductor)
            coeffs = list(coeffs)
            if len(coeffs) != phi(conductor):
                coeffs = reduce_exponents(dict(enumerate(coeffs)), conductor)
            self.conductor, self.coeffs = _minimize(coeffs, conductor)
        self._hash = None

    @classmethod
    def from_terms(cls, terms: dict[int, object], n: int) -> Cyclotomic:
        """sum of c * exp(2 pi i m / n) over ``terms`` items (m, c)."""
        if n % 4 == 2:
            terms, n = _halve(terms, n), n // 2
        return cls(n, reduce_exponents(terms, n))

    @classmethod
    def root(cls, n: int, j: int = 1) -> Cyclotomic:
        return cls.from_terms({j % n: 1}, n)

    @classmethod
    def rational(cls, q) -> Cyclotomic:
        return cls(1, (_norm(Fraction(q)),), _canonical=True)

    @staticmethod
    def coerce(x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Cyclotomic")

    def lift(self, n: int) -> list:
        """Power-basis coefficients in Q(z_n); n must be a multiple of the conductor."""
        if n == self.conductor:
            return list(self.coeffs)
        step = n // self.conductor
        assert step * self.conductor == n
        return reduce_exponents({j * step: c for j, c in enumerate(self.coeffs) if c}, n)

    def _common(self, other):
        other = Cyclotomic.coerce(other)
        n = math.lcm(self.conductor, other.conductor)
        return n, self.lift(n), other.lift(n)

    def __add__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        n, a, b = self._common(other)
        return Cyclotomic(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs), _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, tuple(_norm(c * other) for c in self.coeffs),
                              _canonical=other != 0) if other != 0 else Cyclotomic.rational(0)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        n, a, b = self._common(other)
        terms: dict[int, object] = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        terms[i + j] = terms.get(i + j, 0) + x * y
        return Cyclotomic(n, reduce_exponents(terms, n))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return NotImplemented

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1)

    def galois(self, a: int) -> Cyclotomic:
        """Image under z -> z^a (a coprime to the conductor)."""
        n = self.conductor
        if n == 1:
            return self
        return Cyclotomic(n, reduce_exponents({(j * a) % n: c for j, c in enumerate(self.coeffs) if c}, n))

    def is_rational(self) -> bool:
        return self.conductor == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __complex__(self):
        n = self.conductor
        return sum(complex(c) * cmath.exp(2j * math.pi * j / n) for j, c in enumerate(self.coeffs))

    def sort_key(self):
        """Smaller conductor first, then larger coefficients first (1 precedes -1)."""
        return (self.conductor, tuple(-c for c in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.conductor == 1 else hash((self.conductor, self.coeffs))
        return self._hash

    def __bool__(self):
        return any(self.coeffs)

    def to_string(self) -> str:
        """Canonical text form: ``<int>`` or terms ``<c>*z(<n>,<j>)``."""
        if self.conductor == 1:
            c = self.coeffs[0]
            return str(c)
        out = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            term = f"{abs(c)}*z({self.conductor},{j})"
            if c < 0:
                out.append("-" + term)
            else:
                out.append(("+" if out else "") + term)
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Cyclotomic({self.to_string()})"

    @classmethod
    def parse(cls, text: str) -> Cyclotomic:
        text = text.strip()
        if not text:
            raise ParseError("empty value")
        pos = 0
        total = cls.rational(0)
        term_re = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(?:\*z\((\d+),(-?\d+)\))?|z\((\d+),(-?\d+)\))")
        first = True
        while pos < len(text):
            m = term_re.match(text, pos)
            if not m or m.end() == pos or (not first and not m.group(1)):
                raise ParseError(f"bad cyclotomic value {text!r}", column=pos + 1)
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(2) or 1) * sign
            order, expo = (m.group(3), m.group(4)) if m.group(3) else (m.group(5), m.group(6))
            if order:
                n = int(order)
                if n < 1:
                    raise ParseError(f"bad root order in {text!r}", column=pos + 1)
                total = total + cls.from_terms({int(expo) % n: coef}, n)
            else:
                total = total + cls.rational(coef)
            pos = m.end()
            first = False
        return total


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)

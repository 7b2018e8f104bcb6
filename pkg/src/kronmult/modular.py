"""Linear algebra and polynomial roots over a prime field F_p."""
from __future__ import annotations

from math import isqrt

from sympy import isprime, primitive_root


def dixon_prime(exponent: int, order: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order)."""
    p = exponent + 1
    while not (isprime(p) and p * p > 4 * order):
        p += exponent
    return p


def root_of_unity(e: int, p: int) -> int:
    """A primitive e-th root of unity mod p (requires e | p - 1)."""
    return pow(int(primitive_root(p)), (p - 1) // e, p)


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of the span of ``rows``; returns (basis, pivots)."""
    rows = [r[:] for r in rows]
    basis: list[list[int]] = []
    pivots: list[int] = []
    if not rows:
        return basis, pivots
    ncol = len(rows[0])
    r0 = 0
    for c in range(ncol):
        piv = next((i for i in range(r0, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        inv = pow(rows[r0][c], -1, p)
        rows[r0] = [(x * inv) % p for x in rows[r0]]
        pr = rows[r0]
        for i in range(len(rows)):
            if i != r0 and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r0 += 1
        if r0 == len(rows):
            break
    return rows[:r0], pivots


def nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {x : mat x = 0}."""
    if not mat:
        return []
    ncol = len(mat[0])
    red, pivots = rref(mat, p)
    free = [c for c in range(ncol) if c not in pivots]
    out = []
    for f in free:
        v = [0] * ncol
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        out.append(v)
    return out


def charpoly(mat: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial (lowest degree first) via Hessenberg reduction."""
    n = len(mat)
    a = [[x % p for x in row] for row in mat]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if a[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            a[m], a[piv] = a[piv], a[m]
            for row in a:
                row[m], row[piv] = row[piv], row[m]
        inv = pow(a[m][m - 1], -1, p)
        for i in range(m + 1, n):
            f = a[i][m - 1] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[m])]
                for row in a:
                    row[m] = (row[m] + f * row[i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        # p_m = (x - a[m-1][m-1]) p_{m-1} - sum_i a[i-1][m-1] prod_j a[j][j-1] p_{i-1}
        prev = polys[m - 1]
        cur = [0] + prev[:]
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - a[m - 1][m - 1] * c) % p
        t = 1
        for i in range(m - 1, 0, -1):
            t = t * a[i][i - 1] % p
            coef = t * a[i - 1][m - 1] % p
            if coef:
                for j, c in enumerate(polys[i - 1]):
                    cur[j] = (cur[j] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _trim(f):
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _polymod(a, b, p):
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
    return _trim(a or [0])


def _polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _polygcd(a, b, p):
    a, b = _trim(a[:]), _trim(b[:])
    while any(b):
        a, b = b, _polymod(a, b, p)
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _powmod(base, e, f, p):
    result = [1]
    base = _polymod(base, f, p)
    while e:
        if e & 1:
            result = _polymod(_polymul(result, base, p), f, p)
        base = _polymod(_polymul(base, base, p), f, p)
        e >>= 1
    return result


def roots(f: list[int], p: int) -> list[int]:
    """Distinct roots in F_p of f (lowest degree first), sorted."""
    f = _trim([x % p for x in f])
    if len(f) <= 1:
        return []
    xp = _powmod([0, 1], p, f, p)
    xp = xp + [0] * (2 - len(xp))
    xp[1] = (xp[1] - 1) % p
    g = _polygcd(f, _trim(xp), p)
    found: list[int] = []
    _split(g, p, found, 0)
    return sorted(found)


def _split(g, p, out, shift):
    deg = len(g) - 1
    if deg == 0:
        return
    if deg == 1:
        out.append((-g[0]) * pow(g[1], -1, p) % p)
        return
    if p == 2:
        out.extend(x for x in (0, 1) if sum(c * x ** i for i, c in enumerate(g)) % 2 == 0)
        return
    # deterministic equal-degree splitting with shifts a = shift, shift+1, ...
    a = shift
    while True:
        h = _powmod([a % p, 1], (p - 1) // 2, g, p)
        h = h + [0] * (1 - len(h) + 1)
        h[0] = (h[0] - 1) % p
        d = _polygcd(g, _trim(h), p)
        if 0 < len(d) - 1 < deg:
            _split(d, p, out, a + 1)
            q = _polydiv(g, d, p)
            _split(q, p, out, a + 1)
            return
        a += 1


def _polydiv(a, b, p):
    a = a[:]
    inv = pow(b[-1], -1, p)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] * inv % p
        out[i] = c
        for j, y in enumerate(b):
            a[i + j] = (a[i + j] - c * y) % p
    return out


def sqrt_mod_bounded(x: int, p: int, bound: int) -> int:
    """The unique d in [1, bound] with d^2 = x (mod p), bound < p/2."""
    for d in range(1, bound + 1):
        if d * d % p == x % p:
            return d
    raise ArithmeticError("no square root in range")


__all__ = ["dixon_prime", "root_of_unity", "rref", "nullspace", "charpoly", "roots",
           "sqrt_mod_bounded", "isqrt"]

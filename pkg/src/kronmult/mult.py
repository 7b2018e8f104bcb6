"""Kronecker and induced multiplicities, their maxima and aggregates."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

import numpy as np

from .chartab import CharacterTable, restrict
from .cyclotomic import Cyclotomic
from .errors import BurnsideViolation, IdentityViolation, IntegralityDefect
from .field import column_blocks

INT64_SAFE = 2 ** 62


def kronecker(t: CharacterTable, rho: int, phi: int, psi: int) -> int:
    """g(rho, phi, psi) = (1/|G|) sum_a |a| conj(rho(a)) phi(a) psi(a), exactly."""
    total = Cyclotomic.rational(0)
    for size, r, f, s in zip(t.class_sizes, t.values[rho], t.values[phi], t.values[psi]):
        total = total + r.conjugate() * f * s * size
    if not total.is_rational():
        raise IntegralityDefect(f"g{rho, phi, psi} is not rational: {total}")
    return _as_multiplicity(total.to_rational() / t.order, (rho, phi, psi))


def _as_multiplicity(q: Fraction, where) -> int:
    if q.denominator != 1 or q < 0:
        raise IntegralityDefect(f"multiplicity {where} = {q} is not a non-negative integer")
    return int(q)


def _fits(*arrays, extra: int) -> bool:
    top = 1
    for a in arrays:
        top *= max(1, int(np.abs(a).max()) if a.size else 1)
    return top * extra < INT64_SAFE


def kron_tensor(t: CharacterTable) -> np.ndarray:
    """All g(rho, phi, psi) as a k x k x k integer array (cached on the table).

    Each unordered pair product phi*psi is formed once per column block and
    paired against every conj(rho) through the field trace.
    """
    cached = getattr(t, "_kron", None)
    if cached is not None:
        return cached
    k, n = t.k, t.order
    blocks = t.blocks()
    dl = math.lcm(*(b.F.D for b in blocks))
    total = np.zeros((k, k, k), dtype=object)
    for blk in blocks:
        F, T = blk.F, blk.array
        sizes = np.array([t.class_sizes[a] for a in blk.columns], dtype=object)
        V = F.traced(F.conj(T)) * sizes[None, :, None]
        extra = len(blk.columns) * F.D ** 3 * 4
        if _fits(V, T, T, extra=extra):
            V, T = V.astype(np.int64), T.astype(np.int64)
        Vflat = V.reshape(k, -1)
        scale = dl // F.D
        for f in range(k):
            P = F.mul(T[f][None, :, :], T[f:])  # psi >= phi
            N = Vflat @ P.reshape(k - f, -1).T
            part = N.astype(object) * scale
            total[:, f, f:] += part
            total[:, f + 1:, f] += part[:, 1:]
    denom = n * dl
    if any(x % denom or x < 0 for x in total.flat):
        bad = next(idx for idx, x in np.ndenumerate(total) if x % denom or x < 0)
        raise IntegralityDefect(f"multiplicity {bad} = {Fraction(total[bad], denom)} "
                                "is not a non-negative integer")
    g = total // denom
    if g.size and int(g.max()) < INT64_SAFE:
        g = g.astype(np.int64)
    t._kron = g
    return g


def kron_max(t: CharacterTable) -> tuple[int, tuple[int, int, int]]:
    """K(G) and the lexicographically least triple attaining it."""
    g = kron_tensor(t)
    flat = int(np.argmax(g))
    idx = np.unravel_index(flat, g.shape)
    return int(g[idx]), tuple(int(i) for i in idx)


def kron_refined_max(t: CharacterTable, rho: int, phi: int) -> tuple[int, int]:
    """max over psi of g(rho, phi, psi), with the least maximising psi."""
    col = kron_tensor(t)[rho, phi]
    psi = int(np.argmax(col))
    return int(col[psi]), psi


def A_from_centralizers(centralizers: Sequence[int]) -> int:
    return sum(int(z) for z in centralizers)


def kron_sum_squares(t: CharacterTable, check: bool = True) -> int:
    """Sum of g^2 over all triples; checked against the sum of centralizer orders."""
    g = kron_tensor(t).astype(object)
    total = int((g * g).sum())
    if check and total != A_from_centralizers(t.centralizers):
        raise IdentityViolation(
            f"{t.name}: sum of squared Kronecker multiplicities {total} "
            f"!= sum of centralizer orders {A_from_centralizers(t.centralizers)}")
    return total


def kron_average(t: CharacterTable) -> Fraction:
    g = kron_tensor(t).astype(object)
    return Fraction(int(g.sum()), t.k ** 3)


def _triple_form(t: CharacterTable):
    """T(a, b, c) = <a b c, 1>, via g(rho, phi, psi) = T(conj rho, phi, psi)."""
    g = kron_tensor(t)
    cj = np.array(t.conj_perm)
    return g[cj, :, :]


def kron_symmetry_check(t: CharacterTable, rho: int, phi: int, psi: int) -> bool:
    """Invariance of <conj(rho) phi psi, 1> under permutations and global conjugation."""
    T = _triple_form(t)
    cj = t.conj_perm
    base = (cj[rho], phi, psi)
    value = T[base]
    if kronecker(t, rho, phi, psi) != value:
        return False
    for a, b, c in permutations(base):
        if T[a, b, c] != value or T[cj[a], cj[b], cj[c]] != value:
            return False
    return True


def kron_symmetry_all(t: CharacterTable):
    """First triple violating the symmetries, or None."""
    T = _triple_form(t)
    cj = np.array(t.conj_perm)
    for axes in permutations(range(3)):
        P = np.transpose(T, axes)
        if not np.array_equal(P, T):
            bad = np.argwhere(P != T)[0]
            return tuple(int(x) for x in bad)
    conjT = T[cj][:, cj][:, :, cj]
    if not np.array_equal(conjT, T):
        return tuple(int(x) for x in np.argwhere(conjT != T)[0])
    return None


@dataclass
class InducedMatrix:
    parent_table: Optional[CharacterTable]
    sub_table: CharacterTable
    fusion: object
    entries: np.ndarray  # k(G) x k(H)
    parent_order: int = 0
    parent_degrees: tuple = ()

    def __post_init__(self):
        if self.parent_table is not None:
            self.parent_order = self.parent_table.order
            self.parent_degrees = self.parent_table.degrees

    @property
    def index(self) -> int:
        return self.parent_order // self.sub_table.order


def induced_matrix(tG: CharacterTable, tH: CharacterTable, fusion) -> InducedMatrix:
    """c(rho, pi) = <rho restricted to H, pi>_H for every pair."""
    restricted = [restrict(tG, fusion, r) for r in range(tG.k)]
    m = InducedMatrix(tG, tH, fusion, _restricted_products(restricted, tH))
    _check_weighted_sums(m)
    return m


def induced_from_restrictions(restricted, degrees, parent_order: int, tH: CharacterTable,
                              fusion) -> InducedMatrix:
    """Same as induced_matrix when only the restricted parent characters are at hand."""
    m = InducedMatrix(None, tH, fusion, _restricted_products(restricted, tH),
                      parent_order=parent_order, parent_degrees=tuple(degrees))
    _check_weighted_sums(m)
    return m


def _restricted_products(restricted, tH: CharacterTable) -> np.ndarray:
    kG, kH = len(restricted), tH.k
    columns = [[restricted[r][b] for r in range(kG)] + [tH.values[p][b] for p in range(kH)]
               for b in range(kH)]
    blocks = column_blocks(columns)
    dl = math.lcm(*(b.F.D for b in blocks))
    total = np.zeros((kG, kH), dtype=object)
    for blk in blocks:
        F, arr = blk.F, blk.array
        R, Hv = arr[:kG], arr[kG:]
        sizes = np.array([tH.class_sizes[b] for b in blk.columns], dtype=object)
        V = F.traced(R) * sizes[None, :, None]
        W = F.conj(Hv)
        total += (V.reshape(kG, -1) @ W.reshape(kH, -1).T) * (dl // F.D)
    denom = tH.order * dl
    for (r, p), x in np.ndenumerate(total):
        if x % denom or x < 0:
            raise IntegralityDefect(f"c({r},{p}) = {Fraction(x, denom)} is not a non-negative integer")
    return (total // denom).astype(np.int64)


def _check_weighted_sums(m: InducedMatrix) -> None:
    c = m.entries.astype(object)
    dG = np.array(m.parent_degrees, dtype=object)
    dH = np.array(m.sub_table.degrees, dtype=object)
    if not np.array_equal(dG @ c, dH * m.index):
        raise IdentityViolation("sum_rho c(rho,pi) rho(1) != [G:H] pi(1)")
    if not np.array_equal(c @ dH, dG):
        raise IdentityViolation("sum_pi c(rho,pi) pi(1) != rho(1)")


def induced_max(m: InducedMatrix) -> tuple[int, tuple[int, int]]:
    flat = int(np.argmax(m.entries))
    idx = np.unravel_index(flat, m.entries.shape)
    return int(m.entries[idx]), (int(idx[0]), int(idx[1]))


def LR_rhs(fusion) -> Fraction:
    """sum over H-classes of z(G)/z(H)."""
    return sum((Fraction(zg, zh) for zg, zh in zip(fusion.z_parent, fusion.z_sub)), Fraction(0))


def induced_sum_squares(m: InducedMatrix, check: bool = True) -> int:
    c = m.entries.astype(object)
    total = int((c * c).sum())
    if check and total != LR_rhs(m.fusion):
        raise IdentityViolation(f"sum of c^2 = {total} != sum z(G)/z(H) = {LR_rhs(m.fusion)}")
    return total


def epsilon(degrees: Sequence[int], order: int) -> Fraction:
    """(order - M b^2) / b^2 with b the top degree and M its multiplicity."""
    if sum(d * d for d in degrees) != order:
        raise BurnsideViolation("squared degrees do not sum to the order")
    b = max(degrees)
    M = sum(1 for d in degrees if d == b)
    return Fraction(order - M * b * b, b * b)


def snyder_e(degrees: Sequence[int], order: int) -> Fraction:
    """e(G) defined by b (b + e) = |G|."""
    b = max(degrees)
    return Fraction(order, b) - b

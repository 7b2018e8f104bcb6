"""Character tables, class data, and exact operations on them."""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import ConsistencyError, FusionMismatch
from .field import CyclotomicField, column_blocks, field, lift_matrix, small_ints


class CharacterTable:
    """Irreducible characters of a finite group.

    Rows are irreducible characters, columns are conjugacy classes with the
    identity class in column 0.  Values are canonical :class:`Cyclotomic`.
    """

    def __init__(self, name: str, order: int, centralizers: Sequence[int],
                 values: Sequence[Sequence[Cyclotomic]], group=None):
        self.name = name
        self.order = int(order)
        self.centralizers = tuple(int(z) for z in centralizers)
        self.class_sizes = tuple(self.order // z for z in self.centralizers)
        self.values = tuple(tuple(Cyclotomic.coerce(v) for v in row) for row in values)
        self.degrees = tuple(int(row[0].to_rational()) for row in self.values)
        self.conj_perm = _conjugation_permutation(self.values)
        self.group = group
        self._arrays = None
        self._blocks = None

    @property
    def k(self) -> int:
        return len(self.centralizers)

    @property
    def b(self) -> int:
        return max(self.degrees)

    def __eq__(self, other):
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return (self.name, self.order, self.centralizers, self.class_sizes, self.values,
                self.degrees, self.conj_perm) == (other.name, other.order, other.centralizers,
                                                  other.class_sizes, other.values,
                                                  other.degrees, other.conj_perm)

    def __repr__(self):
        return f"CharacterTable({self.name!r}, order={self.order}, k={self.k})"

    def conductor(self) -> int:
        return math.lcm(*(v.conductor for row in self.values for v in row))

    def arrays(self) -> tuple[CyclotomicField, np.ndarray]:
        """(field, values embedded as an object array of shape (k, k, D))."""
        if self._arrays is None:
            F = field(self.conductor())
            self._arrays = (F, F.embed([list(r) for r in self.values]))
        return self._arrays

    def is_real(self) -> bool:
        return all(i == j for i, j in enumerate(self.conj_perm))

    def validate(self) -> None:
        """Raise ConsistencyError unless Burnside and both orthogonality relations hold exactly."""
        if sum(self.class_sizes) != self.order or any(
                s * z != self.order for s, z in zip(self.class_sizes, self.centralizers)):
            raise ConsistencyError(f"{self.name}: class sizes do not sum to the group order")
        if sum(d * d for d in self.degrees) != self.order:
            raise ConsistencyError(f"{self.name}: Burnside identity fails")
        if any(v != 1 for v in self.values[0]) and not any(all(v == 1 for v in r) for r in self.values):
            raise ConsistencyError(f"{self.name}: no trivial character")
        k, n = self.k, self.order
        L = self.conductor()
        FL = field(L)
        blocks = self.blocks()
        # rows: sum_a |a| chi_i(a) conj(chi_j(a)) = |G| delta_ij
        gram = np.zeros((k, k, FL.D), dtype=object)
        for blk in blocks:
            F = blk.F
            T, = small_ints(blk.array)
            sizes = np.array([self.class_sizes[a] for a in blk.columns], dtype=T.dtype)
            prod = F.mul(T[:, None, :, :], F.conj(T)[None, :, :, :])
            part = np.einsum("ijad,a->ijd", prod, sizes).astype(object)
            gram += part @ lift_matrix(F.L, L)
        expect = np.zeros_like(gram)
        for i in range(k):
            expect[i, i, 0] = n
        if not np.array_equal(gram, expect):
            raise ConsistencyError(f"{self.name}: row orthogonality fails")
        # columns: sum_chi chi(a) conj(chi(b)) = z_a delta_ab
        for b1 in blocks:
            for b2 in blocks:
                if b2.F.L < b1.F.L:
                    continue
                c = math.lcm(b1.F.L, b2.F.L)
                F = field(c)
                A, B = small_ints(b1.array @ lift_matrix(b1.F.L, c), b2.array @ lift_matrix(b2.F.L, c))
                gram = F.mul(A[:, :, None, :], F.conj(B)[:, None, :, :]).sum(axis=0)
                for x, a in enumerate(b1.columns):
                    for y, bb in enumerate(b2.columns):
                        want = self.centralizers[a] if a == bb else 0
                        if gram[x, y, 0] != want or any(gram[x, y, 1:]):
                            raise ConsistencyError(f"{self.name}: column orthogonality fails")

    def blocks(self):
        """Columns grouped by conductor (see :func:`field.column_blocks`)."""
        if self._blocks is None:
            self._blocks = column_blocks([[row[a] for row in self.values] for a in range(self.k)])
        return self._blocks


def _conjugation_permutation(values) -> tuple[int, ...]:
    lookup = {row: i for i, row in enumerate(values)}
    perm = []
    for row in values:
        conj = tuple(v.conjugate() for v in row)
        if conj not in lookup:
            return tuple(range(len(values)))
        perm.append(lookup[conj])
    return tuple(perm)


def sort_rows(values):
    """Degree ascending, then lexicographic on canonical value vectors."""
    return sorted(values, key=lambda row: (row[0].to_rational(), tuple(v.sort_key() for v in row)))


def inner_product(t: CharacterTable, a, b) -> Fraction:
    """<a, b> = (1/|G|) sum_alpha |alpha| a(alpha) conj(b(alpha)).

    ``a`` and ``b`` are row indices or explicit class functions.
    """
    u = t.values[a] if isinstance(a, int) else a
    v = t.values[b] if isinstance(b, int) else b
    total = Cyclotomic.rational(0)
    for size, x, y in zip(t.class_sizes, u, v):
        total = total + x * Cyclotomic.coerce(y).conjugate() * size
    if not total.is_rational():
        raise ArithmeticError("inner product of class functions is not rational")
    return total.to_rational() / t.order


def conjugate_irrep(t: CharacterTable, row: int) -> int:
    return t.conj_perm[row]


def restrict(tG: CharacterTable, fusion, row) -> tuple[Cyclotomic, ...]:
    """Values of a character of G on the classes of H."""
    G = fusion.embedding.parent if fusion.embedding is not None else None
    if G is not None and (G.order != tG.order
                          or tuple(c.centralizer_order for c in G.classes) != tG.centralizers):
        raise FusionMismatch(f"fusion targets {G.name}, table belongs to {tG.name}")
    if len(fusion.z_parent) and max(fusion.fusion) >= tG.k:
        raise FusionMismatch("fusion refers to classes outside the table")
    if any(tG.centralizers[f] != z for f, z in zip(fusion.fusion, fusion.z_parent)):
        raise FusionMismatch("fusion centralizer orders disagree with the table")
    values = tG.values[row] if isinstance(row, int) else row
    return tuple(values[f] for f in fusion.fusion)


@dataclass
class ClassData:
    """Class-level data of a group too large to enumerate."""

    name: str
    order: int
    centralizers: list[int]
    degrees: Optional[list[int]] = None
    values: Optional[list[list[Cyclotomic]]] = dc_field(default=None, repr=False)

    @property
    def k(self) -> int:
        return len(self.centralizers)

    def validate(self) -> None:
        if not self.centralizers or self.centralizers[0] != self.order:
            raise ConsistencyError("first centralizer order must equal the group order")
        if sum(Fraction(self.order, z) for z in self.centralizers) != self.order:
            raise ConsistencyError("sum of |G|/z over classes differs from |G|")
        if self.degrees is not None:
            if len(self.degrees) != self.k:
                raise ConsistencyError(f"expected {self.k} degrees, got {len(self.degrees)}")
            if sum(d * d for d in self.degrees) != self.order:
                raise ConsistencyError("sum of squared degrees differs from |G|")

    def to_table(self) -> CharacterTable:
        if self.values is None:
            raise ConsistencyError(f"{self.name}: class data carries no character values")
        return CharacterTable(self.name, self.order, self.centralizers, self.values)


def product_table(t1: CharacterTable, t2: CharacterTable, name: str | None = None) -> CharacterTable:
    """Table of a direct product; class (a, b) sits at column a * k2 + b."""
    values = [[x * y for x in r1 for y in r2] for r1 in t1.values for r2 in t2.values]
    cents = [z1 * z2 for z1 in t1.centralizers for z2 in t2.centralizers]
    return CharacterTable(name or f"prod({t1.name},{t2.name})", t1.order * t2.order, cents,
                          sort_rows(values))


@dataclass
class TableFusion:
    """Class fusion known from table structure alone (no embedding object)."""

    fusion: list[int]
    z_sub: list[int]
    z_parent: list[int]
    embedding: object = None


def diagonal_fusion(t: CharacterTable, product: CharacterTable | None = None,
                    factor: bool = False) -> TableFusion:
    """Fusion of H into H x H, diagonally or as H x 1; centralizers from t when product is None."""
    k = t.k
    fus = [a * k + (0 if factor else a) for a in range(k)]
    z_sub = list(t.centralizers)
    if product is None:
        z_parent = [z * (t.order if factor else z) for z in z_sub]
    else:
        z_parent = [product.centralizers[f] for f in fus]
    return TableFusion(fus, z_sub, z_parent)

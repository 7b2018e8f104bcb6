"""Vectorised arithmetic in a fixed cyclotomic field Q(z_L).

Whole character tables are embedded as integer arrays of shape (..., D),
D = phi(L), so that products and inner products over all classes run as
numpy operations.  Arrays use int64 when a bound check allows it and
Python integers (object dtype) otherwise.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from sympy import mobius

from .cyclotomic import Cyclotomic, _power_table, phi

INT64_SAFE = 2 ** 62


def _ramanujan(n: int, m: int) -> int:
    """Trace of z_n^m from Q(z_n) to Q."""
    g = math.gcd(m, n)
    q = n // g
    return int(mobius(q)) * phi(n) // phi(q)


class CyclotomicField:
    def __init__(self, conductor: int):
        self.L = conductor
        self.D = phi(conductor)
        table = _power_table(conductor)
        D, L = self.D, self.L
        self.reducer = np.array([table[m % L] for m in range(2 * D - 1)], dtype=object)
        self.conj_matrix = np.array([table[(-j) % L] for j in range(D)], dtype=object)
        self.trace_matrix = np.array([[_ramanujan(L, i + j) for j in range(D)] for i in range(D)],
                                     dtype=object)

    def embed(self, values) -> np.ndarray:
        """Array of coefficient vectors for a nested list of Cyclotomic values."""
        flat = []
        shape = []

        def walk(x, depth):
            if isinstance(x, (list, tuple)):
                if len(shape) <= depth:
                    shape.append(len(x))
                for y in x:
                    walk(y, depth + 1)
            else:
                flat.append(Cyclotomic.coerce(x).lift(self.L))

        walk(values, 0)
        arr = np.array(flat, dtype=object).reshape(*shape, self.D)
        return arr

    def to_cyclotomic(self, vec) -> Cyclotomic:
        return Cyclotomic(self.L, [int(c) if not hasattr(c, "denominator") or c.denominator == 1 else c
                                   for c in vec])

    def cast(self, *arrays, bound=None):
        """Convert to int64 when every entry and the stated result bound fit."""
        if bound is not None and bound < INT64_SAFE:
            if all(_maxabs(a) < INT64_SAFE for a in arrays):
                return tuple(a.astype(np.int64) for a in arrays)
        return tuple(a.astype(object) for a in arrays)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        D = self.D
        a, b = np.broadcast_arrays(a, b)
        dtype = np.result_type(a.dtype, b.dtype)
        conv = np.zeros(a.shape[:-1] + (2 * D - 1,), dtype=dtype)
        for i in range(D):
            conv[..., i:i + D] += a[..., i:i + 1] * b
        return conv @ self.reducer.astype(dtype)

    def conj(self, a: np.ndarray) -> np.ndarray:
        return a @ self.conj_matrix.astype(a.dtype)

    def traced(self, a: np.ndarray) -> np.ndarray:
        """Vectors t with t . b = Tr(a b)."""
        return a @ self.trace_matrix.astype(a.dtype)


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


@lru_cache(maxsize=32)
def field(conductor: int) -> CyclotomicField:
    return CyclotomicField(conductor)


@lru_cache(maxsize=256)
def lift_matrix(small: int, large: int) -> np.ndarray:
    """Integer matrix taking Q(z_small) coefficients to Q(z_large) coefficients."""
    step = large // small
    table = _power_table(large)
    return np.array([table[(j * step) % large] for j in range(phi(small))], dtype=object)


class Block:
    """Columns sharing one conductor, embedded in their own small field."""

    def __init__(self, F: CyclotomicField, columns: list[int], array: np.ndarray):
        self.F = F
        self.columns = columns
        self.array = array

    def __repr__(self):
        return f"Block(L={self.F.L}, columns={self.columns})"


def column_blocks(columns) -> list[Block]:
    """Group columns (lists of Cyclotomic) by the conductor of their field."""
    groups: dict[int, list[int]] = {}
    for idx, col in enumerate(columns):
        c = math.lcm(*(Cyclotomic.coerce(v).conductor for v in col))
        groups.setdefault(c, []).append(idx)
    blocks = []
    for c in sorted(groups):
        F = field(c)
        cols = groups[c]
        arr = F.embed([[columns[a][r] for a in cols] for r in range(len(columns[0]))])
        blocks.append(Block(F, cols, arr))
    return blocks


def small_ints(*arrays) -> tuple:
    """int64 copies when every array fits comfortably, else the arrays unchanged."""
    if all(a.size == 0 or _maxabs(a) < 2 ** 20 for a in arrays):
        return tuple(a.astype(np.int64) for a in arrays)
    return arrays

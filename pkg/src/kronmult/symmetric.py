"""Partition combinatorics and symmetric-group character data."""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .chartab import CharacterTable
from .cyclotomic import Cyclotomic
from .errors import CapExceeded
from .mult import epsilon

SN_CAP = 60
TABLE_CAP = 12

#: exponents in the Vershik-Kerov window for b(S_n)
VK_C1 = math.pi * math.sqrt(1 / 6)
VK_C2 = (math.pi - 2) / math.pi ** 2


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if p)
        if any(a < b for a, b in zip(parts, parts[1:])) or any(p < 0 for p in parts):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def hooks(self) -> list[int]:
        conj = self.conjugate()
        return [self[i] - j + conj[j] - i - 1 for i in range(len(self)) for j in range(self[i])]

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1^n) last."""
    if n == 0:
        yield Partition()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for p in rec(n, n):
        yield Partition(p)


_counts = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    while len(_counts) <= n:
        m = len(_counts)
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * _counts[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * _counts[m - g2]
            j += 1
        _counts.append(total)
    return _counts[n]


def hook_degree(lam) -> int:
    """chi^lambda(1) = n! / product of hook lengths."""
    lam = Partition(lam)
    num = math.factorial(lam.n)
    den = math.prod(lam.hooks())
    d, r = divmod(num, den)
    assert r == 0
    return d


def involution_numbers(n: int) -> list[int]:
    """t(0..n) from t(m) = t(m-1) + (m-1) t(m-2)."""
    t = [1, 1]
    for m in range(2, n + 1):
        t.append(t[m - 1] + (m - 1) * t[m - 2])
    return t[: n + 1]


@dataclass
class SnDegreeStats:
    n: int
    p: int
    b: int
    M: int
    f: int
    epsilon: Fraction
    argmax: list[Partition]
    f_fibers: dict[int, list[Partition]]
    degree_sum: int

    def row(self) -> dict:
        return {"n": self.n, "p": self.p, "b": self.b, "M": self.M, "f": self.f,
                "epsilon": self.epsilon}


def sn_degree_stats(n: int, cap: int = SN_CAP) -> SnDegreeStats:
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the configured cap {cap}")
    fibers: dict[int, list[Partition]] = defaultdict(list)
    for lam in partitions(n):
        fibers[hook_degree(lam)].append(lam)
    b = max(fibers)
    f = max(len(v) for v in fibers.values())
    degrees = [d for d, v in fibers.items() for _ in v]
    return SnDegreeStats(
        n=n, p=len(degrees), b=b, M=len(fibers[b]), f=f,
        epsilon=epsilon(degrees, math.factorial(n)),
        argmax=fibers[b],
        f_fibers={d: v for d, v in sorted(fibers.items()) if len(v) == f},
        degree_sum=sum(degrees),
    )


def hardy_ramanujan(n: int) -> float:
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


def vk_window(n: int) -> tuple[float, float]:
    """Informational (sqrt(n!) e^(-c1 sqrt n), sqrt(n!) e^(-c2 sqrt n)); asymptotic only."""
    log_root = 0.5 * math.lgamma(n + 1)
    return (math.exp(log_root - VK_C1 * math.sqrt(n)), math.exp(log_root - VK_C2 * math.sqrt(n)))


def _beta(lam) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return Partition(b - (ell - 1 - i) for i, b in enumerate(beta))


@lru_cache(maxsize=None)
def mn_value(lam: Partition, mu: tuple[int, ...]) -> int:
    """chi^lambda on cycle type mu by removing border strips (beta-set form)."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta(lam)
    occupied = set(beta)
    total = 0
    for x in beta:
        y = x - r
        if y < 0 or y in occupied:
            continue
        height = sum(1 for b in beta if y < b < x)
        new = _from_beta([y if b == x else b for b in beta])
        total += (-1) ** height * mn_value(new, rest)
    return total


def cycle_type_class(mu) -> tuple[int, int, int]:
    """(class size, centralizer order, element order) for cycle type mu."""
    n = sum(mu)
    z = 1
    for part, mult in Counter(mu).items():
        z *= part ** mult * math.factorial(mult)
    return math.factorial(n) // z, z, math.lcm(*mu) if mu else 1


def sn_character_table(n: int, cap: int = TABLE_CAP) -> CharacterTable:
    """Integer character table of S_n via Murnaghan-Nakayama.

    Rows follow partitions in reverse-lex order; columns put the identity
    first, then increase by (class size, element order, cycle type).
    """
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the table cap {cap}")
    lams = list(partitions(n))
    types = list(partitions(n))
    types.sort(key=lambda mu: (mu != Partition([1] * n), *cycle_type_class(mu)[0:1],
                               cycle_type_class(mu)[2], tuple(mu)))
    values = [[Cyclotomic.rational(mn_value(lam, tuple(mu))) for mu in types] for lam in lams]
    t = CharacterTable(f"s:{n}", math.factorial(n), [cycle_type_class(mu)[1] for mu in types], values)
    t.row_labels = lams
    t.class_labels = types
    return t

"""Slow, independent reference computations used only by the tests."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction


def brute_classes(elements):
    """Conjugacy classes by conjugating every element by every element."""
    elements = list(elements)
    seen, classes = set(), []
    for x in elements:
        if x in seen:
            continue
        orbit = set()
        for g in elements:
            ginv = [0] * len(g)
            for i, gi in enumerate(g):
                ginv[gi] = i
            # g^-1 x g with left-to-right composition
            orbit.add(tuple(g[x[ginv[i]]] for i in range(len(g))))
        seen |= orbit
        classes.append(orbit)
    return classes


def dp_partition_count(n: int) -> int:
    """p(n) by the coin-change recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            ways[m] += ways[m - part]
    return ways[n]


def cycle_type(perm) -> tuple:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def _rim_hooks(lam, r):
    """Partitions obtained by removing a rim hook of length r, with the hook's height."""
    cells = {(i, j) for i, row in enumerate(lam) for j in range(row)}
    out = []
    # a rim hook is a connected skew shape of r cells with no 2x2 square whose removal
    # leaves a partition; search over candidate shapes by brute force on the rim
    rim = [(i, j) for (i, j) in cells if (i + 1, j + 1) not in cells]
    for subset in itertools.combinations(rim, r):
        rest = cells - set(subset)
        rows = [sum(1 for (i, j) in rest if i == k) for k in range(len(lam))]
        if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
            continue
        if any((i, j) not in rest and j < rows[i] for (i, j) in subset):
            continue
        if {(i, j) for i in range(len(rows)) for j in range(rows[i])} != rest:
            continue
        if not _connected(subset):
            continue
        height = len({i for i, _ in subset}) - 1
        out.append((tuple(x for x in rows if x), height))
    return out


def _connected(cells) -> bool:
    cells = set(cells)
    start = next(iter(cells))
    stack, seen = [start], {start}
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def naive_sn_character(lam, mu) -> int:
    """chi^lam on cycle type mu by rim-hook removal on the diagram."""
    lam = tuple(x for x in lam if x)
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum((-1) ** h * naive_sn_character(nu, rest) for nu, h in _rim_hooks(lam, r))


def naive_partitions(n: int, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in naive_partitions(n - first, first):
            yield (first,) + rest


def elementwise_kronecker_sn(n: int):
    """g(rho, phi, psi) for S_n by summing chi_rho chi_phi chi_psi over all n! elements.

    Characters of S_n are real, so no conjugation is needed.
    Returns (partitions, dict[(a, b, c)] -> int).
    """
    parts = list(naive_partitions(n))
    counts: dict[tuple, int] = {}
    for perm in itertools.permutations(range(n)):
        mu = cycle_type(perm)
        counts[mu] = counts.get(mu, 0) + 1
    chi = {(lam, mu): naive_sn_character(lam, mu) for lam in parts for mu in counts}
    out = {}
    order = math.factorial(n)
    for a, b, c in itertools.product(range(len(parts)), repeat=3):
        total = sum(cnt * chi[parts[a], mu] * chi[parts[b], mu] * chi[parts[c], mu]
                    for mu, cnt in counts.items())
        q = Fraction(total, order)
        assert q.denominator == 1
        out[a, b, c] = int(q)
    return parts, out

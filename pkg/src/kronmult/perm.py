"""Permutations on {0, ..., n-1} stored as image tuples."""
from __future__ import annotations

import math
import re

from .errors import InvalidPermutation, ParseError


def compose(p: tuple, q: tuple) -> tuple:
    """Return p then q, i.e. the map i -> q[p[i]]."""
    return tuple(map(q.__getitem__, p))


def invert(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(x: tuple, g: tuple) -> tuple:
    """g^-1 x g."""
    return compose(compose(invert(g), x), g)


def identity(n: int) -> tuple:
    return tuple(range(n))


def cycles_of(p: tuple) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: tuple) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles_of(p)), reverse=True))


def order_of(p: tuple) -> int:
    return math.lcm(*(len(c) for c in cycles_of(p))) if p else 1


class Permutation:
    """A bijection of {0, ..., degree-1} given by its image array."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree or a in seen:
                    raise InvalidPermutation(f"bad cycle {cyc} for degree {degree}")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + tuple(cyc[:1])):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None, one_based: bool = True) -> Permutation:
        """Parse cycle notation such as ``(1 2)(3 4 5)``."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(degree or 0)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", text):
            raise ParseError(f"bad cycle notation: {text!r}")
        shift = 1 if one_based else 0
        cycles = [tuple(int(a) - shift for a in re.split(r"[\s,]+", body.strip()))
                  for body in re.findall(r"\(([^)]*)\)", text)]
        top = max(max(c) for c in cycles) + 1
        if degree is None:
            degree = top
        elif top > degree:
            raise InvalidPermutation(f"point {top - 1 + shift} exceeds degree {degree}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(compose(self.images, other.images))

    def inverse(self) -> Permutation:
        return Permutation(invert(self.images))

    def order(self) -> int:
        return order_of(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        return [c for c in cycles_of(self.images) if len(c) > 1]

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self.images)

    def padded(self, degree: int, offset: int = 0) -> Permutation:
        """Act on points offset..offset+self.degree-1 of a larger set."""
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[i + offset] = j + offset
        return Permutation(images)

    def to_string(self, one_based: bool = True) -> str:
        shift = 1 if one_based else 0
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(a + shift) for a in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.to_string(one_based=False)}, degree={self.degree})"

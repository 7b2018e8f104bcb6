"""Finite permutation groups by full enumeration.

Everything here is desk scale: groups are enumerated element by element,
conjugacy classes are full conjugation orbits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from sympy import factorint, multiplicity

from .errors import CapExceeded, NotASubgroup
from .perm import Permutation, compose, identity, invert, order_of

DEFAULT_CAP = 250_000


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    centralizer_order: int
    element_order: int
    members: tuple[int, ...] = field(repr=False, compare=False)


class FiniteGroup:
    """A permutation group with every element enumerated.

    ``elements[0]`` is always the identity; ``classes[0]`` is the identity
    class.  ``family`` carries optional annotations (Lie rank, field size)
    attached by the family constructors.
    """

    def __init__(self, degree, generators, elements, name="G", family=None):
        self.degree = degree
        self.generators = list(generators)
        self.elements = elements
        self.name = name
        self.family = dict(family or {})
        self.index = {x: i for i, x in enumerate(elements)}
        self.classes, self.class_of = _compute_classes(self)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def k(self) -> int:
        return len(self.classes)

    def element(self, i: int) -> Permutation:
        return Permutation(self.elements[i])

    def contains(self, p) -> bool:
        images = p.images if isinstance(p, Permutation) else tuple(p)
        return images in self.index

    def mul(self, i: int, j: int) -> int:
        return self.index[compose(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.index[invert(self.elements[i])]

    def class_index(self, p) -> int:
        images = p.images if isinstance(p, Permutation) else tuple(p)
        return self.class_of[self.index[images]]

    def exponent(self) -> int:
        return math.lcm(*(c.element_order for c in self.classes))

    def is_abelian(self) -> bool:
        return self.k == self.order

    def power_map(self, cls: int, m: int) -> int:
        """Class containing the m-th power of elements of class ``cls``."""
        x = self.classes[cls].representative.images
        y = identity(self.degree)
        base, e = x, m % self.classes[cls].element_order
        while e:
            if e & 1:
                y = compose(y, base)
            base = compose(base, base)
            e >>= 1
        return self.class_of[self.index[y]]

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order}, degree={self.degree}, k={self.k})"


def _closure(gen_images: Sequence[tuple], degree: int, cap: int) -> list[tuple]:
    """Breadth-first closure; each layer sorted lexicographically."""
    e = identity(degree)
    elements = [e]
    seen = {e}
    frontier = [e]
    while frontier:
        layer = set()
        for x in frontier:
            for g in gen_images:
                y = compose(x, g)
                if y not in seen:
                    layer.add(y)
                    seen.add(y)
        if len(seen) > cap:
            raise CapExceeded(f"closure exceeds element cap {cap}")
        frontier = sorted(layer)
        elements.extend(frontier)
    return elements


def build_group(generators, degree: int, cap: int = DEFAULT_CAP, name: str = "G",
                family=None) -> FiniteGroup:
    gens = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree != degree:
            g = g.padded(degree) if g.degree < degree else _bad_degree(g, degree)
        gens.append(g)
    elements = _closure([g.images for g in gens], degree, cap)
    return FiniteGroup(degree, gens, elements, name=name, family=family)


def _bad_degree(g, degree):
    from .errors import InvalidPermutation
    raise InvalidPermutation(f"{g} does not act on {degree} points")


def _compute_classes(G: FiniteGroup):
    n = len(G.elements)
    gens = [g.images for g in G.generators]
    gens_inv = [invert(g) for g in gens]
    assigned = [-1] * n
    orbits = []
    for start in range(n):
        if assigned[start] >= 0:
            continue
        tag = len(orbits)
        assigned[start] = tag
        orbit = [start]
        todo = [G.elements[start]]
        while todo:
            x = todo.pop()
            for g, gi in zip(gens, gens_inv):
                y = compose(compose(gi, x), g)
                j = G.index[y]
                if assigned[j] < 0:
                    assigned[j] = tag
                    orbit.append(j)
                    todo.append(y)
        orbits.append(orbit)

    def sort_key(orbit):
        rep = min(G.elements[i] for i in orbit)
        return (rep != G.elements[0], len(orbit), order_of(rep), rep)

    keyed = sorted((sort_key(o), o) for o in orbits)
    classes = []
    class_of = [0] * n
    for ci, (key, orbit) in enumerate(keyed):
        for i in orbit:
            class_of[i] = ci
        classes.append(ConjugacyClass(
            representative=Permutation(key[3]),
            size=len(orbit),
            centralizer_order=n // len(orbit),
            element_order=key[2],
            members=tuple(sorted(orbit)),
        ))
    return classes, class_of


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    return G.classes


def subgroup_closure(G: FiniteGroup, gen_images: Sequence[tuple]) -> set[tuple]:
    """Element set of the subgroup of G generated by ``gen_images``."""
    e = G.elements[0]
    seen = {e}
    todo = [e]
    gens = [g for g in gen_images if g != e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def normal_closure(G: FiniteGroup, gen_images: Sequence[tuple]) -> set[tuple]:
    gens = set(gen_images)
    conj = [(invert(g.images), g.images) for g in G.generators]
    while True:
        sub = subgroup_closure(G, sorted(gens))
        extra = set()
        for x in gens:
            for gi, g in conj:
                y = compose(compose(gi, x), g)
                if y not in sub:
                    extra.add(y)
        if not extra:
            return sub
        gens |= extra


def commutator_subgroup_with(G: FiniteGroup, N: set[tuple]) -> set[tuple]:
    """[N, G] for a normal subgroup N."""
    comms = set()
    for x in N:
        xi = invert(x)
        for g in G.generators:
            gi = invert(g.images)
            comms.add(compose(compose(xi, gi), compose(x, g.images)))
    return normal_closure(G, sorted(comms))


def nilpotency_class(G: FiniteGroup) -> Optional[int]:
    """Length of the lower central series, or None if G is not nilpotent."""
    # nilpotent iff every Sylow subgroup is normal, iff the p-elements number |G|_p
    for p in factorint(G.order):
        part = p ** multiplicity(p, G.order)
        count = sum(c.size for c in G.classes if part % c.element_order == 0)
        if count != part:
            return None
    current = set(G.elements)
    c = 0
    while len(current) > 1:
        nxt = commutator_subgroup_with(G, current)
        if len(nxt) == len(current):
            return None
        current = nxt
        c += 1
    return c


def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    for cls in G.classes[1:]:
        if len(normal_closure(G, [cls.representative.images])) < G.order:
            return False
    return True


def center_order(G: FiniteGroup) -> int:
    return sum(1 for c in G.classes if c.size == 1)


def involution_count(G: FiniteGroup) -> int:
    """#{x : x^2 = 1}, identity included."""
    return sum(c.size for c in G.classes if c.element_order <= 2)


@dataclass
class SubgroupEmbedding:
    parent: FiniteGroup
    sub: FiniteGroup
    inclusion: list[int]
    label: str = ""

    @property
    def index(self) -> int:
        return self.parent.order // self.sub.order


def embed(parent: FiniteGroup, sub_generators, name: str | None = None,
          cap: int = DEFAULT_CAP) -> SubgroupEmbedding:
    gens = []
    for g in sub_generators:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree < parent.degree:
            g = g.padded(parent.degree)
        if not parent.contains(g):
            raise NotASubgroup(f"{g} is not an element of {parent.name}")
        gens.append(g)
    sub = build_group(gens, parent.degree, cap=cap, name=name or f"<{len(gens)} gens>")
    if parent.order % sub.order:
        raise NotASubgroup("subgroup order does not divide parent order")
    inclusion = [parent.index[x] for x in sub.elements]
    return SubgroupEmbedding(parent, sub, inclusion, label=f"{parent.name}>{sub.name}")


def direct_product(A: FiniteGroup, B: FiniteGroup, cap: int = DEFAULT_CAP,
                   name: str | None = None) -> FiniteGroup:
    n = A.degree + B.degree
    if A.order * B.order > cap:
        raise CapExceeded(f"{A.name} x {B.name} has {A.order * B.order} elements, cap {cap}")
    gens = [g.padded(n) for g in A.generators] + [g.padded(n, A.degree) for g in B.generators]
    return build_group(gens, n, cap=cap, name=name or f"prod({A.name},{B.name})")


def embed_diagonal(H: FiniteGroup, factor: bool = False, cap: int = DEFAULT_CAP) -> SubgroupEmbedding:
    """H inside H x H, diagonally or (``factor=True``) as H x 1."""
    parent = direct_product(H, H, cap=cap, name=f"prod({H.name},{H.name})")
    n = parent.degree
    if factor:
        gens = [g.padded(n) for g in H.generators]
        label = f"factor({H.name})"
    else:
        gens = [Permutation(g.images + tuple(i + H.degree for i in g.images)) for g in H.generators]
        label = f"diag({H.name})"
    emb = embed(parent, gens, name=label, cap=cap)
    emb.label = label
    return emb


@dataclass
class ClassFusion:
    embedding: SubgroupEmbedding
    fusion: list[int]
    z_sub: list[int]
    z_parent: list[int]


def class_fusion(e: SubgroupEmbedding) -> ClassFusion:
    G, H = e.parent, e.sub
    fusion = [G.class_of[e.inclusion[c.members[0]]] for c in H.classes]
    return ClassFusion(
        embedding=e,
        fusion=fusion,
        z_sub=[c.centralizer_order for c in H.classes],
        z_parent=[G.classes[f].centralizer_order for f in fusion],
    )


@dataclass
class GroupStats:
    order: int
    k: int
    b: int
    e: object
    epsilon: object
    degree_sum: int
    involutions: int
    is_simple: bool
    is_nilpotent: bool
    nilpotency_class: Optional[int]
    center_order: int

    def as_dict(self) -> dict:
        return {f: getattr(self, f) for f in self.__dataclass_fields__}


def group_stats(G: FiniteGroup, table) -> GroupStats:
    from .mult import epsilon, snyder_e

    degrees = table.degrees
    ncls = nilpotency_class(G)
    return GroupStats(
        order=G.order,
        k=G.k,
        b=max(degrees),
        e=snyder_e(degrees, G.order),
        epsilon=epsilon(degrees, G.order),
        degree_sum=sum(degrees),
        involutions=involution_count(G),
        is_simple=is_simple(G),
        is_nilpotent=ncls is not None,
        nilpotency_class=ncls,
        center_order=center_order(G),
    )

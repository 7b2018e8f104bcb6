"""Named group families and the descriptor grammar.

Grammar: ``s:<n>``, ``a:<n>``, ``c:<n>``, ``d:<n>``, ``q8``, ``sl2:<p>``,
``gl:<n>:<q>``, ``u:<n>:<q>``, ``prod(<spec>,<spec>)``, ``diag(<spec>)``,
``factor(<spec>)``.  A subgroup pair is written ``<parent>><sub>``.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from sympy import isprime, primitive_root

from .errors import CapExceeded, ParseError
from .groups import (DEFAULT_CAP, FiniteGroup, SubgroupEmbedding, build_group,
                     direct_product, embed, embed_diagonal)
from .perm import Permutation


def split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _int(s, spec):
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected integer in descriptor {spec!r}, got {s!r}") from None


def symmetric(n: int, cap=DEFAULT_CAP) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles([(0, 1)], n))
    if n >= 3:
        gens.append(Permutation.from_cycles([tuple(range(n))], n))
    return build_group(gens, max(n, 1), cap=cap, name=f"s:{n}")


def alternating(n: int, cap=DEFAULT_CAP) -> FiniteGroup:
    gens = [Permutation.from_cycles([(0, 1, i)], n) for i in range(2, n)]
    return build_group(gens, max(n, 1), cap=cap, name=f"a:{n}")


def cyclic(n: int, cap=DEFAULT_CAP) -> FiniteGroup:
    gens = [Permutation.from_cycles([tuple(range(n))], n)] if n > 1 else []
    return build_group(gens, max(n, 1), cap=cap, name=f"c:{n}")


def dihedral(n: int, cap=DEFAULT_CAP) -> FiniteGroup:
    """Dihedral group of order 2n."""
    if n == 1:
        return build_group([Permutation([1, 0])], 2, cap=cap, name="d:1")
    if n == 2:
        return build_group([Permutation([1, 0, 2, 3]), Permutation([0, 1, 3, 2])], 4,
                           cap=cap, name="d:2")
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return build_group([rot, ref], n, cap=cap, name=f"d:{n}")


def quaternion(cap=DEFAULT_CAP) -> FiniteGroup:
    # units 1,i,j,k,-1,-i,-j,-k as 0..7; right multiplication by i and j
    table = {
        ("1", "i"): "i", ("i", "i"): "-1", ("j", "i"): "-k", ("k", "i"): "j",
        ("1", "j"): "j", ("i", "j"): "k", ("j", "j"): "-1", ("k", "j"): "-i",
    }
    names = ["1", "i", "j", "k"]

    def right(u):
        images = []
        for sign in (1, -1):
            for a in names:
                r = table[(a, u)]
                s = sign * (-1 if r.startswith("-") else 1)
                images.append(names.index(r.lstrip("-")) + (0 if s == 1 else 4))
        return Permutation(images)

    return build_group([right("i"), right("j")], 8, cap=cap, name="q8")


@lru_cache(maxsize=None)
def _vectors(n: int, q: int) -> tuple:
    return tuple(v for v in itertools.product(range(q), repeat=n) if any(v))


def _matrix_action(mat, n, q) -> Permutation:
    vecs = _vectors(n, q)
    pos = {v: i for i, v in enumerate(vecs)}
    images = []
    for v in vecs:
        w = tuple(sum(mat[r][c] * v[c] for c in range(n)) % q for r in range(n))
        images.append(pos[w])
    return Permutation(images)


def _elementary(n, i, j, a):
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    m[i][j] = a
    return m


def _check_prime(q, spec):
    if not isprime(q):
        raise ParseError(f"{spec}: field size must be prime (prime powers unsupported)")


def _guard(order, cap, spec):
    if order > cap:
        raise CapExceeded(f"{spec} has order {order}, element cap {cap}")


def special_linear2(p: int, cap=DEFAULT_CAP) -> FiniteGroup:
    _check_prime(p, f"sl2:{p}")
    _guard(p ** 3 - p, cap, f"sl2:{p}")
    gens = [_matrix_action(_elementary(2, 0, 1, 1), 2, p),
            _matrix_action(_elementary(2, 1, 0, 1), 2, p)]
    return build_group(gens, p * p - 1, cap=cap, name=f"sl2:{p}", family={"type": "sl2", "q": p, "rank": 1})


def general_linear(n: int, q: int, cap=DEFAULT_CAP) -> FiniteGroup:
    _check_prime(q, f"gl:{n}:{q}")
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    _guard(order, cap, f"gl:{n}:{q}")
    mats = [_elementary(n, i, j, 1) for i in range(n) for j in range(n) if i != j]
    if q > 2:
        d = [[int(r == c) for c in range(n)] for r in range(n)]
        d[0][0] = int(primitive_root(q))
        mats.append(d)
    gens = [_matrix_action(m, n, q) for m in mats]
    return build_group(gens, q ** n - 1, cap=cap, name=f"gl:{n}:{q}",
                       family={"type": "gl", "n": n, "q": q, "rank": n})


def unitriangular(n: int, q: int, cap=DEFAULT_CAP) -> FiniteGroup:
    _check_prime(q, f"u:{n}:{q}")
    _guard(q ** (n * (n - 1) // 2), cap, f"u:{n}:{q}")
    gens = [_matrix_action(_elementary(n, i, i + 1, 1), n, q) for i in range(n - 1)]
    return build_group(gens, q ** n - 1, cap=cap, name=f"u:{n}:{q}",
                       family={"type": "u", "n": n, "q": q})


def family_group(spec: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build the group named by a descriptor.  ``diag``/``factor`` give H x H."""
    spec = spec.strip().lower()
    if spec.startswith(("prod(", "diag(", "factor(")):
        head, _, rest = spec.partition("(")
        if not rest.endswith(")"):
            raise ParseError(f"unbalanced parentheses in {spec!r}")
        args = split_top(rest[:-1], ",")
        if head == "prod":
            if len(args) != 2:
                raise ParseError(f"prod takes two arguments: {spec!r}")
            A, B = family_group(args[0], cap), family_group(args[1], cap)
            return direct_product(A, B, cap=cap, name=f"prod({A.name},{B.name})")
        if len(args) != 1:
            raise ParseError(f"{head} takes one argument: {spec!r}")
        return embedding_from_spec(spec, cap).parent
    parts = spec.split(":")
    kind, args = parts[0], [_int(a, spec) for a in parts[1:]]
    arity = {"s": 1, "a": 1, "c": 1, "d": 1, "q8": 0, "sl2": 1, "gl": 2, "u": 2}
    if kind not in arity:
        raise ParseError(f"unknown family {kind!r} in {spec!r}")
    if len(args) != arity[kind] or any(a < 1 for a in args):
        raise ParseError(f"bad parameters in {spec!r}")
    builders = {
        "s": symmetric, "a": alternating, "c": cyclic, "d": dihedral,
        "sl2": special_linear2, "gl": general_linear, "u": unitriangular,
    }
    if kind == "q8":
        return quaternion(cap)
    return builders[kind](*args, cap=cap)


def is_pair_spec(spec: str) -> bool:
    spec = spec.strip().lower()
    return spec.startswith(("diag(", "factor(")) or len(split_top(spec, ">")) == 2


def natural_embedding(parent: FiniteGroup, sub: FiniteGroup) -> SubgroupEmbedding:
    """Embed ``sub`` by letting it act on the first points of ``parent``."""
    if sub.degree > parent.degree:
        raise ParseError(f"{sub.name} (degree {sub.degree}) does not fit in {parent.name}")
    emb = embed(parent, [g.padded(parent.degree) for g in sub.generators], name=sub.name)
    emb.label = f"{parent.name}>{sub.name}"
    return emb


def embedding_from_spec(spec: str, cap: int = DEFAULT_CAP) -> SubgroupEmbedding:
    spec = spec.strip().lower()
    for head, factor in (("diag(", False), ("factor(", True)):
        if spec.startswith(head) and spec.endswith(")"):
            H = family_group(spec[len(head):-1], cap)
            return embed_diagonal(H, factor=factor, cap=cap)
    parts = split_top(spec, ">")
    if len(parts) != 2:
        raise ParseError(f"not a subgroup-pair descriptor: {spec!r}")
    parent = family_group(parts[0], cap)
    sub = family_group(parts[1], cap)
    return natural_embedding(parent, sub)

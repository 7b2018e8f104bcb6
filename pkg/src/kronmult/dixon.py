"""Dixon-Schneider computation of exact character tables."""
from __future__ import annotations

import logging
import random

from .chartab import CharacterTable, sort_rows
from .cyclotomic import Cyclotomic
from .groups import FiniteGroup
from .modular import (charpoly, dixon_prime, nullspace, root_of_unity, roots, rref,
                      sqrt_mod_bounded)
from .perm import compose, invert

log = logging.getLogger(__name__)


def class_coefficients(G: FiniteGroup) -> list[list[list[int]]]:
    """a[j][i][l] = #{x in C_j : x^-1 z_l in C_i} for a fixed z_l in C_l."""
    k = G.k
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    inverses = [invert(x) for x in G.elements]
    cls = G.class_of
    index = G.index
    for l, c in enumerate(G.classes):
        z = c.representative.images
        for x, xi in zip(range(len(inverses)), inverses):
            i = cls[index[compose(xi, z)]]
            a[cls[x]][i][l] += 1
    return a


def _restrict(mat, basis, pivots, p):
    """Matrix of ``mat`` on the invariant subspace spanned by ``basis`` (RREF rows)."""
    k = len(mat)
    images = []
    for b in basis:
        img = [sum(mat[i][l] * b[l] for l in range(k) if b[l]) % p for i in range(k)]
        images.append([img[c] for c in pivots])
    d = len(basis)
    return [[images[t][s] for t in range(d)] for s in range(d)]


def _split(space, mat, p):
    basis, pivots = space
    d = len(basis)
    R = _restrict(mat, basis, pivots, p)
    eig = roots(charpoly(R, p), p)
    pieces = []
    for lam in eig:
        shifted = [[(R[s][t] - (lam if s == t else 0)) % p for t in range(d)] for s in range(d)]
        coords = nullspace(shifted, p)
        vecs = [[sum(c[t] * basis[t][i] for t in range(d)) % p for i in range(len(basis[0]))]
                for c in coords]
        pieces.append(rref(vecs, p))
    if sum(len(b) for b, _ in pieces) != d:
        raise ArithmeticError("class matrix is not diagonalisable on a common eigenspace")
    return pieces


def _common_eigenvectors(matrices, k, p, seed):
    spaces = [rref([[int(i == j) for j in range(k)] for i in range(k)], p)]
    for mat in matrices:
        if all(len(b) == 1 for b, _ in spaces):
            break
        nxt = []
        for sp in spaces:
            nxt.extend(_split(sp, mat, p) if len(sp[0]) > 1 else [sp])
        spaces = nxt
    rng = random.Random(seed)
    tries = 0
    while any(len(b) > 1 for b, _ in spaces):
        tries += 1
        if tries > 50:
            raise ArithmeticError("eigenspace splitting failed")
        log.debug("falling back to a random combination of class matrices")
        coeffs = [rng.randrange(p) for _ in matrices]
        combo = [[sum(c * m[i][j] for c, m in zip(coeffs, matrices)) % p for j in range(k)]
                 for i in range(k)]
        nxt = []
        for sp in spaces:
            nxt.extend(_split(sp, combo, p) if len(sp[0]) > 1 else [sp])
        spaces = nxt
    return [b[0] for b, _ in spaces]


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    k, n = G.k, G.order
    e = G.exponent()
    p = dixon_prime(e, n)
    sizes = [c.size for c in G.classes]
    inv_class = [G.class_index(invert(c.representative.images)) for c in G.classes]
    a = class_coefficients(G)
    matrices = [a[j] for j in range(1, k)]
    vectors = _common_eigenvectors(matrices, k, p, seed)
    if len(vectors) != k:
        raise ArithmeticError(f"found {len(vectors)} characters, expected {k}")

    zeta = root_of_unity(e, p)
    powers = [[G.power_map(i, s) for s in range(c.element_order)] for i, c in enumerate(G.classes)]
    rows = []
    for w in vectors:
        w0 = pow(w[0], -1, p)
        w = [x * w0 % p for x in w]
        s = sum(w[i] * w[inv_class[i]] * pow(sizes[i], -1, p) for i in range(k)) % p
        d = sqrt_mod_bounded(n * pow(s, -1, p) % p, p, int(n ** 0.5) + 1)
        chi = [w[i] * d * pow(sizes[i], -1, p) % p for i in range(k)]
        row = []
        for i, c in enumerate(G.classes):
            o = c.element_order
            eta = pow(zeta, e // o, p)
            inv_o = pow(o, -1, p)
            terms = {}
            for r in range(o):
                m = sum(chi[powers[i][s]] * pow(eta, (-r * s) % o, p) for s in range(o)) * inv_o % p
                if m > d:
                    raise ArithmeticError(f"root multiplicity {m} exceeds degree {d}")
                if m:
                    terms[r] = m
            row.append(Cyclotomic.from_terms(terms, o))
        rows.append(row)
    table = CharacterTable(G.name, n, [c.centralizer_order for c in G.classes], sort_rows(rows),
                           group=G)
    table.validate()
    return table

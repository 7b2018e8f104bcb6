from hypothesis import given, strategies as st

from kronmult.modular import charpoly, dixon_prime, nullspace, roots, rref, sqrt_mod_bounded, root_of_unity


def test_dixon_prime():
    p = dixon_prime(6, 6)
    assert p % 6 == 1 and p * p > 24
    q = dixon_prime(30, 120)
    assert q % 30 == 1 and q * q > 480


def test_root_of_unity_has_exact_order():
    p = 31
    w = root_of_unity(6, p)
    assert pow(w, 6, p) == 1 and all(pow(w, d, p) != 1 for d in (1, 2, 3))


def test_rref_and_nullspace():
    p = 7
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    basis, piv = rref(m, p)
    assert len(basis) == 2
    ns = nullspace(m, p)
    assert len(ns) == 1
    assert all(sum(a * b for a, b in zip(row, ns[0])) % p == 0 for row in m)


@given(st.lists(st.integers(0, 12), min_size=1, max_size=5, unique=True))
def test_charpoly_roots_of_diagonal(diag):
    p = 13
    m = [[diag[i] if i == j else 0 for j in range(len(diag))] for i in range(len(diag))]
    f = charpoly(m, p)
    assert roots(f, p) == sorted(set(diag))


def test_sqrt_bounded():
    p = 101
    assert sqrt_mod_bounded(49, p, 20) == 7
    assert sqrt_mod_bounded(pow(13, 2, p), p, 50) == 13

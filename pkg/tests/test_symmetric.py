import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from kronmult.errors import CapExceeded
from kronmult.symmetric import (VK_C1, VK_C2, Partition, cycle_type_class, hardy_ramanujan,
                                hook_degree, involution_numbers, mn_value, partition_count,
                                partitions, sn_character_table, sn_degree_stats, vk_window)
from oracles import dp_partition_count, naive_partitions, naive_sn_character


def test_partition_counts():
    assert [partition_count(n) for n in (0, 1, 5)] == [1, 1, 7]
    assert partition_count(100) == 190569292 == dp_partition_count(100)
    assert [tuple(p) for p in partitions(5)] == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1),
                                                  (2, 1, 1, 1), (1, 1, 1, 1, 1)]


@given(st.integers(0, 60))
def test_partition_count_matches_dp(n):
    assert partition_count(n) == dp_partition_count(n)


def test_partitions_agree_with_naive_generator():
    for n in range(9):
        assert [tuple(p) for p in partitions(n)] == list(naive_partitions(n))


def test_hook_degrees():
    assert hook_degree((4,)) == 1
    assert hook_degree((2, 1)) == 2
    assert hook_degree((9, 4)) == 429
    assert Partition((3, 1)).conjugate() == (2, 1, 1)


def test_degree_stats_examples():
    s = sn_degree_stats(1)
    assert (s.b, s.M, s.f, s.epsilon) == (1, 1, 1, 0)
    s = sn_degree_stats(5)
    assert s.b == 6 and [tuple(p) for p in s.argmax] == [(3, 1, 1)]
    assert sum(hook_degree(p) ** 2 for p in partitions(5)) == 120


def test_f13():
    s = sn_degree_stats(13)
    assert s.f == 6
    assert 429 in s.f_fibers
    assert sorted(tuple(p) for p in s.f_fibers[429]) == sorted(
        [(9, 4), (7, 6), (10, 2, 1), (3, 2) + (1,) * 8, (2,) * 6 + (1,), (2,) * 4 + (1,) * 5])


def test_sn_cap():
    with pytest.raises(CapExceeded):
        sn_degree_stats(61)


def test_involutions_match_degree_sums():
    inv = involution_numbers(10)
    for n in range(1, 9):
        brute = sum(1 for p in itertools.permutations(range(n))
                    if all(p[p[i]] == i for i in range(n)))
        assert inv[n] == brute == sum(hook_degree(l) for l in partitions(n))


def test_asymptotic_helpers():
    assert abs(hardy_ramanujan(10) - 48.1) < 0.1
    assert 1.0 <= hardy_ramanujan(100) / partition_count(100) <= 1.10
    assert round(VK_C1, 4) == 1.2825 and round(VK_C2, 4) == 0.1157
    lo, hi = vk_window(20)
    assert lo < hi < math.sqrt(math.factorial(20))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.sampled_from(list(naive_partitions(n))),
                                                     st.sampled_from(list(naive_partitions(n))))))
def test_mn_matches_rim_hook_oracle(pair):
    lam, mu = pair
    assert mn_value(Partition(lam), mu) == naive_sn_character(lam, mu)


def test_table_layout():
    t = sn_character_table(5)
    assert list(t.class_labels[0]) == [1, 1, 1, 1, 1]
    assert [row[0].to_rational() for row in t.values] == [hook_degree(p) for p in t.row_labels]
    assert sum(t.class_sizes) == 120
    assert cycle_type_class((2, 1, 1, 1)) == (10, 12, 2)
    from kronmult.mult import kron_sum_squares
    assert kron_sum_squares(t) == sum(t.centralizers)

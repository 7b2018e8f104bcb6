import io

import pytest

from kronmult.chartab import (ClassData, conjugate_irrep, diagonal_fusion, inner_product,
                              product_table, restrict)
from kronmult.cyclotomic import Cyclotomic
from kronmult.dixon import character_table
from kronmult.errors import ConsistencyError, FusionMismatch, ParseError
from kronmult.families import embedding_from_spec, family_group
from kronmult.groups import class_fusion
from kronmult.symmetric import sn_character_table
from kronmult.tableio import format_table, parse_class_data, parse_table, write_table
from oracles import cycle_type


@pytest.mark.parametrize("spec,degrees", [
    ("c:3", [1, 1, 1]),
    ("s:3", [1, 1, 2]),
    ("s:4", [1, 1, 2, 3, 3]),
    ("q8", [1, 1, 1, 1, 2]),
    ("a:5", [1, 3, 3, 4, 5]),
    ("sl2:5", [1, 2, 2, 3, 3, 4, 4, 5, 6]),
    ("gl:2:3", [1, 1, 2, 2, 2, 3, 3, 4]),
])
def test_degrees(table, spec, degrees):
    t = table(spec)
    assert list(t.degrees) == degrees
    assert sum(d * d for d in t.degrees) == t.order
    t.validate()


def test_trivial_character_first(table):
    for spec in ("s:4", "c:5", "sl2:7", "u:3:3"):
        assert all(v == 1 for v in table(spec).values[0])


def test_c3_values_are_cube_roots(table):
    t = table("c:3")
    z = Cyclotomic.root(3)
    for row in t.values[1:]:
        assert {v for v in row} == {Cyclotomic.rational(1), z, z * z}
    assert conjugate_irrep(t, 1) == 2 and conjugate_irrep(t, 2) == 1


def test_real_tables(table):
    for spec in ("sl2:5", "s:5"):
        t = table(spec)
        assert t.is_real()
        assert list(t.conj_perm) == list(range(t.k))


def test_orthonormal_rows(table):
    t = table("d:5")
    for i in range(t.k):
        for j in range(t.k):
            assert inner_product(t, i, j) == (1 if i == j else 0)


def test_inner_product_of_product(table):
    t = table("s:3")
    std = t.values[2]
    square = [x * x for x in std]
    assert inner_product(t, square, 2) == 1


def test_restriction_s3_to_s2(table):
    f = class_fusion(embedding_from_spec("s:3>s:2"))
    t = table("s:3")
    assert [v.to_rational() for v in restrict(t, f, 2)] == [2, 0]
    assert all(v == 1 for v in restrict(t, f, 0))


def test_restriction_rejects_wrong_table(table):
    f = class_fusion(embedding_from_spec("s:3>s:2"))
    with pytest.raises(FusionMismatch):
        restrict(table("s:4"), f, 0)


def _align_by_cycle_type(dixon_t, G):
    """Column permutation sending each Dixon class to the matching cycle-type column."""
    return [cycle_type(c.representative.images) for c in G.classes]


@pytest.mark.parametrize("n", range(1, 8))
def test_dixon_matches_murnaghan_nakayama(n):
    G = family_group(f"s:{n}")
    td = character_table(G)
    tm = sn_character_table(n)
    ours = _align_by_cycle_type(td, G)
    labels = list(tm.class_labels)
    perm = [labels.index(mu) for mu in ours]
    mn_rows = {tuple(row[j] for j in perm) for row in tm.values}
    assert {tuple(row) for row in td.values} == mn_rows


def test_dixon_is_deterministic():
    G = family_group("sl2:7")
    assert character_table(G, seed=0) == character_table(G, seed=0)


def test_product_table_and_diagonal_fusion(table):
    t = table("s:3")
    p = product_table(t, t)
    assert (p.order, p.k) == (36, 9)
    p.validate()
    f = diagonal_fusion(t, p)
    assert f.fusion == [0, 4, 8]
    assert f.z_parent == [z * z for z in t.centralizers]
    assert diagonal_fusion(t, None, factor=True).z_parent == [6 * z for z in t.centralizers]


def test_table_roundtrip(table, tmp_path):
    for spec in ("s:3", "c:5", "q8", "sl2:5"):
        t = table(spec)
        path = tmp_path / "t.txt"
        write_table(t, path)
        assert parse_table(path) == t
        assert parse_table(format_table(t)) == t
        assert parse_table(io.StringIO(format_table(t))) == t


def test_class_data_without_values():
    cd = parse_class_data("group toy\norder 6\nclasses 3\ncentralizers\n6 2\n3\ndegrees\n1 1 2\n")
    assert cd.k == 3 and cd.degrees == [1, 1, 2]
    cd.validate()


def test_bad_degrees_are_rejected():
    with pytest.raises(ConsistencyError):
        parse_class_data("group toy\norder 6\nclasses 3\ncentralizers\n6 2 3\ndegrees\n1 1 1\n").validate()
    with pytest.raises(ConsistencyError):
        ClassData("x", 6, [6, 2, 2]).validate()


@pytest.mark.parametrize("text,line", [
    ("group toy\norder six\n", 2),
    ("group toy\norder 6\nclasses 3\ncentralizers\n6 2 x\n", 5),
    ("group toy\norder 6\nbogus 3\n", 3),
])
def test_parse_errors_report_position(text, line):
    with pytest.raises(ParseError) as info:
        parse_class_data(text)
    assert info.value.line == line and info.value.column is not None

import json

import pytest

from kronmult.chartab import ClassData
from kronmult.errors import MissingInput
from kronmult.verify import (CORE_GROUPS, CORE_PAIRS, FAILS, HOLDS, INAPPLICABLE, MONSTER_A,
                             MONSTER_ORDER, REGISTRY, CheckResult, check, counterexample_scan,
                             expand_targets, monster_quantities, monster_report, run_suite,
                             same_3sig, sweep_pairs)


def test_registry_covers_named_checks():
    expected = {"thm1_1", "thm1_2", "thm1_3", "thm1_4", "prop7_1", "prop7_4", "prop7_6",
                "lemma7_2", "lemma8_2", "lemma8_4", "cor8_3", "cor8_5", "kron_upper", "kron_sym",
                "burnside", "dim_bounds", "hls_gap", "ks_cuberoot", "gallagher", "sherman",
                "permgroup_k", "gr_center", "fg_classcount", "sl2_formulas", "unitriangular_b",
                "glnq_order", "remark1_5_diag", "remark1_5_factor", "mckay_sn", "spec9_5"}
    assert expected == set(REGISTRY)


def test_spec_examples():
    r = check("thm1_1", "s:3")
    assert r.verdict == HOLDS and r.value == 1
    r = check("gallagher", "s:3>s:2")
    assert r.verdict == HOLDS and (r.lhs, r.value, r.rhs) == ("2/3", 3, 6)
    r = check("sherman", "u:3:3")
    assert r.verdict == HOLDS and r.rhs == 11
    r = check("sl2_formulas", "sl2:7")
    assert r.verdict == HOLDS and r.lhs == [336, 11, 8]
    r = check("spec9_5", "s:4>s:3")
    assert r.verdict == HOLDS and r.category == "observation" and r.lhs == 1


def test_existential_checks_show_witnesses():
    r = check("thm1_2", "s:4")
    assert r.verdict == HOLDS and len(r.witness) == 25
    r = check("thm1_4", "s:4>d:4")
    assert r.verdict == HOLDS and len(r.witness) == 5


def test_inapplicable_carries_reason():
    r = check("hls_gap", "c:1")
    assert r.verdict == INAPPLICABLE and r.reason
    assert check("ks_cuberoot", "s:4").verdict == INAPPLICABLE
    assert check("thm1_3", "s:4").verdict == INAPPLICABLE
    assert check("sl2_formulas", "sl2:3").verdict == INAPPLICABLE
    with pytest.raises(ValueError):
        CheckResult("x", "t", 1, 2, INAPPLICABLE, "ref")
    with pytest.raises(ValueError):
        CheckResult("x", "t", 1, 2, FAILS, "ref")


def test_counterexamples_to_quoted_bounds_are_reported():
    r = check("gr_center", "s:3")
    assert r.verdict == FAILS and r.witness == {"k": 3, "order": 6}
    assert check("hls_gap", "q8").verdict == FAILS
    assert check("ks_cuberoot", "a:5").verdict == HOLDS


def test_run_suite_examples():
    rep = run_suite(["s:3..6"], ["lemma7_2"])
    assert len(rep.results) == 4 and all(r.verdict == HOLDS for r in rep.results)
    assert run_suite(["s:3"], []).results == []
    bad = run_suite(["nope:3", "s:3"], ["burnside"])
    assert [r.verdict for r in bad.results] == [INAPPLICABLE, HOLDS]


def test_unknown_check():
    with pytest.raises(MissingInput):
        run_suite(["s:3"], ["no_such_check"])


def test_expand_targets():
    assert expand_targets(["c:2..4", "q8"]) == ["c:2", "c:3", "c:4", "q8"]
    assert expand_targets(["core"]) == CORE_GROUPS + CORE_PAIRS


def test_reports_are_deterministic():
    a = run_suite(["s:3", "s:4>a:4"], list(REGISTRY))
    b = run_suite(["s:3", "s:4>a:4"], list(REGISTRY), threads=2)
    assert a.body_lines() == b.body_lines() and a.digest() == b.digest()
    lines = a.to_jsonl().splitlines()
    header = json.loads(lines[0])
    assert header["digest"] == a.digest() and "started" in header["timing"]
    for line in lines[1:]:
        row = json.loads(line)
        assert row["schema"] == "kronmult.check/1"
        assert row["verdict"] in (HOLDS, FAILS, INAPPLICABLE)
    assert a.to_csv().splitlines()[0].startswith("target,check")
    assert a.to_text().rstrip().splitlines()[-1].startswith("--")


def test_scan():
    assert counterexample_scan("spec9_5", "").results == []
    pairs = sweep_pairs("s:4")
    assert "s:4>prod(s:3,s:1)" in pairs and "s:4>a:4" in pairs and "factor(s:4)" in pairs
    rep = counterexample_scan("remark1_5_factor", "s:3 s:4 d:4")
    assert [r.verdict for r in rep.results] == [HOLDS] * 3


def test_scan_surfaces_observation_violations():
    rep = counterexample_scan("spec9_5", "s:5>d:5 s:5>prod(s:3,s:2)")
    bad, good = rep.results
    assert bad.verdict == FAILS and bad.witness["C"] == 2
    assert good.verdict == HOLDS
    assert rep.ok  # observations never fail the suite


def test_monster_constants_are_consistent():
    # centralizers of the classes 2A, 2B, 3A: 2|B|, 2^25 |Co1|, 3 |Fi24'|
    baby = 4154781481226426191177580544000000
    co1 = 4157776806543360000
    fi24 = 1255205709190661721292800
    remainder = MONSTER_A - MONSTER_ORDER - 2 * baby - 2 ** 25 * co1 - 3 * fi24
    assert same_3sig(remainder, 1.00e19)
    b = 258823477531055064045234375
    assert MONSTER_ORDER % b == 0
    assert same_3sig(b, 2.59e26)


def test_monster_report_mechanics():
    toy = ClassData("c:194", 194, [194] * 194, degrees=[1] * 194)
    rep = monster_report(toy)
    verdicts = {r.check_name: r.verdict for r in rep.results}
    assert verdicts["monster_order"] == FAILS and verdicts["monster_K"] == INAPPLICABLE
    assert monster_quantities(toy)["A"] == 194 * 194
    with pytest.raises(MissingInput):
        monster_report(ClassData("s3", 6, [6, 2, 3]))
